"""decides D_X membership of a group given by composition factors or permutation generators

run the script:
    ./hall-verdict classify --factors "Alt(5),Cyc(2)" --pi 2,3
    ./hall-verdict classify --gens hallverdict/assets/generators/psl27.gens --pi 3,7
    ./hall-verdict classify --factors "Lie(2B2,1,8)" --pi 2,3 --class spi

exit status: 0 when the verdict is true, 1 when it is false, 2 on errors
"""

from django.core.management.base import BaseCommand, CommandError

from hallverdict.core.classifierfunctions import dx_group
from hallverdict.groups.descriptors import parse_descriptor_list
from hallverdict.oracle.oracle_service import composition_factors
from hallverdict.oracle.permgroup import generate, load_generators
from hallverdict.schemas.verdict_schema import RULE_ALL_PI_GROUPS, RULE_SOLVABLE_ONLY, ClassSpec
from hallverdict.utils.constants import EXIT_ERROR, EXIT_VERDICT_FALSE
from hallverdict.utils.custom_logger import CustomLogger
from hallverdict.utils.errors import HallVerdictError
from hallverdict.utils.helpers import dump_json, parse_pi

logger = CustomLogger("hallverdict")


class Command(BaseCommand):
    """
    Prints the verdict and the per-factor explanation as JSON
    """

    help = "Decides whether all X-maximal subgroups of a group are conjugate"

    def add_arguments(self, parser):  # skipcq: PYL-R0201
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--factors", help='composition factors, e.g. "Alt(5),Cyc(2)"')
        source.add_argument("--gens", help="permutation generator file")
        primes = parser.add_mutually_exclusive_group(required=True)
        primes.add_argument("--pi", help='the primes of the class, e.g. "2,3"')
        primes.add_argument("--cofinite-pi", help='every prime but these, e.g. "excluded:7,11"')
        parser.add_argument(
            "--class",
            dest="rule",
            choices=[RULE_ALL_PI_GROUPS, RULE_SOLVABLE_ONLY],
            default=RULE_ALL_PI_GROUPS,
            help="gpi: all pi-groups, spi: solvable pi-groups",
        )
        parser.add_argument(
            "--weyl-excludes-p",
            action="store_true",
            default=None,
            help="Condition III: only primes of pi other than p must not divide |W|",
        )

    def handle(self, *args, **options):
        try:
            pi = parse_pi(options["pi"], options["cofinite_pi"])
            if options["rule"] == RULE_SOLVABLE_ONLY:
                class_spec = ClassSpec.solvable_only(pi)
            else:
                class_spec = ClassSpec.all_pi_groups(pi)
            if options["factors"] is not None:
                factors = parse_descriptor_list(options["factors"])
            else:
                factors = composition_factors(generate(load_generators(options["gens"])))
            verdict = dx_group(factors, class_spec, options["weyl_excludes_p"])
        except HallVerdictError as error:
            logger.error("classify failed: %s", str(error))
            raise CommandError(str(error), returncode=EXIT_ERROR) from error

        self.stdout.write(dump_json(verdict.report()), ending="")
        if not verdict.answer:
            raise SystemExit(EXIT_VERDICT_FALSE)
