"""brute-force checks on a permutation group

run the script:
    ./hall-verdict oracle --gens hallverdict/assets/generators/a5.gens --pi 2,3 --check maximal
    ./hall-verdict oracle --gens hallverdict/assets/generators/s5.gens --check factors
"""

from django.core.management.base import BaseCommand, CommandError

from hallverdict.oracle import oracle_service
from hallverdict.oracle.permgroup import generate, load_generators
from hallverdict.utils.constants import EXIT_ERROR, SCHEMA_VERSION
from hallverdict.utils.custom_logger import CustomLogger
from hallverdict.utils.errors import HallVerdictError, InvalidInput
from hallverdict.utils.helpers import dump_json, parse_pi

logger = CustomLogger("hallverdict")

CHECKS = ["dpi", "hall", "maximal", "factors", "subgroups"]


def _class_rows(classes) -> list:
    rows = [entry.report() for entry in classes]
    return sorted(rows, key=lambda row: (-row["order"], row["count"], row["maximal"]))


def run_check(group, check: str, pi=None) -> dict:
    """the report of one oracle computation"""
    report = {"schema": SCHEMA_VERSION, "order": group.order, "check": check}
    if check == "factors":
        factors = oracle_service.composition_factors(group)
        report["factors"] = [factor.label for factor in factors]
        return report
    if pi is None:
        raise InvalidInput(f"--check {check} needs --pi")
    report["pi"] = pi.describe()
    if check == "dpi":
        report["dpi"] = oracle_service.is_dpi(group, pi)
        report["classes"] = len(oracle_service.pi_maximal_classes(group, pi))
    elif check == "hall":
        report["hall"] = oracle_service.hall_exists(group, pi)
    elif check == "maximal":
        report["classes"] = [
            {"order": row["order"], "count": row["count"]}
            for row in _class_rows(oracle_service.pi_maximal_classes(group, pi))
        ]
    else:
        report["classes"] = _class_rows(oracle_service.subgroup_classes(group, pi))
    return report


class Command(BaseCommand):
    """
    Prints the requested oracle computation as JSON
    """

    help = "Runs a brute-force check on the group generated by a permutation file"

    def add_arguments(self, parser):  # skipcq: PYL-R0201
        parser.add_argument("--gens", required=True, help="permutation generator file")
        primes = parser.add_mutually_exclusive_group()
        primes.add_argument("--pi", help='the primes, e.g. "2,3"')
        primes.add_argument("--cofinite-pi", help='every prime but these, e.g. "excluded:7"')
        parser.add_argument("--check", choices=CHECKS, required=True)

    def handle(self, *args, **options):
        try:
            pi = None
            if options["pi"] is not None or options["cofinite_pi"] is not None:
                pi = parse_pi(options["pi"], options["cofinite_pi"])
            group = generate(load_generators(options["gens"]))
            report = run_check(group, options["check"], pi)
        except HallVerdictError as error:
            logger.error("oracle %s failed: %s", options["check"], str(error))
            raise CommandError(str(error), returncode=EXIT_ERROR) from error

        self.stdout.write(dump_json(report), ending="")
