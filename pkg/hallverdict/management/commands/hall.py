"""looks up Hall subgroups of symmetric, alternating and sporadic groups

run the script:
    ./hall-verdict hall --sym 7 --pi 2,3
    ./hall-verdict hall --sporadic M23 --pi 2,3,5,7,11
"""

from django.core.management.base import BaseCommand, CommandError

from hallverdict.core.catalogfunctions import hall_alternating, hall_sporadic, hall_symmetric
from hallverdict.schemas.primeset_schema import PrimeSet
from hallverdict.utils.constants import EXIT_ERROR, SCHEMA_VERSION
from hallverdict.utils.custom_logger import CustomLogger
from hallverdict.utils.errors import HallVerdictError
from hallverdict.utils.helpers import dump_json

logger = CustomLogger("hallverdict")


class Command(BaseCommand):
    """
    Prints the matching table rows as JSON
    """

    help = "Lists the pi-Hall subgroups of Sym(n), Alt(n) or a sporadic group"

    def add_arguments(self, parser):  # skipcq: PYL-R0201
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument("--sym", type=int, help="degree of the symmetric group")
        group.add_argument("--alt", type=int, help="degree of the alternating group")
        group.add_argument("--sporadic", help="name of the sporadic group, e.g. M23")
        parser.add_argument("--pi", required=True, help='the primes, e.g. "2,3"')

    def handle(self, *args, **options):
        try:
            pi = PrimeSet.parse(options["pi"])
            if options["sym"] is not None:
                group = f"Sym({options['sym']})"
                found = hall_symmetric(options["sym"], pi)
                records = [found] if found else []
            elif options["alt"] is not None:
                group = f"Alt({options['alt']})"
                found = hall_alternating(options["alt"], pi)
                records = [found] if found else []
            else:
                group = f"Spor({options['sporadic']})"
                records = hall_sporadic(options["sporadic"], pi)
        except HallVerdictError as error:
            logger.error("hall lookup failed: %s", str(error))
            raise CommandError(str(error), returncode=EXIT_ERROR) from error

        report = {
            "schema": SCHEMA_VERSION,
            "group": group,
            "pi": pi.describe(),
            "records": [record.report() for record in records],
        }
        self.stdout.write(dump_json(report), ending="")
