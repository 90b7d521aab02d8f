"""the number-theoretic primitives, one at a time

run the script:
    ./hall-verdict arith factor 168
    ./hall-verdict arith order 2 7
    ./hall-verdict arith prod-rpart 4 10 5 --signed
"""

from django.core.management.base import BaseCommand, CommandError

from hallverdict.arith import arith_service
from hallverdict.utils.constants import EXIT_ERROR, SCHEMA_VERSION
from hallverdict.utils.custom_logger import CustomLogger
from hallverdict.utils.errors import HallVerdictError, InvalidInput
from hallverdict.utils.helpers import dump_json

logger = CustomLogger("hallverdict")

# operation -> (argument names, takes --signed)
OPERATIONS = {
    "factor": (["n"], False),
    "order": (["q", "r"], False),
    "estar": (["e"], False),
    "epsilon": (["q"], False),
    "rpart": (["n", "r"], False),
    "factorial-rpart": (["n", "r"], False),
    "prod-rpart": (["q", "n", "r"], True),
    "fermat": (["t"], False),
}


def evaluate(operation: str, values: list, signed: bool = False):
    """run one operation on integer arguments"""
    names, takes_signed = OPERATIONS[operation]
    if len(values) != len(names):
        raise InvalidInput(f"{operation} takes {len(names)} argument(s): {' '.join(names)}")
    if signed and not takes_signed:
        raise InvalidInput(f"--signed does not apply to {operation}")
    if operation == "factor":
        return [list(entry) for entry in arith_service.prime_factorization(values[0]).factors]
    if operation == "order":
        return arith_service.mult_order(*values)
    if operation == "estar":
        return arith_service.e_star(values[0])
    if operation == "epsilon":
        return arith_service.epsilon_of(values[0])
    if operation == "rpart":
        return arith_service.r_part(*values)
    if operation == "factorial-rpart":
        return arith_service.factorial_r_part(*values)
    if operation == "prod-rpart":
        return arith_service.prod_r_part(*values, signed)
    return arith_service.fermat_prime_test(values[0])


class Command(BaseCommand):
    """
    Prints {op, args, result} as JSON
    """

    help = "Evaluates one arithmetic primitive"

    def add_arguments(self, parser):  # skipcq: PYL-R0201
        parser.add_argument("op", choices=list(OPERATIONS), help="the operation")
        parser.add_argument("values", type=int, nargs="+", help="integer arguments")
        parser.add_argument("--signed", action="store_true", help="use q^i - (-1)^i")

    def handle(self, *args, **options):
        try:
            result = evaluate(options["op"], options["values"], options["signed"])
        except HallVerdictError as error:
            logger.error("arith %s failed: %s", options["op"], str(error))
            raise CommandError(str(error), returncode=EXIT_ERROR) from error

        report = {
            "schema": SCHEMA_VERSION,
            "op": options["op"],
            "args": options["values"],
            "signed": options["signed"],
            "result": result,
        }
        self.stdout.write(dump_json(report), ending="")
