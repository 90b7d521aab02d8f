import json
from pathlib import Path
from typing import Any, List

from django.conf import settings

from hallverdict.schemas.primeset_schema import COFINITE_PREFIX, PrimeSet
from hallverdict.utils.errors import InvalidInput


def dump_json(obj: Any) -> str:
    """
    serialize a report so that the same input always gives the same bytes:
    sorted keys, fixed indentation, trailing newline
    """
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def seed_path(filename: str) -> Path:
    """location of a seed file, honouring HV_SEED_DIR"""
    return Path(settings.SEED_DIR) / filename


def load_seed(filename: str, model: str) -> List[dict]:
    """
    the `fields` of every fixture row of the given model in a seed file;
    seed files use the django fixture layout [{"model", "pk", "fields"}, ...]
    """
    path = seed_path(filename)
    if not path.exists():
        raise InvalidInput(f"seed file {path} not found")
    with open(path, "r", encoding="utf-8") as seed_file:
        rows = json.load(seed_file)
    return [
        row["fields"] for row in sorted(rows, key=lambda row: row["pk"]) if row["model"] == model
    ]


def parse_pi(pi_text: str = None, cofinite_text: str = None) -> PrimeSet:
    """the PrimeSet named by --pi or --cofinite-pi; exactly one of them is given"""
    if (pi_text is None) == (cofinite_text is None):
        raise InvalidInput("give exactly one of --pi and --cofinite-pi")
    if pi_text is not None:
        return PrimeSet.parse(pi_text)
    if not cofinite_text.strip().startswith(COFINITE_PREFIX):
        cofinite_text = COFINITE_PREFIX + cofinite_text
    return PrimeSet.parse(cofinite_text)
