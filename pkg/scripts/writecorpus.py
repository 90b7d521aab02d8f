"""rewrites the generator files of the oracle corpus from their field-arithmetic construction

python scripts/writecorpus.py --yes [--only psl33]
"""

import os
import sys
import argparse
from pathlib import Path

import django

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "hallverdict.settings")
django.setup()

# pylint: disable=wrong-import-position
from hallverdict.oracle.corpus import CORPUS, corpus_file, corpus_generators
from hallverdict.oracle.permgroup import format_permutation

parser = argparse.ArgumentParser()
parser.add_argument("--yes", action="store_true")
parser.add_argument("--only", choices=sorted(CORPUS))
args = parser.parse_args()

if not args.yes:
    parser.print_usage()
    sys.exit(0)

for name in [args.only] if args.only else sorted(CORPUS):
    path = corpus_file(name)
    with open(path, "r", encoding="utf-8") as gens_file:
        header = [line for line in gens_file.read().splitlines() if line.startswith("#")]
    lines = header + [format_permutation(gen) for gen in corpus_generators(name)]
    with open(path, "w", encoding="utf-8") as gens_file:
        gens_file.write("\n".join(lines) + "\n")
    print(f"wrote {path}")
