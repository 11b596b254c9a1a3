"""Regenerate the golden .proof files from the fixture builders."""
import argparse
from pathlib import Path

from incidence_proofs.fixtures import FIXTURE_DIR, export_all

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--dir", type=Path, default=FIXTURE_DIR)
args = ap.parse_args()
for p in export_all(args.dir):
    print(p)
