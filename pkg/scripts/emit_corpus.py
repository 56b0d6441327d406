"""Write every bundled example to data/<name>.json."""
import argparse
import json
from pathlib import Path

from latlevel import corpus

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data"))
args = parser.parse_args()

out = Path(args.out)
out.mkdir(parents=True, exist_ok=True)
for name in corpus.CORPUS_NAMES:
    path = out / f"{name.replace('(', '_').replace(')', '')}.json"
    path.write_text(json.dumps(corpus.emit(name), indent=2) + "\n")
    print(path)
