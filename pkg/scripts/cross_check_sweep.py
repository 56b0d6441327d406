"""Cross-check formulas against brute force on exhaustive and random families.

    python scripts/cross_check_sweep.py --exhaustive 4 --random 1000 --seed 0
"""
import argparse
import random
import time
from collections import Counter

from latlevel import corpus
from latlevel.oracle import cross_check
from latlevel.semilattice import from_set_family

parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
parser.add_argument("--exhaustive", type=int, default=4, help="largest ground set for the exhaustive sweep")
parser.add_argument("--random", type=int, default=1000)
parser.add_argument("--seed", type=int, default=0)
parser.add_argument("--max-joinirr", type=int, default=8)
parser.add_argument("--md-fraction", type=float, default=0.5)
args = parser.parse_args()

cfg = corpus.RandomFamilyConfig(max_ground=args.max_joinirr, max_joinirr=args.max_joinirr, md_fraction=args.md_fraction)
t0 = time.perf_counter()
stats = Counter()


def run(L, tag):
    stats[tag] += 1
    stats[f"{tag}:md"] += L.is_meet_distributive()
    report = cross_check(L)
    if not report.ok:
        stats[f"{tag}:fail"] += 1
        print("FAIL", tag, L.to_json(), [c.to_json() for c in report.failures()])


for m in range(args.exhaustive + 1):
    for F in corpus.all_intersection_closed_families(m):
        run(from_set_family(F), "exhaustive")

rng = random.Random(args.seed)
done = 0
sizes = Counter()
while done < args.random:
    L = from_set_family(corpus.random_family(rng, cfg))
    if L.n > args.max_joinirr:
        continue
    sizes[L.n] += 1
    run(L, "random")
    done += 1

for tag in ("exhaustive", "random"):
    print(f"{tag:>10}: {stats[tag]} families, {stats[tag + ':md']} meet-distributive, {stats[tag + ':fail']} failures")
print("random |P| histogram:", dict(sorted(sizes.items())))
print(f"elapsed {time.perf_counter() - t0:.1f}s")
