"""List the h-vectors of duals of distributive lattices J(P) for |P| = 1..max-n.

Ends by checking that the meet-distributive lattice obtained by deleting {1,3}
from the boolean lattice on three atoms has an h-vector no J(P) realizes.
"""
import argparse
from latlevel import corpus
from latlevel.level import h_vector, trimmed
from latlevel.oracle import realizability_scan
from latlevel.semilattice import SetFamily, from_set_family

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--max-n", type=int, default=4)
args = parser.parse_args()

for n in range(1, args.max_n + 1):
    distributive = {trimmed(h) for h in realizability_scan(n)}
    print(f"n = {n}: {len(distributive)} h-vectors from J(P)")
    for h in sorted(distributive, reverse=True):
        print("   ", h)

# the seven-element lattice obtained by deleting {1,3} from the boolean lattice on 3 atoms
B = from_set_family(SetFamily(("1", "2", "3"), tuple(s for s in range(8) if s != 0b101)))
print("B3 minus {1,3}:", trimmed(h_vector(B)), "realized by some J(P):", trimmed(h_vector(B)) in {trimmed(h) for h in realizability_scan(3)})
