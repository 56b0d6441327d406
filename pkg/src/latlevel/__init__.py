"""Alexander duals, h-vectors and levelness of finite meet-semilattices."""
from .config import Limits
from .formats import load
from .dual_ideal import DualComplex, PairMonomial, dual_facets, generators_oracle, is_independent_pair, theorem_generators
from .errors import *  # noqa: F401,F403
from .level import LevelReport, SComplex, a_invariant, f_vector_dual, h_vector, is_level, j_ideal, s_complex, standard_monomials
from .oracle import cross_check, enumerate_faces, f_to_h, realizability_scan
from .poset import Poset
from .semilattice import MeetSemilattice, SetFamily, from_set_family, validate

__version__ = "0.1.0"
