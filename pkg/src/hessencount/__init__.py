"""Exact point counts and Poincare polynomials of Hessenberg varieties."""
from ._kernels import JIT_ENABLED
from .algebra import Poly, RatFunc, T, partitions_of, q_factorial, q_int
from .counting import (
    CountReport,
    PoincareReport,
    bruteforce_count,
    count_points,
    count_regular_semisimple,
    count_simple,
    count_via_recursion,
    poincare,
    poincare_regular,
)
from .gfq import (
    BudgetExceeded,
    SimilarityClassType,
    Unrealizable,
    count_hessenberg_bruteforce,
    f_t_bruteforce,
    f_tau,
    field,
    operator_from_type,
)
from .hessenberg import HessFn, csqf, enumerate_hess, modular_triples, parse_hess
from .symfunc import SymFunc, convert, hall_inner, omega, specialize_t
from .tableaux import cocharge, hall_littlewood, kostka_foulkes
from .verify import verify_suite

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CountReport",
    "HessFn",
    "JIT_ENABLED",
    "PoincareReport",
    "Poly",
    "RatFunc",
    "SimilarityClassType",
    "SymFunc",
    "T",
    "Unrealizable",
    "bruteforce_count",
    "cocharge",
    "convert",
    "count_hessenberg_bruteforce",
    "count_points",
    "count_regular_semisimple",
    "count_simple",
    "count_via_recursion",
    "csqf",
    "enumerate_hess",
    "f_t_bruteforce",
    "f_tau",
    "field",
    "hall_inner",
    "hall_littlewood",
    "kostka_foulkes",
    "modular_triples",
    "omega",
    "operator_from_type",
    "parse_hess",
    "partitions_of",
    "poincare",
    "poincare_regular",
    "q_factorial",
    "q_int",
    "specialize_t",
    "verify_suite",
]
