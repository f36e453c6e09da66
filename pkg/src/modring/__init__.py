"""Exact q-expansions and verification for rings of modular forms on Gamma0(N)."""

from .arith import bernoulli, divisors, sigma, sigma_chi, tau
from .catalog import Catalog, UnknownForm, default_catalog, resolve
from .qseries import QExpansion
from .report import Check
from .spaces import LEVELS, UnsupportedLevel, basis, dim, sturm_cut

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "Check",
    "LEVELS",
    "QExpansion",
    "UnknownForm",
    "UnsupportedLevel",
    "basis",
    "bernoulli",
    "default_catalog",
    "dim",
    "divisors",
    "resolve",
    "sigma",
    "sigma_chi",
    "sturm_cut",
    "tau",
]
