"""Exact combinatorics of semi-infinite flags: orders, paths, characters and operators."""

from .afweyl import AffineWeylElement, element_of, from_word, identity, min_lift, pij, si_leq
from .errors import InputError, ResourceError, SilcError, VerificationError
from .gchar import GradedCharacter, gch_demazure
from .rootdata import build_cartan
from .silspath import SiLSPath, enumerate_sils

__version__ = "0.1.0"

__all__ = [
    "AffineWeylElement", "GradedCharacter", "InputError", "ResourceError", "SiLSPath",
    "SilcError", "VerificationError", "build_cartan", "element_of", "enumerate_sils",
    "from_word", "gch_demazure", "identity", "min_lift", "pij", "si_leq",
]
