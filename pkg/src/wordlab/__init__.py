"""wordlab: combinatorics on finite words.

The submodules hold the operations (``words``, ``palindromes``,
``repetitions``, ``lyndon``, ``transforms``, ``factors``, ``infinite``);
``wordlab.claims`` is the registry of checkable statements and
``wordlab.cli`` the command-line front end.  A few common names are
re-exported here.
"""

from .errors import WordError
from .kernels import BACKEND
from .words import Word, all_words, complement, mirror, parse_word, rotations, words_upto
from .palindromes import is_antipalindrome, is_palindrome, is_rich, palindromic_length
from .repetitions import is_overlap_free, runs
from .lyndon import debruijn_fm, is_lyndon
from .transforms import Morphism, bwt, derivative, pansiot
from .factors import factor_count, minimal_forbidden_words, smallest_attractor

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Morphism",
    "Word",
    "WordError",
    "all_words",
    "bwt",
    "complement",
    "debruijn_fm",
    "derivative",
    "factor_count",
    "is_antipalindrome",
    "is_lyndon",
    "is_overlap_free",
    "is_palindrome",
    "is_rich",
    "minimal_forbidden_words",
    "mirror",
    "palindromic_length",
    "pansiot",
    "parse_word",
    "rotations",
    "runs",
    "smallest_attractor",
    "words_upto",
]
