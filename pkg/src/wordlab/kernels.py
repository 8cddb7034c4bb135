"""Hot inner loops, compiled when possible.

The Cython extension ``wordlab._ckernels`` is used when it has been built;
otherwise, or when the environment variable ``WORDLAB_PURE`` is set to a
non-empty value, the pure-Python module ``wordlab._pykernels`` is used.
``BACKEND`` names the active implementation.
"""

import os

from . import _pykernels

if os.environ.get("WORDLAB_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

palindromic_length = _impl.palindromic_length
palindrome_count = _impl.palindrome_count
distinct_factor_count = _impl.distinct_factor_count
runs = _impl.runs
suffix_exceeds = _impl.suffix_exceeds


def backends():
    """Every importable kernel implementation, keyed by name."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels

        found["cython"] = _ckernels
    except ImportError:
        pass
    return found
