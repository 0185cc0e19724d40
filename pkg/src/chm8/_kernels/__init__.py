"""Search kernels; the compiled module is used when it was built."""
try:
    from ._permsearch import search as perm_search
    COMPILED = True
except ImportError:  # pragma: no cover - depends on the build
    from ._permsearch_py import search as perm_search
    COMPILED = False

from ._permsearch_py import search as perm_search_py

__all__ = ["perm_search", "perm_search_py", "COMPILED"]
