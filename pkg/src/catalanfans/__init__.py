"""Exact fans from polygon triangulations and Bruhat interval polytopes.

The package constructs, for every triangulation of a convex polygon, a
complete smooth fan whose 2n rays come in pairs, classifies these fans
through unordered binary trees, builds Bruhat interval polytopes with
exact rational convex hulls, and ships verification suites that check
the whole story mechanically at desk scale (symmetric groups up to S_9,
polygons up to 12 vertices).

Hot kernels run in a compiled extension when available, with a
pure-Python fallback selected at import; ``backend()`` reports which.
"""

from catalanfans._backend import kernels as _kernels

__version__ = "0.1.0"


def backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return _kernels.backend_name()
