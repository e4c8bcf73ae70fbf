"""Rectification of convex polygons and polyhedra."""

try:
    from ._rectihull import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _rectihull import *  # noqa: F401,F403  (in-tree build dir on PYTHONPATH)
