"""Graph-minor toolkit for surface grids, Dyck-grids, tangles and societies."""

from .graph import Graph, Separation, Linkage, is_separation, GraphError, CapExceeded
from .kernels import BACKEND

__version__ = "0.1.0"
