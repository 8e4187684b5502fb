"""Spectral Moore bounds for bipartite regular graphs.

Exact upper bounds on the order of a connected bipartite k-regular graph
with bounded second adjacency eigenvalue, the linear-programming
certificates behind them, and the feasibility/nonexistence machinery for
bipartite distance-regular graphs with girth >= 2*diameter - 2.
"""

__version__ = "0.1.0"
