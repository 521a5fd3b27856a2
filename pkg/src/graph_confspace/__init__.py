"""
graph-confspace: exact homology of discrete configuration spaces of particles on graphs
"""

from .utils.version import __version__

__all__ = ["__version__"]
