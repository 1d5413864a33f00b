"""Exact combinatorics of parabolic subalgebras and category O for the periplectic superalgebra."""

from .partitions import Bipartition, SignForm, enumerate_brp
from .weights import Root, Weight, build_root_datum

__all__ = ["Bipartition", "SignForm", "Root", "Weight", "build_root_datum", "enumerate_brp"]
__version__ = "0.1.0"
