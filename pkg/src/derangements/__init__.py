"""Derangements in finite permutation groups and the prime-order star property."""
from .analysis import analyze, derangement_stats, is_elusive, star_property
from .perm import CapExceeded, GroupError, PermGroup, Permutation

__version__ = "0.1.0"

__all__ = ["CapExceeded", "GroupError", "PermGroup", "Permutation", "analyze",
           "derangement_stats", "is_elusive", "star_property", "__version__"]
