"""POVM-based coherence measures, superposition bounds and the seeded harness."""

from ._core import *  # noqa: F401,F403
from ._core import CSV_HEADER, Error, Povm

__all__ = [name for name in dir() if not name.startswith("_")]
