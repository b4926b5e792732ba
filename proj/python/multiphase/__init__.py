"""Multiphase estimation on symmetric probe states: densities, mutual
information, bounds and probe optimization. Phases are in turns."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
