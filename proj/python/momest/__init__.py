"""Sublinear moment estimation under weighted-sampling oracles."""

from ._momest import *  # noqa: F401,F403
from ._momest import __version__  # noqa: F401
