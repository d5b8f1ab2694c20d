"""Zak transforms of Hermite windows and non-frame points of Hermite Gabor systems."""

from . import frameset, hermite, symmetry, verify, zak, zeros
from .frameset import *  # noqa: F401,F403
from .hermite import *  # noqa: F401,F403
from .symmetry import *  # noqa: F401,F403
from .verify import *  # noqa: F401,F403
from .zak import *  # noqa: F401,F403
from .zeros import *  # noqa: F401,F403

__version__ = "0.1.0"

__all__ = (
    hermite.__all__ + zak.__all__ + symmetry.__all__ + zeros.__all__
    + frameset.__all__ + verify.__all__
)
