"""Polar n-complex numbers: the real group algebra of the cyclic group Z_n."""
from .core import (
    PolarNComplex,
    add,
    amplitude,
    inverse,
    modulus,
    mul,
    mul_fft,
    nu,
    to_matrix,
)
from .canonical import (
    CanonicalBasis,
    CanonicalCoords,
    RotatedCoords,
    basis,
    block_diagonalize,
    from_canonical,
    rotated,
    to_canonical,
)
from .elementary import cos, cosh, exp, log, pow, sin, sinh
from .errors import *  # noqa: F401,F403

__all__ = [
    "PolarNComplex", "add", "amplitude", "inverse", "modulus", "mul", "mul_fft", "nu",
    "to_matrix", "CanonicalBasis", "CanonicalCoords", "RotatedCoords", "basis",
    "block_diagonalize", "from_canonical", "rotated", "to_canonical",
    "cos", "cosh", "exp", "log", "pow", "sin", "sinh",
]
