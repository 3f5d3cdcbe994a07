"""One-point Hermitian codes with an improved power decoder."""

from .code import HermitianCode, code_new, hamming_distance
from .decoder import DecodeOutcome, decode, decode_with_sweep
from .galois import ConfigurationError, Field, Poly, field_new
from .hermitian_ring import CurvePoint, HermitianRing, RingElement, hermitian_ring
from .interpolation import interpolate
from .pade_solver import radius_guaranteed, radius_practical
from .simulator import TrialConfig, TrialStats, random_error, reproduce_table, run_trials

__all__ = [
    "ConfigurationError", "CurvePoint", "DecodeOutcome", "Field", "HermitianCode", "HermitianRing",
    "Poly", "RingElement", "TrialConfig", "TrialStats", "code_new", "decode", "decode_with_sweep",
    "field_new", "hamming_distance", "hermitian_ring", "interpolate", "radius_guaranteed",
    "radius_practical", "random_error", "reproduce_table", "run_trials",
]
__version__ = "0.1.0"
