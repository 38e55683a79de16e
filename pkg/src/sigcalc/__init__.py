"""Exact signature computations for equal-rank homogeneous spaces and
biquotients SU(n)//H via circle actions with isolated fixed points."""

from .biquot import (
    BiquotientSpec,
    EmbeddingSpec,
    Factor,
    FixedPointDatum,
    SignatureReport,
    biquotient_signature,
    enumerate_fixed_points,
    torus_freeness_check,
)
from .errors import SigcalcError
from .homsig import (
    WeightSignSummary,
    euler_characteristic_equal_rank,
    homogeneous_signature,
    signature_kernel,
)
from .liealg import AlgebraElement, GroupElement, OrientationConvention
from .rootsys import RootSystem, build_root_system, sub_root_system
from .weyl import WeylElement, generate_weyl, left_cosets

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "BiquotientSpec",
    "EmbeddingSpec",
    "Factor",
    "FixedPointDatum",
    "GroupElement",
    "OrientationConvention",
    "RootSystem",
    "SigcalcError",
    "SignatureReport",
    "WeightSignSummary",
    "WeylElement",
    "biquotient_signature",
    "build_root_system",
    "enumerate_fixed_points",
    "euler_characteristic_equal_rank",
    "generate_weyl",
    "homogeneous_signature",
    "left_cosets",
    "signature_kernel",
    "sub_root_system",
    "torus_freeness_check",
]
