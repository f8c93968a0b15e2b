"""P1 interpolation on [0, 1], measured W^{1,1} errors and their bounds."""

from taylorlike.interpolation.bounds import (
    NormReport,
    asymptotic_bound,
    classical_bound,
    classical_bound_sharp,
    classical_deriv_bound,
    classical_value_bound,
    taylor_like_bound,
    taylor_like_deriv_bound,
    taylor_like_value_bound,
    verify,
)
from taylorlike.interpolation.mesh import (
    Mesh,
    MeshError,
    build_graded_mesh,
    build_mesh,
    build_uniform_mesh,
)
from taylorlike.interpolation.norms import (
    ErrorNorms,
    P1Interpolant,
    interpolate,
    w11_error,
)

__all__ = [
    "ErrorNorms",
    "Mesh",
    "MeshError",
    "NormReport",
    "P1Interpolant",
    "asymptotic_bound",
    "build_graded_mesh",
    "build_mesh",
    "build_uniform_mesh",
    "classical_bound",
    "classical_bound_sharp",
    "classical_deriv_bound",
    "classical_value_bound",
    "interpolate",
    "taylor_like_bound",
    "taylor_like_deriv_bound",
    "taylor_like_value_bound",
    "verify",
    "w11_error",
]
