"""Dense complex linear algebra on small operators.

Everything here works on square complex matrices represented as numpy
``complex128`` arrays. All functions are pure: inputs are never mutated
and there is no module-level mutable state, so values can be shared
freely between workers.

Exact-norm operations (eigendecomposition, spectral norm of an assembled
tensor product) are desk-scale by design and guarded by a dimension cap;
the bound computations elsewhere in the package never assemble the full
tensor product and are dimension-free.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Exact-norm work is refused above this total dimension unless the caller
# raises the cap explicitly. Bounds never form the product space, so they
# are unaffected.
DEFAULT_DIM_CAP = 4096

# Hermiticity is accepted when ||a - a*||_F <= HERM_TOL_FACTOR * max(1, ||a||_F).
HERM_TOL_FACTOR = 1e-10

# Contract on the eigensolver: ||a - V diag(w) V*||_F <= EIG_TOL * ||a||_F.
EIG_TOL = 1e-9


class DimensionCapError(ValueError):
    """Raised when an exact-norm operation would exceed the dimension cap."""


def as_operator(a) -> np.ndarray:
    """Coerce to a square complex matrix, rejecting non-finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"operator must be a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise ValueError("operator dimension must be at least 1")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("operator entries must be finite (no NaN/Inf)")
    return m


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a, "fro"))


def hermiticity_defect(a: np.ndarray) -> float:
    """Frobenius norm of a - a*."""
    return frobenius_norm(a - a.conj().T)


def herm_tol(a: np.ndarray) -> float:
    """Hermiticity acceptance threshold, scaled to the matrix size."""
    return HERM_TOL_FACTOR * max(1.0, frobenius_norm(a))


def kron(a: np.ndarray, b: np.ndarray, *, dim_cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Tensor (Kronecker) product a (x) b.

    The result has dimension dim(a)*dim(b) and block structure
    (a(x)b)[i*db+k, j*db+l] = a[i,j]*b[k,l]. Refuses to build products
    larger than ``dim_cap``.
    """
    a = as_operator(a)
    b = as_operator(b)
    total = a.shape[0] * b.shape[0]
    if total > dim_cap:
        raise DimensionCapError(
            f"tensor product dimension {a.shape[0]}*{b.shape[0]} = {total} "
            f"exceeds the cap {dim_cap}; raise dim_cap to force assembly"
        )
    return np.kron(a, b)


def _check_same_dim(a: np.ndarray, b: np.ndarray, what: str) -> None:
    if a.shape[0] != b.shape[0]:
        raise ValueError(
            f"{what} requires equal dimensions, got {a.shape[0]} and {b.shape[0]}"
        )


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """ab - ba. Skew-adjoint whenever a and b are self-adjoint."""
    a = as_operator(a)
    b = as_operator(b)
    _check_same_dim(a, b, "commutator")
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """ab + ba. Self-adjoint whenever a and b are self-adjoint."""
    a = as_operator(a)
    b = as_operator(b)
    _check_same_dim(a, b, "anticommutator")
    return a @ b + b @ a


@dataclass(frozen=True, eq=False)
class SpectralSummary:
    """Spectrum of a Hermitian operator.

    ``eigenvalues`` is ascending; ``spectral_norm`` equals
    max(|lambda_min|, |lambda_max|).
    """

    eigenvalues: np.ndarray
    spectral_norm: float
    lambda_max: float
    lambda_min: float


def hermitian_eig(a: np.ndarray) -> SpectralSummary:
    """Full spectral decomposition of a Hermitian matrix.

    Rejects inputs whose hermiticity defect exceeds the scaled tolerance.
    The underlying solver (LAPACK via numpy) satisfies the reconstruction
    contract ||a - V diag(w) V*||_F <= EIG_TOL * ||a||_F.
    """
    a = as_operator(a)
    defect = hermiticity_defect(a)
    if defect > herm_tol(a):
        raise ValueError(
            f"matrix is not Hermitian: ||a - a*||_F = {defect:.3e} "
            f"exceeds tolerance {herm_tol(a):.3e}"
        )
    w = np.linalg.eigvalsh(a)
    lo = float(w[0])
    hi = float(w[-1])
    return SpectralSummary(
        eigenvalues=w,
        spectral_norm=max(abs(lo), abs(hi)),
        lambda_max=hi,
        lambda_min=lo,
    )


def spectral_norm(a: np.ndarray) -> float:
    """Operator norm (largest singular value) of a square matrix.

    Computed as sqrt(lambda_max(a* a)), which reuses the Hermitian
    eigensolver and agrees with max |eigenvalue| for Hermitian input.
    """
    a = as_operator(a)
    w = np.linalg.eigvalsh(a.conj().T @ a)
    return float(np.sqrt(max(float(w[-1]), 0.0)))
