"""Dense complex linear algebra on small fixed-size matrices.

Matrices are plain ``numpy`` arrays of complex128; every function validates
shape so callers get dimension errors instead of silent broadcasting.
Eigendecomposition is restricted to Hermitian inputs (the only case the rest
of the package needs).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITICITY_RTOL = 1e-12


class DimensionError(ValueError):
    """Operands have incompatible or non-square shapes."""


class NotHermitianError(ValueError):
    """Matrix fails the Hermiticity tolerance required by the operation."""


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def _require_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")


def is_hermitian(a: np.ndarray, rtol: float = HERMITICITY_RTOL) -> bool:
    a = as_matrix(a)
    scale = np.linalg.norm(a)
    return np.linalg.norm(a - a.conj().T) <= rtol * max(scale, 1.0)


def commutator(a, b) -> np.ndarray:
    """[A, B] = AB - BA."""
    a, b = as_matrix(a), as_matrix(b)
    _require_same_dim(a, b)
    return a @ b - b @ a


def anticommutator(a, b) -> np.ndarray:
    """{A, B} = AB + BA."""
    a, b = as_matrix(a), as_matrix(b)
    _require_same_dim(a, b)
    return a @ b + b @ a


def kron(a, b) -> np.ndarray:
    """Kronecker product; satisfies (A⊗B)(C⊗D) = (AC)⊗(BD)."""
    return np.kron(as_matrix(a), as_matrix(b))


@dataclass(frozen=True)
class EigenSystem:
    """Ascending real eigenvalues and a unitary matrix of eigenvectors (columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return v @ np.diag(self.eigenvalues) @ v.conj().T


def hermitian_eig(a) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix (rejects non-Hermitian input)."""
    a = as_matrix(a)
    if not is_hermitian(a):
        raise NotHermitianError("hermitian_eig requires a Hermitian matrix")
    vals, vecs = np.linalg.eigh(a)
    return EigenSystem(eigenvalues=vals, eigenvectors=vecs)


def evolution_factor(h, t: float, hbar: float = 1.0) -> np.ndarray:
    """exp(-i H t / hbar) for Hermitian H, via eigendecomposition."""
    sys = hermitian_eig(h)
    phases = np.exp(-1j * sys.eigenvalues * t / hbar)
    v = sys.eigenvectors
    return v @ np.diag(phases) @ v.conj().T


def frobenius(a) -> float:
    return float(np.linalg.norm(np.asarray(a, dtype=complex)))
