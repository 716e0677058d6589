"""Dense symmetric eigendecomposition and the adjacency spectral embedding.

Eigenvalues are kept in nonincreasing (algebraic) order together with
their eigenvectors. Embeddings scale selected eigenvectors by the square
root of the absolute eigenvalue; the selection rule is either the d
algebraically largest eigenvalues (the default) or the d largest in
magnitude, which is the natural choice for indefinite expectations.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from .errors import ContractError, ParameterError

__all__ = ["Spectrum", "Embedding", "full_spectrum", "ase", "ase_from_spectrum", "trailing_eigvecs"]

SELECTION_RULES = ("algebraic_descending", "magnitude_descending")

_SYM_RTOL = 1e-12
_ORTHO_TOL = 1e-10
_EIG_RESID_RTOL = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """Full eigendecomposition: eigenvalues nonincreasing, columns paired."""

    eigenvalues: np.ndarray  # (n,)
    eigenvectors: np.ndarray  # (n, n), column j belongs to eigenvalues[j]

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    def check(self, source: np.ndarray) -> None:
        """Verify the numerical contract against the source matrix.

        Raises ContractError if orthonormality or the eigen-residual
        exceeds tolerance.
        """
        v, w = self.eigenvectors, self.eigenvalues
        if np.any(np.diff(w) > 0):
            raise ContractError("eigenvalues are not sorted nonincreasing")
        gram_err = np.abs(v.T @ v - np.eye(self.n)).max()
        if gram_err > _ORTHO_TOL:
            raise ContractError(f"eigenvector orthonormality violated: {gram_err:.3e}")
        scale = max(np.abs(w).max(), np.finfo(float).tiny)
        resid = np.abs(source @ v - v * w).max()
        if resid > _EIG_RESID_RTOL * scale:
            raise ContractError(f"eigen-residual {resid:.3e} exceeds {_EIG_RESID_RTOL:.0e} * |A|")


@dataclass(frozen=True)
class Embedding:
    """Spectral embedding: coords column j = eigenvector_j * sqrt(|eigenvalue_j|)."""

    coords: np.ndarray  # (n, d)
    selected_eigenvalues: np.ndarray  # (d,)
    selection_rule: str
    d: int


def full_spectrum(A: np.ndarray, check: bool = False) -> Spectrum:
    """Full eigendecomposition of a symmetric matrix, sorted nonincreasing.

    The input must be finite and symmetric to within 1e-12 relative to its
    largest entry; violations raise ContractError. With ``check=True`` the
    orthonormality/residual contract is verified on the result.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ContractError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ContractError("matrix contains non-finite entries")
    scale = max(np.abs(A).max(), np.finfo(float).tiny)
    if np.abs(A - A.T).max() > _SYM_RTOL * scale:
        raise ContractError("matrix is not symmetric within 1e-12 relative tolerance")
    w, v = np.linalg.eigh(A)
    spec = Spectrum(eigenvalues=w[::-1].copy(), eigenvectors=v[:, ::-1].copy())
    if check:
        spec.check(A)
    return spec


def _select_indices(eigenvalues: np.ndarray, d: int, rule: str) -> np.ndarray:
    if rule == "algebraic_descending":
        return np.arange(d)
    if rule == "magnitude_descending":
        # Stable sort keeps the algebraic order among equal magnitudes.
        return np.argsort(-np.abs(eigenvalues), kind="stable")[:d]
    raise ParameterError(f"unknown selection rule {rule!r}; expected one of {SELECTION_RULES}")


def ase_from_spectrum(spec: Spectrum, d: int, rule: str = "algebraic_descending") -> Embedding:
    """Embedding from a precomputed spectrum (saves re-decomposition)."""
    if not 1 <= d <= spec.n:
        raise ParameterError(f"embedding dimension d={d} must satisfy 1 <= d <= n={spec.n}")
    idx = _select_indices(spec.eigenvalues, d, rule)
    vals = spec.eigenvalues[idx]
    coords = spec.eigenvectors[:, idx] * np.sqrt(np.abs(vals))
    return Embedding(coords=coords, selected_eigenvalues=vals, selection_rule=rule, d=d)


def ase(A: np.ndarray, d: int, rule: str = "algebraic_descending") -> Embedding:
    """d-dimensional adjacency spectral embedding of a symmetric matrix."""
    return ase_from_spectrum(full_spectrum(A), d, rule)


def trailing_eigvecs(spec: Spectrum, r: int, k: int) -> np.ndarray:
    """Columns r+1 .. r+k of the nonincreasing-ordered eigenvector matrix."""
    if r < 0 or k < 1 or r + k > spec.n:
        raise ParameterError(f"need r >= 0, k >= 1, r + k <= n; got r={r}, k={k}, n={spec.n}")
    return spec.eigenvectors[:, r : r + k].copy()
