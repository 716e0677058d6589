"""Row-wise error metrics and orthogonal alignment.

The central quantity is the 2,infinity norm (maximum Euclidean row norm),
evaluated after a Frobenius-optimal orthogonal Procrustes alignment.
Alignment over the Frobenius norm is a surrogate for the row-wise optimum,
so the reported 2,infinity error is an upper bound on the row-wise minimum
over orthogonal transforms.

When the embedding dimension d = r + k undershoots the signal rank r
(k < 0), the error obeys a deterministic lower bound
sqrt(sum_{j=r+k+1}^{r} s_j / n) in terms of the eigenvalues s_j of the
population matrix; that bound is computed from the population quantities,
never from the observed adjacency matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .embedding import Embedding
from .errors import ContractError, DomainError, ParameterError
from .generators import LatentPositions

__all__ = ["MisspecError", "two_inf_norm", "procrustes_align", "misspec_error", "underspecified_lower_bound"]


@dataclass(frozen=True)
class MisspecError:
    """Alignment error of an embedding against scaled latent positions.

    ``aligned_W`` is the orthogonal matrix used for the comparison;
    ``lower_bound`` is present exactly when k < 0.
    """

    error_2inf: float
    error_frob: float
    k: int
    aligned_W: np.ndarray
    lower_bound: Optional[float] = None


def two_inf_norm(M: np.ndarray) -> float:
    """Maximum Euclidean norm over the rows of M. Empty input gives 0."""
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return 0.0
    return float(np.sqrt((M * M).sum(axis=1).max()))


def procrustes_align(Xhat: np.ndarray, X: np.ndarray) -> np.ndarray:
    """Orthogonal W minimizing ||Xhat W - X||_F, via SVD of Xhat^T X.

    When Xhat^T X is rank deficient the minimizer is not unique; any SVD
    yields a valid orthogonal solution.
    """
    Xhat = np.asarray(Xhat, dtype=float)
    X = np.asarray(X, dtype=float)
    if Xhat.shape != X.shape:
        raise ContractError(f"shape mismatch: {Xhat.shape} vs {X.shape}")
    u, _, vt = np.linalg.svd(Xhat.T @ X)
    return u @ vt


def underspecified_lower_bound(eigs_P: Sequence[float], r: int, k: int, n: int) -> float:
    """Deterministic under-specification bound sqrt(sum_{j=r+k+1}^{r} s_j / n).

    ``eigs_P`` must hold the r nonzero population eigenvalues sorted
    nonincreasing; the summed range must be strictly positive.
    """
    if k >= 0:
        raise DomainError(f"lower bound only applies to k < 0, got k={k}")
    if r + k < 0:
        raise ParameterError(f"k={k} may not undershoot -r={-r}")
    eigs = np.asarray(eigs_P, dtype=float)
    if eigs.shape[0] < r:
        raise ContractError(f"need the r={r} nonzero eigenvalues, got {eigs.shape[0]}")
    segment = eigs[r + k : r]
    if np.any(segment <= 0):
        raise ContractError("population eigenvalues in the summed range must be positive")
    return float(np.sqrt(segment.sum() / n))


def misspec_error(emb: Embedding, X: LatentPositions, rho: float, r: int) -> MisspecError:
    """2,infinity and Frobenius error of an embedding at dimension r + k.

    For k >= 0 the scaled latent positions are zero-padded to width r + k
    and the embedding is aligned to them. For k < 0 the embedding is
    zero-padded to width r, aligned to the scaled latent positions, and
    the deterministic lower bound on the error is attached.
    """
    if X.r != r:
        raise ContractError(f"latent positions have {X.r} columns, expected r={r}")
    k = emb.d - r
    if k < -r:
        raise ParameterError(f"embedding dimension {emb.d} undershoots rank r={r} by more than r")
    target = np.sqrt(rho) * X.matrix
    n = X.n

    if k >= 0:
        padded_target = np.hstack([target, np.zeros((n, k))]) if k else target
        w = procrustes_align(emb.coords, padded_target)
        diff = emb.coords @ w - padded_target
        lower = None
    else:
        padded_coords = np.hstack([emb.coords, np.zeros((n, -k))])
        w = procrustes_align(padded_coords, target)
        diff = padded_coords @ w - target
        pop_eigs = np.sort(rho * np.linalg.eigvalsh(X.matrix.T @ X.matrix))[::-1]
        lower = underspecified_lower_bound(pop_eigs, r, k, n)

    return MisspecError(
        error_2inf=two_inf_norm(diff),
        error_frob=float(np.linalg.norm(diff)),
        k=k,
        aligned_W=w,
        lower_bound=lower,
    )
