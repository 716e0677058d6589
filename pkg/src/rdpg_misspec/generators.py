"""Latent-position sampling and random graph generators.

Covers the weighted random dot product graph (low-rank signal plus
symmetric i.i.d. noise), the binary RDPG, stochastic blockmodels, and the
generalized RDPG whose inner product carries an indefinite signature.

Every generator is a pure function of its inputs and a 64-bit seed:
identical calls return bit-identical networks, and adjacency matrices are
exactly symmetric (mirrored from the upper triangle, never re-derived).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import ModelValidityError, ParameterError

__all__ = [
    "LatentPositions",
    "NoiseModel",
    "Network",
    "SbmSpec",
    "sample_dirichlet_latents",
    "weighted_rdpg",
    "binary_rdpg",
    "sample_sbm",
    "sample_grdpg",
]

_SIMPLEX_TOL = 1e-12


@dataclass(frozen=True)
class LatentPositions:
    """An n-by-r matrix whose rows are latent position vectors.

    ``bound`` is an almost-sure upper bound on the Euclidean norm of any
    row (1.0 for rows on the probability simplex).
    """

    matrix: np.ndarray
    distribution_tag: str  # "dirichlet" | "sbm_derived" | "explicit"
    bound: float
    alpha: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.ndim != 2:
            raise ParameterError(f"latent matrix must be 2-d, got ndim={m.ndim}")
        if not np.all(np.isfinite(m)):
            raise ParameterError("latent matrix contains non-finite entries")
        if self.distribution_tag == "dirichlet":
            if np.any(m < 0):
                raise ParameterError("dirichlet rows must be nonnegative")
            row_sums = m.sum(axis=1)
            if np.any(np.abs(row_sums - 1.0) > _SIMPLEX_TOL):
                raise ParameterError("dirichlet rows must sum to 1")
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def r(self) -> int:
        return self.matrix.shape[1]


@dataclass(frozen=True)
class NoiseModel:
    """Law of the symmetric noise entries in the weighted model.

    All laws are mean zero. The known closed-form variances: normal(sigma)
    has sigma^2; unit Laplace has 2; centered Exp(1) and centered Pois(1)
    both have 1. The "zero" kind is a test-only hook for exact-recovery
    checks; sigma = 0 is deliberately rejected by the public constructor.
    """

    kind: str
    sigma: float = 1.0

    _KINDS = ("normal", "laplace_unit", "exponential_centered", "poisson_centered", "zero")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ParameterError(f"unknown noise kind {self.kind!r}")
        if self.kind == "normal" and not self.sigma > 0:
            raise ParameterError("normal noise requires sigma > 0; use the zero-noise hook for exact tests")

    @classmethod
    def normal(cls, sigma: float = 1.0) -> "NoiseModel":
        return cls("normal", float(sigma))

    @classmethod
    def laplace_unit(cls) -> "NoiseModel":
        return cls("laplace_unit")

    @classmethod
    def exponential_centered(cls) -> "NoiseModel":
        return cls("exponential_centered")

    @classmethod
    def poisson_centered(cls) -> "NoiseModel":
        return cls("poisson_centered")

    @classmethod
    def _zero(cls) -> "NoiseModel":
        # Test-only: degenerate noiseless limit.
        return cls("zero", 0.0)

    @property
    def variance(self) -> float:
        if self.kind == "normal":
            return self.sigma**2
        if self.kind == "laplace_unit":
            return 2.0
        if self.kind == "zero":
            return 0.0
        return 1.0  # exponential_centered, poisson_centered

    @property
    def tag(self) -> str:
        if self.kind == "normal":
            return f"normal:{self.sigma!r}"
        return self.kind

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        if self.kind == "normal":
            return rng.normal(0.0, self.sigma, size)
        if self.kind == "laplace_unit":
            return rng.laplace(0.0, 1.0, size)
        if self.kind == "exponential_centered":
            return rng.exponential(1.0, size) - 1.0
        if self.kind == "poisson_centered":
            return rng.poisson(1.0, size).astype(float) - 1.0
        return np.zeros(size)


@dataclass(frozen=True)
class Network:
    """A symmetric adjacency matrix plus generator metadata.

    ``expectation`` holds the population matrix P when the generator knows
    it; ``true_rank`` is the rank of the signal part. ``signature`` is the
    (p, q) metadata of the indefinite inner product for GRDPG draws.
    """

    adjacency: np.ndarray
    kind: str  # "weighted" | "binary"
    expectation: Optional[np.ndarray]
    true_rank: Optional[int]
    sparsity: float
    seed: int
    signature: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        a = self.adjacency
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ParameterError("adjacency must be square")
        if not np.array_equal(a, a.T):
            raise ParameterError("adjacency must be exactly symmetric")
        if self.kind == "binary":
            if np.any(np.diag(a) != 0.0):
                raise ParameterError("binary adjacency must have a zero diagonal")
            off = a[~np.eye(a.shape[0], dtype=bool)]
            if not np.all((off == 0.0) | (off == 1.0)):
                raise ParameterError("binary adjacency entries must be 0 or 1")

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]


@dataclass(frozen=True)
class SbmSpec:
    """Stochastic blockmodel parameters: size, community prior, block matrix."""

    n: int
    alpha: Tuple[float, ...]
    block_matrix: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.block_matrix, dtype=float)
        r = len(self.alpha)
        if self.n < 1:
            raise ParameterError("n must be >= 1")
        if r < 1 or any(a <= 0 for a in self.alpha):
            raise ParameterError("alpha must be a nonempty vector of positive reals")
        if b.shape != (r, r):
            raise ParameterError(f"block matrix must be {r}x{r}, got {b.shape}")
        if not np.array_equal(b, b.T):
            raise ParameterError("block matrix must be symmetric")
        if np.any(b < 0) or np.any(b > 1):
            raise ParameterError("block matrix entries must lie in [0, 1]")
        object.__setattr__(self, "block_matrix", b)

    @property
    def r(self) -> int:
        return len(self.alpha)


def _symmetrize_exact(m: np.ndarray) -> np.ndarray:
    """Bit-symmetric version of a numerically near-symmetric matrix."""
    return (m + m.T) / 2.0


def _symmetric_noise(n: int, noise: NoiseModel, rng: np.random.Generator) -> np.ndarray:
    """Symmetric noise matrix: upper triangle plus diagonal sampled, mirrored."""
    iu = np.triu_indices(n)
    e = np.zeros((n, n))
    e[iu] = noise.sample(rng, iu[0].size)
    il = np.tril_indices(n, -1)
    e[il] = e.T[il]
    return e


def _sample_bernoulli_sym(probs: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Symmetric 0/1 matrix with zero diagonal; one coin per pair i < j."""
    n = probs.shape[0]
    iu = np.triu_indices(n, 1)
    a = np.zeros((n, n))
    a[iu] = (rng.random(iu[0].size) < probs[iu]).astype(float)
    il = np.tril_indices(n, -1)
    a[il] = a.T[il]
    return a


def _check_edge_probabilities(probs: np.ndarray) -> None:
    """Raise ModelValidityError naming the worst offending pair i < j."""
    n = probs.shape[0]
    iu = np.triu_indices(n, 1)
    vals = probs[iu]
    bad = (vals < 0.0) | (vals > 1.0)
    if np.any(bad):
        worst = np.argmax(np.where(vals > 1.0, vals - 1.0, -vals))
        i, j = int(iu[0][worst]), int(iu[1][worst])
        raise ModelValidityError(
            f"edge probability {probs[i, j]!r} outside [0, 1] at pair (i={i}, j={j})"
        )


def sample_dirichlet_latents(n: int, alpha: Sequence[float], seed: int) -> LatentPositions:
    """Draw n i.i.d. Dirichlet(alpha) rows.

    Rows live on the probability simplex, so their Euclidean norms are
    bounded by 1 almost surely.
    """
    if n < 1:
        raise ParameterError("n must be >= 1")
    alpha = tuple(float(a) for a in alpha)
    if len(alpha) < 1 or any(a <= 0 for a in alpha):
        raise ParameterError("alpha entries must be positive")
    rng = np.random.default_rng(seed)
    x = rng.dirichlet(alpha, size=n)
    return LatentPositions(matrix=x, distribution_tag="dirichlet", bound=1.0, alpha=alpha)


def weighted_rdpg(X: LatentPositions, rho: float, noise: NoiseModel, seed: int) -> Network:
    """A = rho * X X^T + E with symmetric i.i.d. mean-zero noise E.

    The upper triangle and the diagonal of E are sampled and mirrored.
    """
    if not 0.0 < rho <= 1.0:
        raise ParameterError(f"rho must lie in (0, 1], got {rho}")
    rng = np.random.default_rng(seed)
    p = _symmetrize_exact(rho * (X.matrix @ X.matrix.T))
    a = p + _symmetric_noise(X.n, noise, rng)
    return Network(
        adjacency=a,
        kind="weighted",
        expectation=p,
        true_rank=int(np.linalg.matrix_rank(X.matrix)),
        sparsity=rho,
        seed=seed,
    )


def binary_rdpg(X: LatentPositions, rho: float, seed: int) -> Network:
    """Bernoulli graph with edge probabilities rho * X_i . X_j for i < j.

    The diagonal is zero; each upper-triangle entry is an independent coin
    and no rejection can occur once the probability check passes.
    """
    if not 0.0 <= rho <= 1.0:
        raise ParameterError(f"rho out of range: must lie in [0, 1], got {rho}")
    rng = np.random.default_rng(seed)
    probs = _symmetrize_exact(rho * (X.matrix @ X.matrix.T))
    _check_edge_probabilities(probs)
    a = _sample_bernoulli_sym(probs, rng)
    return Network(
        adjacency=a,
        kind="binary",
        expectation=probs,
        true_rank=int(np.linalg.matrix_rank(X.matrix)),
        sparsity=rho,
        seed=seed,
    )


def sample_sbm(spec: SbmSpec, seed: int) -> Tuple[Network, LatentPositions]:
    """Stochastic blockmodel draw plus latent positions derived from P.

    Steps: community prior pi ~ Dirichlet(alpha); i.i.d. memberships;
    P = Z B Z^T; latents X = U_{1:r} S^{1/2}_{1:r} from the spectral
    decomposition of P; edges A_{ij} ~ Bernoulli(P_{ij}) for i < j.
    """
    rng = np.random.default_rng(seed)
    r = spec.r
    pi = rng.dirichlet(spec.alpha)
    memberships = rng.choice(r, size=spec.n, p=pi)
    z = np.zeros((spec.n, r))
    z[np.arange(spec.n), memberships] = 1.0
    p = _symmetrize_exact(z @ spec.block_matrix @ z.T)

    vals, vecs = np.linalg.eigh(p)
    vals, vecs = vals[::-1], vecs[:, ::-1]  # nonincreasing
    top = vals[:r]
    scale = max(1.0, float(np.abs(vals).max()))
    if np.any(top < -1e-10 * scale):
        raise ModelValidityError(
            "block matrix induces an indefinite P; latent positions require P to be PSD"
        )
    x = vecs[:, :r] * np.sqrt(np.clip(top, 0.0, None))
    latents = LatentPositions(
        matrix=x,
        distribution_tag="sbm_derived",
        bound=float(np.sqrt((x * x).sum(axis=1).max())) if spec.n else 0.0,
    )

    a = _sample_bernoulli_sym(p, rng)
    true_rank = int(np.sum(vals > 1e-8 * scale))
    net = Network(
        adjacency=a,
        kind="binary",
        expectation=p,
        true_rank=true_rank,
        sparsity=1.0,
        seed=seed,
    )
    return net, latents


def sample_grdpg(X: LatentPositions, p: int, q: int, rho: float, seed: int) -> Network:
    """Generalized RDPG with signature (p, q).

    Edge probabilities are rho * X_i^T I_{p,q} X_j, where I_{p,q} flips
    the sign of the last q coordinates. With q = 0 this reduces exactly
    (bit-for-bit, at equal seeds) to the binary RDPG.
    """
    if p < 0 or q < 0 or p + q != X.r:
        raise ParameterError(f"signature ({p}, {q}) must satisfy p + q = r = {X.r}")
    if not 0.0 <= rho <= 1.0:
        raise ParameterError(f"rho out of range: must lie in [0, 1], got {rho}")
    rng = np.random.default_rng(seed)
    signs = np.concatenate([np.ones(p), -np.ones(q)])
    probs = _symmetrize_exact(rho * ((X.matrix * signs) @ X.matrix.T))
    _check_edge_probabilities(probs)
    a = _sample_bernoulli_sym(probs, rng)
    return Network(
        adjacency=a,
        kind="binary",
        expectation=probs,
        true_rank=int(np.linalg.matrix_rank(X.matrix)),
        sparsity=rho,
        seed=seed,
        signature=(p, q),
    )
