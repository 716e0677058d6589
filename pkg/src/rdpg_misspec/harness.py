"""Monte Carlo experiment driver with deterministic seeding and CSV output.

Four experiment families are supported:

* ``weighted_dirichlet``   - Dirichlet latents, dense weighted noise, rho = 1;
* ``weighted_weak_signal`` - same latents, N(0, 0.1^2) noise, rho = n^-gamma;
* ``sbm_binary``           - five-ish community blockmodel (0.9 within, 0.1
  across), latents derived from the population matrix;
* ``sparse_binary_dirichlet`` - Bernoulli edges with probabilities scaled
  by rho = n^-gamma.

One record is produced per (n, d, gamma, replicate). Each trial derives
its own 64-bit seed from the condition, so the full record set is a pure
function of the configuration and is independent of execution order.
Failed trials (model-validity or contract violations) are recorded with a
failure status rather than dropped, keeping aggregation denominators
explicit. Rerunning an experiment with the same configuration writes a
bit-identical CSV; opt into wall-clock capture with ``record_runtime``
(which makes the runtime_ms column, and only that column, volatile).
"""

from __future__ import annotations

import csv
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .embedding import SELECTION_RULES, ase_from_spectrum, full_spectrum
from .errors import ContractError, DomainError, ParameterError
from .generators import NoiseModel, SbmSpec, binary_rdpg, sample_dirichlet_latents, sample_sbm, weighted_rdpg
from .metrics import misspec_error, two_inf_norm
from .rmt import deloc_profile, interlacing_check, rmt_scale, semicircle_error_curve
from .seeding import derive_seed

__all__ = [
    "MODELS",
    "ExperimentConfig",
    "TrialRecord",
    "Aggregate",
    "RateFit",
    "DimSweepResult",
    "CSV_HEADER",
    "run_experiment",
    "aggregate",
    "fit_rate",
    "dim_sweep",
    "write_records_csv",
    "read_records_csv",
    "records_csv_text",
    "parse_config_text",
    "parse_config_file",
    "config_to_text",
    "parse_noise_tag",
    "full_scale_config",
    "summarize",
]

MODELS = ("weighted_dirichlet", "weighted_weak_signal", "sbm_binary", "sparse_binary_dirichlet")
BINARY_MODELS = ("sbm_binary", "sparse_binary_dirichlet")

SBM_WITHIN = 0.9
SBM_ACROSS = 0.1

WORKERS_ENV_VAR = "RDPG_MISSPEC_WORKERS"

CSV_HEADER = (
    "model,n,d,r,k,noise,gamma,rho,replicate,seed,"
    "err_2inf,err_frob,lower_bound,deloc_scaled_max,runtime_ms,status"
)

CONJECTURE_NOTE = (
    "note: binary-model results are conjecture support only "
    "(delocalization is proven for weighted noise, conjectured for binary)"
)


@dataclass(frozen=True)
class ExperimentConfig:
    model: str
    n_grid: Tuple[int, ...]
    dims: Tuple[int, ...]
    r: int
    noise: Optional[NoiseModel] = None
    gamma_grid: Optional[Tuple[float, ...]] = None
    replicates: int = 20
    base_seed: int = 0
    selection_rule: str = "algebraic_descending"
    deloc: bool = False
    semicircle: bool = False
    interlacing: bool = False
    deloc_window: int = 10
    record_runtime: bool = False
    tail_fraction: float = 0.5

    def __post_init__(self):
        if self.model not in MODELS:
            raise ParameterError(f"unknown model {self.model!r}; expected one of {MODELS}")
        n_grid = tuple(int(n) for n in self.n_grid)
        if not n_grid or any(b <= a for a, b in zip(n_grid, n_grid[1:])):
            raise ParameterError("n_grid must be a nonempty strictly ascending tuple")
        dims = tuple(int(d) for d in self.dims)
        if not dims:
            raise ParameterError("dims must be nonempty")
        if self.r < 1:
            raise ParameterError("r must be >= 1")
        if self.replicates < 1:
            raise ParameterError("replicates must be >= 1")
        if self.selection_rule not in SELECTION_RULES:
            raise ParameterError(f"unknown selection rule {self.selection_rule!r}")
        if self.gamma_grid is not None:
            gammas = tuple(float(g) for g in self.gamma_grid)
            if any(g < 0 for g in gammas):
                raise ParameterError("every gamma must be >= 0")
            if self.model == "sbm_binary":
                raise ParameterError("sbm_binary does not take a gamma grid")
            object.__setattr__(self, "gamma_grid", gammas)
        if self.deloc_window < 1:
            raise ParameterError("deloc_window must be >= 1")
        if not 0 < self.tail_fraction <= 1:
            raise ParameterError("tail_fraction must lie in (0, 1]")
        object.__setattr__(self, "n_grid", n_grid)
        object.__setattr__(self, "dims", dims)
        noise = self.noise
        if noise is None and self.model == "weighted_dirichlet":
            noise = NoiseModel.normal(1.0)
        if noise is None and self.model == "weighted_weak_signal":
            noise = NoiseModel.normal(0.1)
        object.__setattr__(self, "noise", noise)

    @property
    def noise_tag(self) -> Optional[str]:
        return self.noise.tag if self.noise is not None and self.model not in BINARY_MODELS else None


@dataclass(frozen=True)
class TrialRecord:
    model: str
    n: int
    d: int
    r: int
    k: int
    noise: Optional[str]
    gamma: Optional[float]
    rho: float
    replicate: int
    seed: int
    err_2inf: Optional[float]
    err_frob: Optional[float]
    lower_bound: Optional[float]
    deloc_scaled_max: Optional[float]
    runtime_ms: float
    status: str = "ok"
    # In-memory diagnostics; never serialized (the CSV schema is fixed).
    semicircle_sup: Optional[float] = None
    interlacing_gap: Optional[float] = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"


@dataclass(frozen=True)
class Aggregate:
    model: str
    n: int
    d: int
    noise: Optional[str]
    gamma: Optional[float]
    mean: float
    sem: Optional[float]
    errbar: Optional[float]
    count: int


@dataclass(frozen=True)
class RateFit:
    condition: str
    slope: float
    intercept: float
    stderr: float
    n_used: Tuple[int, ...]


@dataclass(frozen=True)
class DimSweepResult:
    aggregates: Tuple[Aggregate, ...]
    k_slope: float


def _sample_condition(cfg: ExperimentConfig, n: int, rho: float, trial_seed: int):
    """Latent positions and network for one trial."""
    lat_seed = derive_seed(trial_seed, "latents")
    net_seed = derive_seed(trial_seed, "network")
    alpha = (1.0,) * cfg.r
    if cfg.model in ("weighted_dirichlet", "weighted_weak_signal"):
        latents = sample_dirichlet_latents(n, alpha, lat_seed)
        net = weighted_rdpg(latents, rho, cfg.noise, net_seed)
    elif cfg.model == "sparse_binary_dirichlet":
        latents = sample_dirichlet_latents(n, alpha, lat_seed)
        net = binary_rdpg(latents, rho, net_seed)
    else:  # sbm_binary
        b = np.full((cfg.r, cfg.r), SBM_ACROSS) + (SBM_WITHIN - SBM_ACROSS) * np.eye(cfg.r)
        net, latents = sample_sbm(SbmSpec(n=n, alpha=alpha, block_matrix=b), seed=net_seed)
    return latents, net


def _run_trial(cfg: ExperimentConfig, n: int, d: int, gamma: Optional[float], rep: int) -> TrialRecord:
    seed = derive_seed(cfg.base_seed, cfg.model, n, d, cfg.noise_tag, gamma, rep)
    rho = float(n) ** (-gamma) if gamma is not None else 1.0
    start = time.perf_counter()
    err_2inf = err_frob = lower = deloc_val = semi_sup = inter_gap = None
    status = "ok"
    try:
        latents, net = _sample_condition(cfg, n, rho, seed)
        spectrum = full_spectrum(net.adjacency)
        emb = ase_from_spectrum(spectrum, d, cfg.selection_rule)
        res = misspec_error(emb, latents, rho, cfg.r)
        err_2inf, err_frob, lower = res.error_2inf, res.error_frob, res.lower_bound
        if lower is not None and err_2inf < lower:
            raise ContractError(
                f"under-specification bound violated: err {err_2inf!r} < bound {lower!r}"
            )
        if res.k > 0:
            # Over-specified errors must split (at the fitted alignment)
            # into a head-vs-truth part and a trailing-block part.
            padded = np.hstack([np.sqrt(rho) * latents.matrix, np.zeros((n, res.k))])
            head = two_inf_norm(emb.coords[:, : cfg.r] @ res.aligned_W[: cfg.r] - padded)
            tail = two_inf_norm(emb.coords[:, cfg.r :] @ res.aligned_W[cfg.r :])
            if err_2inf > head + tail + 1e-9:
                raise ContractError(
                    f"over-specification decomposition violated: {err_2inf!r} > {head!r} + {tail!r}"
                )
        if cfg.deloc and cfg.r + cfg.deloc_window <= n:
            deloc_val = deloc_profile(spectrum, cfg.r, cfg.deloc_window).scaled_max
        if cfg.semicircle or cfg.interlacing:
            scaled = rmt_scale(net, require_noise_part=True)
            if cfg.semicircle:
                # Normalize the noise part to unit entry variance so the
                # semicircle reference applies: exactly for weighted noise,
                # on average for binary (heterogeneous Bernoulli variances).
                if net.kind == "weighted":
                    var = cfg.noise.variance
                else:
                    p_off = net.expectation[~np.eye(n, dtype=bool)]
                    var = float((p_off * (1.0 - p_off)).mean())
                h = scaled.h / np.sqrt(var) if var > 0 else scaled.h
                semi_sup = semicircle_error_curve(h, (-3.0, 3.0), 0.5, 61).sup_error
            if cfg.interlacing:
                rank = net.true_rank if net.true_rank is not None else cfg.r
                gap = interlacing_check(
                    np.linalg.eigvalsh(scaled.h), np.linalg.eigvalsh(scaled.b), rank
                )
                if gap > rank / n:
                    raise ContractError(f"interlacing gap {gap!r} exceeds rank/n = {rank / n!r}")
                inter_gap = gap
    except (ParameterError, DomainError, ContractError) as exc:
        status = f"failed:{type(exc).__name__}"
        err_2inf = err_frob = lower = deloc_val = semi_sup = inter_gap = None
    runtime_ms = (time.perf_counter() - start) * 1e3 if cfg.record_runtime else 0.0
    return TrialRecord(
        model=cfg.model,
        n=n,
        d=d,
        r=cfg.r,
        k=d - cfg.r,
        noise=cfg.noise_tag,
        gamma=gamma,
        rho=rho,
        replicate=rep,
        seed=seed,
        err_2inf=err_2inf,
        err_frob=err_frob,
        lower_bound=lower,
        deloc_scaled_max=deloc_val,
        runtime_ms=runtime_ms,
        status=status,
        semicircle_sup=semi_sup,
        interlacing_gap=inter_gap,
    )


def _record_key(rec: TrialRecord):
    return (rec.model, rec.n, rec.d, -1.0 if rec.gamma is None else rec.gamma, rec.replicate)


def run_experiment(cfg: ExperimentConfig, workers: Optional[int] = None) -> List[TrialRecord]:
    """One TrialRecord per (n, d, gamma, replicate), sorted by condition.

    Trials are independent and may run on a small thread pool (numpy's
    decompositions release the GIL); the worker count defaults to the
    RDPG_MISSPEC_WORKERS environment variable, else 1.
    """
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV_VAR, "1"))
    gammas: Tuple[Optional[float], ...] = cfg.gamma_grid if cfg.gamma_grid else (None,)
    tasks = [
        (n, d, g, rep)
        for n in cfg.n_grid
        for d in cfg.dims
        for g in gammas
        for rep in range(cfg.replicates)
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda t: _run_trial(cfg, *t), tasks))
    else:
        records = [_run_trial(cfg, *t) for t in tasks]
    records.sort(key=_record_key)
    return records


def aggregate(records: Sequence[TrialRecord]) -> List[Aggregate]:
    """Mean, SEM and 2*SEM of err_2inf per condition, over ok trials.

    SEM is the sample standard deviation over sqrt(m); with a single
    replicate it is reported as None.
    """
    groups: Dict[tuple, List[float]] = {}
    for rec in records:
        if not rec.ok:
            continue
        key = (rec.model, rec.n, rec.d, rec.noise, rec.gamma)
        groups.setdefault(key, []).append(rec.err_2inf)
    out = []
    for key in sorted(groups, key=lambda k: (k[0], k[1], k[2], -1.0 if k[4] is None else k[4])):
        vals = np.asarray(groups[key])
        m = vals.size
        sem = float(vals.std(ddof=1) / np.sqrt(m)) if m > 1 else None
        out.append(
            Aggregate(
                model=key[0],
                n=key[1],
                d=key[2],
                noise=key[3],
                gamma=key[4],
                mean=float(vals.mean()),
                sem=sem,
                errbar=None if sem is None else 2.0 * sem,
                count=m,
            )
        )
    return out


def _condition_label(model: str, d: int, noise: Optional[str], gamma: Optional[float]) -> str:
    g = "-" if gamma is None else format(gamma, "g")
    nz = "-" if noise is None else noise
    return f"model={model} d={d} noise={nz} gamma={g}"


def fit_rate(
    aggregates: Sequence[Aggregate],
    d: int,
    gamma: Optional[float] = None,
    tail_fraction: float = 0.5,
) -> RateFit:
    """Least-squares slope of log(mean err) versus log(n) on the tail grid.

    The tail keeps the ceil(fraction * points) largest n values, never
    fewer than 3; having fewer than 3 available is a fit error.
    """
    rows = sorted(
        (a for a in aggregates if a.d == d and a.gamma == gamma),
        key=lambda a: a.n,
    )
    if not rows:
        raise ParameterError(f"no aggregated conditions with d={d}, gamma={gamma}")
    tail = max(3, math.ceil(len(rows) * tail_fraction))
    if tail > len(rows):
        raise ParameterError(f"need at least 3 tail points, have {len(rows)}")
    rows = rows[-tail:]
    x = np.log([a.n for a in rows])
    y = np.log([a.mean for a in rows])
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    dof = len(rows) - 2
    sxx = float(((x - x.mean()) ** 2).sum())
    stderr = float(np.sqrt((resid**2).sum() / dof / sxx)) if dof > 0 else 0.0
    return RateFit(
        condition=_condition_label(rows[0].model, d, rows[0].noise, gamma),
        slope=float(slope),
        intercept=float(intercept),
        stderr=stderr,
        n_used=tuple(a.n for a in rows),
    )


def dim_sweep(cfg: ExperimentConfig, workers: Optional[int] = None) -> DimSweepResult:
    """Aggregated error per embedding dimension at a single n, plus the
    log-log slope of error versus k over the over-specified dimensions."""
    if len(cfg.n_grid) != 1:
        raise ParameterError("dim_sweep requires a single n")
    records = run_experiment(cfg, workers=workers)
    aggs = aggregate(records)
    over = [(a.d - cfg.r, a.mean) for a in aggs if a.d > cfg.r]
    if len(over) < 2:
        raise ParameterError("need at least two over-specified dimensions to fit a k-slope")
    ks = np.log([k for k, _ in over])
    errs = np.log([e for _, e in over])
    slope = float(np.polyfit(ks, errs, 1)[0])
    return DimSweepResult(aggregates=tuple(aggs), k_slope=slope)


# ---------------------------------------------------------------------------
# Serialization: trial CSV, config text format
# ---------------------------------------------------------------------------


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def records_csv_text(records: Sequence[TrialRecord]) -> str:
    lines = [CSV_HEADER]
    for r in records:
        lines.append(
            ",".join(
                [
                    r.model,
                    str(r.n),
                    str(r.d),
                    str(r.r),
                    str(r.k),
                    r.noise or "",
                    _fmt(r.gamma),
                    _fmt(r.rho),
                    str(r.replicate),
                    str(r.seed),
                    _fmt(r.err_2inf),
                    _fmt(r.err_frob),
                    _fmt(r.lower_bound),
                    _fmt(r.deloc_scaled_max),
                    _fmt(r.runtime_ms),
                    r.status,
                ]
            )
        )
    return "\n".join(lines) + "\n"


def write_records_csv(records: Sequence[TrialRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(records_csv_text(records))


def read_records_csv(path: str) -> List[TrialRecord]:
    def opt_float(s: str) -> Optional[float]:
        return float(s) if s else None

    records = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        expected = CSV_HEADER.split(",")
        if reader.fieldnames != expected:
            missing = sorted(set(expected) - set(reader.fieldnames or []))
            raise ParameterError(f"CSV schema mismatch; missing columns: {missing}")
        for row in reader:
            records.append(
                TrialRecord(
                    model=row["model"],
                    n=int(row["n"]),
                    d=int(row["d"]),
                    r=int(row["r"]),
                    k=int(row["k"]),
                    noise=row["noise"] or None,
                    gamma=opt_float(row["gamma"]),
                    rho=float(row["rho"]),
                    replicate=int(row["replicate"]),
                    seed=int(row["seed"]),
                    err_2inf=opt_float(row["err_2inf"]),
                    err_frob=opt_float(row["err_frob"]),
                    lower_bound=opt_float(row["lower_bound"]),
                    deloc_scaled_max=opt_float(row["deloc_scaled_max"]),
                    runtime_ms=float(row["runtime_ms"]),
                    status=row["status"],
                )
            )
    return records


_LIST_KEYS = {"n_grid", "dims", "gamma_grid"}
_BOOL_KEYS = {"deloc", "semicircle", "interlacing", "record_runtime"}
_INT_KEYS = {"r", "replicates", "base_seed", "deloc_window"}
_FLOAT_KEYS = {"tail_fraction"}
_STR_KEYS = {"model", "selection_rule"}


def parse_noise_tag(tag: str) -> NoiseModel:
    """Parse a noise tag: normal:<sigma>, laplace_unit, exponential_centered,
    poisson_centered, or zero (the exact-recovery test hook)."""
    tag = tag.strip()
    if tag.startswith("normal:"):
        try:
            return NoiseModel.normal(float(tag.split(":", 1)[1]))
        except ValueError as exc:
            raise ParameterError(f"bad normal noise tag {tag!r}") from exc
    if tag == "normal":
        return NoiseModel.normal(1.0)
    if tag == "laplace_unit":
        return NoiseModel.laplace_unit()
    if tag == "exponential_centered":
        return NoiseModel.exponential_centered()
    if tag == "poisson_centered":
        return NoiseModel.poisson_centered()
    if tag == "zero":
        return NoiseModel._zero()
    raise ParameterError(f"unknown noise tag {tag!r}")


def parse_config_text(text: str) -> ExperimentConfig:
    """Parse the flat `key = value` experiment configuration format.

    Lines are `key = value`; blank lines and lines starting with '#' are
    ignored. List values are comma separated. Errors carry line numbers.
    """
    fields: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParameterError(f"config line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        try:
            if key in _LIST_KEYS:
                if not value:
                    continue  # empty list means "not set"
                parts = [p.strip() for p in value.split(",") if p.strip()]
                if key == "gamma_grid":
                    fields[key] = tuple(float(p) for p in parts)
                else:
                    fields[key] = tuple(int(p) for p in parts)
            elif key in _BOOL_KEYS:
                if value.lower() not in ("true", "false"):
                    raise ParameterError("expected true or false")
                fields[key] = value.lower() == "true"
            elif key in _INT_KEYS:
                fields[key] = int(value)
            elif key in _FLOAT_KEYS:
                fields[key] = float(value)
            elif key in _STR_KEYS:
                fields[key] = value
            elif key == "noise":
                if value and value != "none":
                    fields[key] = parse_noise_tag(value)
            else:
                raise ParameterError("unknown key")
        except ParameterError as exc:
            raise ParameterError(f"config line {lineno}, field {key!r}: {exc}") from None
        except ValueError as exc:
            raise ParameterError(f"config line {lineno}, field {key!r}: {exc}") from None
    for required in ("model", "n_grid", "dims", "r"):
        if required not in fields:
            raise ParameterError(f"config is missing required field {required!r}")
    return ExperimentConfig(**fields)


def parse_config_file(path: str) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config_text(fh.read())


def config_to_text(cfg: ExperimentConfig) -> str:
    lines = [
        f"model = {cfg.model}",
        f"n_grid = {','.join(str(n) for n in cfg.n_grid)}",
        f"dims = {','.join(str(d) for d in cfg.dims)}",
        f"r = {cfg.r}",
        f"noise = {cfg.noise.tag if cfg.noise else 'none'}",
        f"gamma_grid = {','.join(format(g, 'g') for g in cfg.gamma_grid) if cfg.gamma_grid else ''}",
        f"replicates = {cfg.replicates}",
        f"base_seed = {cfg.base_seed}",
        f"selection_rule = {cfg.selection_rule}",
        f"deloc = {str(cfg.deloc).lower()}",
        f"semicircle = {str(cfg.semicircle).lower()}",
        f"interlacing = {str(cfg.interlacing).lower()}",
        f"deloc_window = {cfg.deloc_window}",
        f"record_runtime = {str(cfg.record_runtime).lower()}",
        f"tail_fraction = {format(cfg.tail_fraction, 'g')}",
    ]
    return "\n".join(lines) + "\n"


_FULL_SCALE = {
    "weighted_dirichlet": dict(
        n_grid=tuple(range(300, 7801, 300)), dims=(4, 5, 6, 10, 20, 40), replicates=80
    ),
    "weighted_weak_signal": dict(
        n_grid=tuple(range(1000, 8001, 1000)), dims=(4, 5, 6, 7, 10, 20), replicates=40
    ),
    "sbm_binary": dict(
        n_grid=tuple(range(300, 7801, 300)), dims=(4, 5, 6, 7, 10, 20), replicates=80
    ),
    "sparse_binary_dirichlet": dict(
        n_grid=tuple(range(300, 7801, 300)), dims=(4, 5, 6, 7, 10, 20), replicates=80
    ),
}


def full_scale_config(cfg: ExperimentConfig) -> ExperimentConfig:
    """Swap the desk-scale grids for the original experiment grids."""
    overrides = dict(_FULL_SCALE[cfg.model])
    if cfg.model == "sparse_binary_dirichlet" and cfg.gamma_grid is None:
        overrides["gamma_grid"] = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5)
    return replace(cfg, **overrides)


def summarize(records: Sequence[TrialRecord], tail_fraction: float = 0.5) -> str:
    """Fixed-format per-condition summary with tail rate fits.

    Column order is stable so the output can be snapshot-tested.
    """
    aggs = aggregate(records)
    lines = ["condition mean sem errbar count"]
    for a in aggs:
        sem = "-" if a.sem is None else format(a.sem, ".6g")
        errbar = "-" if a.errbar is None else format(a.errbar, ".6g")
        lines.append(
            f"{_condition_label(a.model, a.d, a.noise, a.gamma)} n={a.n} "
            f"{format(a.mean, '.6g')} {sem} {errbar} {a.count}"
        )
    seen = []
    for a in aggs:
        key = (a.d, a.gamma)
        if key not in seen:
            seen.append(key)
    lines.append(f"rates tail_fraction={format(tail_fraction, 'g')}")
    for d, gamma in seen:
        try:
            fit = fit_rate(aggs, d=d, gamma=gamma, tail_fraction=tail_fraction)
        except ParameterError:
            continue
        lines.append(
            f"rate {fit.condition} slope={format(fit.slope, '.6g')} "
            f"stderr={format(fit.stderr, '.6g')} n_used={','.join(str(n) for n in fit.n_used)}"
        )
    n_failed = sum(1 for r in records if not r.ok)
    lines.append(f"failed {n_failed} of {len(records)} trials")
    if records and records[0].model in BINARY_MODELS:
        lines.append(CONJECTURE_NOTE)
    return "\n".join(lines) + "\n"
