"""Command-line interface.

Subcommands: generate, embed, experiment, deloc, semicircle, rate.
Exit codes: 0 success, 2 usage or parameter error, 3 domain or degeneracy
error, 4 internal numerical-contract violation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

import numpy as np

from . import harness, netio
from .embedding import SELECTION_RULES, ase, full_spectrum
from .errors import ContractError, DomainError, ParameterError
from .generators import SbmSpec, binary_rdpg, sample_dirichlet_latents, sample_grdpg, sample_sbm, weighted_rdpg
from .rmt import deloc_profile, semicircle_error_curve, wigner_matrix
from .seeding import derive_seed

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CONTRACT = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rdpg-misspec")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="sample a network and write it as a matrix file")
    gen.add_argument("--model", required=True, choices=("weighted", "binary", "sbm", "grdpg"))
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--r", type=int, default=5)
    gen.add_argument("--alpha", default=None, help="comma-separated Dirichlet parameters (default: ones)")
    gen.add_argument("--rho", type=float, default=1.0)
    gen.add_argument("--noise", default="normal:1.0", help="weighted model noise tag")
    gen.add_argument("--p", type=int, default=None, help="GRDPG signature: positive part")
    gen.add_argument("--q", type=int, default=None, help="GRDPG signature: negative part")
    gen.add_argument("--within", type=float, default=harness.SBM_WITHIN, help="SBM within-community probability")
    gen.add_argument("--across", type=float, default=harness.SBM_ACROSS, help="SBM across-community probability")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)

    emb = sub.add_parser("embed", help="spectral embedding of a matrix file")
    emb.add_argument("--in", dest="inp", required=True)
    emb.add_argument("--d", type=int, required=True)
    emb.add_argument("--rule", default="algebraic_descending", choices=SELECTION_RULES)
    emb.add_argument("--out", required=True)

    exp = sub.add_parser("experiment", help="run a Monte Carlo experiment from a config file")
    exp.add_argument("--config", required=True)
    exp.add_argument("--out", required=True, help="trial CSV output path")
    exp.add_argument("--full-scale", action="store_true", help="use the original large grids (slow)")
    exp.add_argument("--workers", type=int, default=None)

    dl = sub.add_parser("deloc", help="trailing-eigenvector delocalization profile")
    src = dl.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="inp", help="matrix file to analyze")
    src.add_argument("--model", choices=("weighted", "binary"), help="generate a trial instead")
    dl.add_argument("--n", type=int, default=1000)
    dl.add_argument("--r", type=int, default=5)
    dl.add_argument("--rho", type=float, default=1.0)
    dl.add_argument("--noise", default="normal:1.0")
    dl.add_argument("--window", type=int, default=10)
    dl.add_argument("--seed", type=int, default=0)
    dl.add_argument("--out", default=None, help="profile CSV output path")

    sc = sub.add_parser("semicircle", help="semicircle-law error curve")
    scs = sc.add_mutually_exclusive_group(required=True)
    scs.add_argument("--in", dest="inp", help="matrix file, used as-is (already scaled)")
    scs.add_argument("--model", choices=("wigner",), help="generate a Wigner matrix")
    sc.add_argument("--n", type=int, default=1000)
    sc.add_argument("--noise", default="normal:1.0")
    sc.add_argument("--eta", type=float, default=1.0)
    sc.add_argument("--emin", type=float, default=-3.0)
    sc.add_argument("--emax", type=float, default=3.0)
    sc.add_argument("--points", type=int, default=121)
    sc.add_argument("--seed", type=int, default=0)
    sc.add_argument("--out", default=None, help="curve CSV output path")

    rt = sub.add_parser("rate", help="aggregate a trial CSV and fit convergence rates")
    rt.add_argument("--csv", required=True)
    rt.add_argument("--tail-fraction", type=float, default=0.5)

    return parser


def _parse_alpha(arg: Optional[str], r: int):
    if arg is None:
        return (1.0,) * r
    try:
        alpha = tuple(float(p) for p in arg.split(","))
    except ValueError as exc:
        raise ParameterError(f"bad --alpha value: {exc}") from None
    return alpha


def _cmd_generate(args) -> int:
    alpha = _parse_alpha(args.alpha, args.r)
    if args.model == "sbm":
        b = np.full((args.r, args.r), args.across) + (args.within - args.across) * np.eye(args.r)
        net, _ = sample_sbm(SbmSpec(n=args.n, alpha=alpha, block_matrix=b), seed=args.seed)
    else:
        latents = sample_dirichlet_latents(args.n, alpha, derive_seed(args.seed, "latents"))
        net_seed = derive_seed(args.seed, "network")
        if args.model == "weighted":
            net = weighted_rdpg(latents, args.rho, harness.parse_noise_tag(args.noise), net_seed)
        elif args.model == "binary":
            net = binary_rdpg(latents, args.rho, net_seed)
        else:  # grdpg
            if args.p is None or args.q is None:
                raise ParameterError("grdpg requires --p and --q")
            net = sample_grdpg(latents, args.p, args.q, args.rho, net_seed)
    netio.write_matrix(args.out, net.adjacency, net.kind, symmetric=True)
    print(f"wrote {net.kind} network n={net.n} to {args.out}")
    return EXIT_OK


def _cmd_embed(args) -> int:
    m, _, _ = netio.read_matrix(args.inp)
    emb = ase(m, args.d, args.rule)
    netio.write_matrix(args.out, emb.coords, "coords", symmetric=False)
    print(f"wrote {emb.coords.shape[0]}x{emb.d} embedding to {args.out}")
    return EXIT_OK


def _cmd_experiment(args) -> int:
    cfg = harness.parse_config_file(args.config)
    if args.full_scale:
        cfg = harness.full_scale_config(cfg)
    records = harness.run_experiment(cfg, workers=args.workers)
    harness.write_records_csv(records, args.out)
    sys.stdout.write(harness.summarize(records, tail_fraction=cfg.tail_fraction))
    return EXIT_OK


def _cmd_deloc(args) -> int:
    if args.window < 1:
        raise ParameterError("--window must be >= 1")
    if args.inp is not None:
        m, _, _ = netio.read_matrix(args.inp)
    else:
        latents = sample_dirichlet_latents(args.n, (1.0,) * args.r, derive_seed(args.seed, "latents"))
        net_seed = derive_seed(args.seed, "network")
        if args.model == "weighted":
            net = weighted_rdpg(latents, args.rho, harness.parse_noise_tag(args.noise), net_seed)
        else:
            net = binary_rdpg(latents, args.rho, net_seed)
        m = net.adjacency
    spectrum = full_spectrum(m, check=True)
    profile = deloc_profile(spectrum, args.r, args.window)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("position,eigenvalue,max_abs_entry\n")
            for i, v in enumerate(profile.per_index_max):
                pos = args.r + 1 + i
                fh.write(f"{pos},{format(spectrum.eigenvalues[pos - 1], '.17g')},{format(v, '.17g')}\n")
    print(f"deloc n={profile.n} r={profile.r} window={profile.k_window} scaled_max={profile.scaled_max:.6g}")
    if args.inp is None and args.model == "binary":
        print(harness.CONJECTURE_NOTE)
    return EXIT_OK


def _cmd_semicircle(args) -> int:
    if not args.eta > 0:
        raise ParameterError("--eta must be > 0")
    if args.points < 1:
        raise ParameterError("--points must be >= 1")
    if args.inp is not None:
        m, _, _ = netio.read_matrix(args.inp)
    else:
        m = wigner_matrix(args.n, args.seed, harness.parse_noise_tag(args.noise))
    curve = semicircle_error_curve(m, (args.emin, args.emax), args.eta, args.points)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("E,eta,emp_re,emp_im,ref_re,ref_im,abs_err\n")
            for z, emp, ref in zip(curve.grid, curve.empirical, curve.reference):
                fh.write(
                    ",".join(
                        format(v, ".17g")
                        for v in (z.real, z.imag, emp.real, emp.imag, ref.real, ref.imag, abs(emp - ref))
                    )
                    + "\n"
                )
    print(f"semicircle sup_error={curve.sup_error:.6g}")
    return EXIT_OK


def _cmd_rate(args) -> int:
    records = harness.read_records_csv(args.csv)
    sys.stdout.write(harness.summarize(records, tail_fraction=args.tail_fraction))
    return EXIT_OK


_HANDLERS = {
    "generate": _cmd_generate,
    "embed": _cmd_embed,
    "experiment": _cmd_experiment,
    "deloc": _cmd_deloc,
    "semicircle": _cmd_semicircle,
    "rate": _cmd_rate,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
