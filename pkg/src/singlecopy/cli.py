"""Command-line front end: scans, spectra, scaling fits, closed forms.

Subcommands
-----------
spectrum        single-particle entanglement spectrum of one subsystem
scan            (model, parameter, L) sweep -> CSV/JSON scan table
fit-c           central-charge report from a scan table
analytic        evaluate one closed-form prediction
compare-oracle  XXZ exact diagonalization vs free-fermion route at Delta=0

Exit codes: 0 success, 2 invalid configuration or input, 3 numerical
failure. Output is deterministic byte-for-byte for a fixed configuration:
rows are sorted by (parameter, L), floats printed with 17 significant
digits. Options may also come from a config file of `key = value` lines
(`#` comments; keys are the long option names; list-valued options are
whitespace-separated); command-line flags win over the file, which wins
over built-in defaults. The environment variable SCE_MAX_ED_SITES lifts
the exact-diagonalization site cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import analytic, exact_diag, free_fermion, scaling
from .entanglement import (
    distillation_bound,
    many_body_spectrum,
    summary_from_single_particle,
    summary_from_weights,
)

SCAN_HEADER = "model,delta_or_k,L,S,S1,w1,lnZ,E0,M_max"

_DEFAULTS = {
    "model": "xx",
    "nu": 0.5,
    "geometry": "infinite",
    "observable": "S1",
    "format": "csv",
    "threads": 1,
    "out": None,
    "delta": None,
    "k": None,
    "L": None,
    "L_range": None,
}


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _parse_config_file(path: str) -> dict:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


class _Options:
    """Merged view of flags > config file > defaults."""

    def __init__(self, args: argparse.Namespace, config: dict):
        self._args = args
        self._config = config

    def get(self, name, convert=None):
        flag = getattr(self._args, name, None)
        if flag is not None:
            return flag
        if name in self._config:
            raw = self._config[name]
            return convert(raw) if convert else raw
        return _DEFAULTS.get(name)


def _split_list(raw: str) -> list[str]:
    return raw.replace(",", " ").split()


def _geometric_range(spec: str) -> list[int]:
    """START:STOP:FACTOR -> geometric integer ladder, e.g. 64:4096:2."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"L-range must be START:STOP:FACTOR, got {spec!r}")
    start, stop, factor = int(parts[0]), int(parts[1]), float(parts[2])
    if start < 1 or stop < start or factor <= 1:
        raise ValueError(f"invalid L-range {spec!r}")
    out = []
    val = float(start)
    while round(val) <= stop:
        out.append(int(round(val)))
        val *= factor
    return out


def _resolve_lengths(opts: _Options) -> list[int]:
    explicit = opts.get("L", lambda raw: [int(v) for v in _split_list(raw)])
    rng = opts.get("L_range", str)
    if explicit and rng:
        raise ValueError("give either --L or --L-range, not both")
    if rng:
        return _geometric_range(rng)
    if not explicit:
        raise ValueError("no system sizes given (--L or --L-range)")
    return sorted(set(int(v) for v in explicit))


def _ed_cap() -> int:
    env = os.environ.get("SCE_MAX_ED_SITES")
    return int(env) if env else exact_diag.ED_SITE_CAP


def _write_output(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# scan rows
# ---------------------------------------------------------------------------

def _row(model: str, parameter: float, L: int, summary) -> dict:
    return {
        "model": model,
        "delta_or_k": parameter,
        "L": L,
        "S": summary.S,
        "S1": summary.S1,
        "w1": summary.w1,
        "lnZ": summary.lnZ,
        "E0": summary.E0,
        "M_max": distillation_bound(summary.w1).M_max,
    }


def _xx_row(nu: float, L: int) -> dict:
    corr = free_fermion.xx_correlations_infinite(L, nu)
    summary = summary_from_single_particle(free_fermion.single_particle_energies(corr))
    return _row("xx", nu, L, summary)


def _tfim_row(k: float, L: int) -> dict:
    model = free_fermion.FermionModelSpec(kind="tfim", modulus=k, length=L)
    corr = free_fermion.ground_state_correlations(free_fermion.build_bdg(model))
    cut = (L + 1) // 2
    spec = free_fermion.single_particle_energies(corr, range(cut))
    return _row("tfim", k, L, summary_from_single_particle(spec))


def _xxz_row(delta: float, L: int, cap: int) -> dict:
    state = exact_diag.xxz_ground_state(exact_diag.XxzSpec(L, delta), max_sites=cap)
    summary = summary_from_weights(exact_diag.rdm_weights(state, (L + 1) // 2))
    return _row("xxz-ed", delta, L, summary)


def cmd_scan(opts: _Options) -> int:
    model = opts.get("model")
    lengths = _resolve_lengths(opts)
    if model == "xx":
        nu = opts.get("nu", float)
        tasks = [(nu, L) for L in lengths]
        worker = lambda p: _xx_row(*p)
    elif model == "tfim":
        ks = opts.get("k", lambda raw: [float(v) for v in _split_list(raw)])
        if not ks:
            raise ValueError("tfim scan needs --k")
        tasks = [(k, L) for k in sorted(set(ks)) for L in lengths]
        worker = lambda p: _tfim_row(*p)
    elif model == "xxz-ed":
        deltas = opts.get("delta", lambda raw: [float(v) for v in _split_list(raw)])
        if not deltas:
            raise ValueError("xxz-ed scan needs --delta")
        cap = _ed_cap()
        tasks = [(d, L) for d in sorted(set(deltas)) for L in lengths]
        worker = lambda p: _xxz_row(*p, cap)
    else:
        raise ValueError(f"unknown scan model {model!r}")

    threads = int(opts.get("threads"))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(worker, tasks))
    else:
        rows = [worker(p) for p in tasks]
    rows.sort(key=lambda r: (r["delta_or_k"], r["L"]))

    fmt = opts.get("format")
    if fmt == "csv":
        lines = [SCAN_HEADER]
        for r in rows:
            lines.append(
                ",".join(
                    [
                        r["model"],
                        _fmt(r["delta_or_k"]),
                        str(r["L"]),
                        _fmt(r["S"]),
                        _fmt(r["S1"]),
                        _fmt(r["w1"]),
                        _fmt(r["lnZ"]),
                        _fmt(r["E0"]),
                        str(r["M_max"]),
                    ]
                )
            )
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        text = json.dumps(rows, indent=2, sort_keys=True) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    _write_output(text, opts.get("out"))
    return 0


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

def cmd_spectrum(opts: _Options) -> int:
    model = opts.get("model")
    lengths = _resolve_lengths(opts)
    if len(lengths) != 1:
        raise ValueError("spectrum wants exactly one subsystem size")
    L = lengths[0]
    if model == "xx":
        nu = opts.get("nu", float)
        corr = free_fermion.xx_correlations_infinite(L, nu)
        spec = free_fermion.single_particle_energies(corr)
    elif model == "tfim":
        raw_k = opts.get("k", lambda raw: [float(v) for v in _split_list(raw)])
        if not raw_k or len(raw_k) != 1:
            raise ValueError("tfim spectrum needs exactly one --k")
        chain = free_fermion.FermionModelSpec(kind="tfim", modulus=raw_k[0], length=2 * L)
        corr = free_fermion.ground_state_correlations(free_fermion.build_bdg(chain))
        spec = free_fermion.single_particle_energies(corr, range(L))
    else:
        raise ValueError(f"spectrum supports models xx and tfim, got {model!r}")
    lines = ["k,epsilon,zeta,zero_mode"]
    for i, (eps, zeta) in enumerate(zip(spec.epsilons, spec.occupations)):
        lines.append(f"{i},{_fmt(eps)},{_fmt(zeta)},{int(eps == 0.0)}")
    _write_output("\n".join(lines) + "\n", opts.get("out"))
    return 0


# ---------------------------------------------------------------------------
# fit-c
# ---------------------------------------------------------------------------

def _read_scan_csv(path: str) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or lines[0] != SCAN_HEADER:
        raise ValueError(f"{path}: not a scan table (expected header {SCAN_HEADER!r})")
    names = SCAN_HEADER.split(",")
    rows = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != len(names):
            raise ValueError(f"{path}: malformed row {ln!r}")
        row = dict(zip(names, parts))
        rows.append(row)
    return rows


_GEOMETRIES = {
    "infinite": analytic.InfiniteLineInterval(1.0),
    "half-infinite": analytic.HalfInfiniteEnd(1.0),
    "finite-cut": analytic.FiniteChainCut(2.0, 1.0),
}


def cmd_fit_c(opts: _Options, scan_path: str) -> int:
    rows = _read_scan_csv(scan_path)
    geometry = opts.get("geometry")
    if geometry not in _GEOMETRIES:
        raise ValueError(f"unknown geometry {geometry!r}")
    observable = opts.get("observable")
    factor = scaling.geometry_factor(_GEOMETRIES[geometry])
    if observable == "S":
        factor /= 2.0
    points = [
        scaling.ScanPoint(L=float(r["L"]), S1=float(r["S1"]), S=float(r["S"]))
        for r in rows
    ]
    series = scaling.local_c_estimates(points, factor, observable=observable)
    report = {
        "observable": observable,
        "geometry": geometry,
        "geometry_factor": factor,
        "L_mid": [m for m, _ in series.entries],
        "c_local": [v for _, v in series.entries],
        "c_extrapolated": None,
        "k1": None,
        "residual": None,
        "warnings": [],
    }
    try:
        report["c_extrapolated"] = scaling.extrapolate_c(series)
    except ValueError as err:
        report["warnings"].append(f"extrapolation failed: {err}")
    if report["c_extrapolated"] is not None and observable == "S1":
        geom = _GEOMETRIES[geometry]
        k1, residual = scaling.fit_conformal_constants(
            points, geom, report["c_extrapolated"]
        )
        report["k1"] = k1
        report["residual"] = residual
    _write_output(json.dumps(report, indent=2, sort_keys=True) + "\n", opts.get("out"))
    return 0


# ---------------------------------------------------------------------------
# analytic
# ---------------------------------------------------------------------------

def _kv(params: list[str]) -> dict:
    out = {}
    for tok in params:
        if "=" not in tok:
            raise ValueError(f"expected key=value, got {tok!r}")
        key, _, val = tok.partition("=")
        out[key.strip()] = float(val)
    return out


def cmd_analytic(formula: str, params: list[str], opts: _Options) -> int:
    geometry = None
    if params and "=" not in params[0]:
        geometry = params[0]
        params = params[1:]
    kv = _kv(params)
    if formula == "elliptic-k":
        value = analytic.elliptic_K(kv["k"])
    elif formula == "tfim-s1":
        value = analytic.tfim_s1_half(kv["k"])
    elif formula == "tfim-s1-critical":
        value = analytic.tfim_s1_near_critical(kv["k"])
    elif formula == "xx-spectrum":
        value = analytic.xx_asymptotic_spectrum(kv["L"], int(kv.get("k", 0)))
    elif formula == "conformal-s1":
        p = analytic.ConformalParams(
            c=kv.get("c", 1.0), a=kv.get("a", 1.0), k1=kv.get("k1", 0.0)
        )
        if geometry in (None, "infinite"):
            geom = analytic.InfiniteLineInterval(kv["L"])
        elif geometry == "half-infinite":
            geom = analytic.HalfInfiniteEnd(kv["L"])
        elif geometry == "finite":
            geom = analytic.FiniteChainCut(kv["L"], kv["l"])
        else:
            raise ValueError(f"unknown geometry token {geometry!r}")
        value = analytic.conformal_s1(geom, p)
    elif formula == "conformal-renyi-trace":
        p = analytic.ConformalParams(
            c=kv.get("c", 1.0), a=kv.get("a", 1.0), b_n=kv.get("bn", 1.0)
        )
        value = analytic.conformal_renyi_trace(kv["L"], kv["n"], p)
    else:
        raise ValueError(f"unknown formula {formula!r}")
    _write_output(f"{value:.12g}\n", opts.get("out"))
    return 0


# ---------------------------------------------------------------------------
# compare-oracle
# ---------------------------------------------------------------------------

def cmd_compare_oracle(opts: _Options) -> int:
    explicit = opts.get("L", lambda raw: [int(v) for v in _split_list(raw)])
    lengths = sorted(set(explicit)) if explicit else [3, 5, 7, 9, 11, 13, 15]
    bad = [L for L in lengths if L % 2 == 0]
    if bad:
        raise ValueError(f"oracle comparison is defined for odd lengths, got {bad}")
    cap = _ed_cap()
    top = 100
    per_length = {}
    for L in lengths:
        cut = (L + 1) // 2
        state = exact_diag.xxz_ground_state(exact_diag.XxzSpec(L, 0.0), max_sites=cap)
        ed_weights = exact_diag.rdm_weights(state, cut)
        ed_summary = summary_from_weights(ed_weights)

        chain = free_fermion.FermionModelSpec(kind="xx", length=L)
        # the Sz=+1/2 sector state has the chain zero mode occupied
        corr = free_fermion.ground_state_correlations(
            free_fermion.build_bdg(chain), zero_mode="filled"
        )
        spec = free_fermion.single_particle_energies(corr, range(cut))
        ff_summary = summary_from_single_particle(spec)
        ff_weights = many_body_spectrum(spec, top)

        n = max(len(ed_weights.weights), len(ff_weights.weights))
        a = np.zeros(min(top, n))
        b = np.zeros(min(top, n))
        a[: min(len(ed_weights.weights), top)] = ed_weights.weights[:top]
        b[: min(len(ff_weights.weights), top)] = ff_weights.weights[:top]
        per_length[str(L)] = {
            "dS1": abs(ed_summary.S1 - ff_summary.S1),
            "dS": abs(ed_summary.S - ff_summary.S),
            "dweight": float(np.max(np.abs(a - b))),
            "dE": abs(state.energy - ff_ground_energy(L)),
        }
    report = {
        "delta": 0.0,
        "lengths": lengths,
        "per_length": per_length,
        "max_dS1": max(v["dS1"] for v in per_length.values()),
        "max_dS": max(v["dS"] for v in per_length.values()),
        "max_dweight": max(v["dweight"] for v in per_length.values()),
        "max_dE": max(v["dE"] for v in per_length.values()),
    }
    _write_output(json.dumps(report, indent=2, sort_keys=True) + "\n", opts.get("out"))
    return 0


def ff_ground_energy(L: int) -> float:
    """Open XX chain ground energy: filled negative single-particle modes."""
    q = np.arange(1, L + 1)
    e = np.cos(np.pi * q / (L + 1))
    return float(np.sum(e[e < -1e-12]))


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sce",
        description="Single-copy entanglement toolkit for quantum chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_format=False):
        p.add_argument("--config", default=None,
                       help="key = value config file; flags take precedence")
        p.add_argument("--model", choices=["xx", "tfim", "xxz-ed"], default=None)
        p.add_argument("--delta", nargs="+", type=float, default=None,
                       help="XXZ anisotropies")
        p.add_argument("--k", nargs="+", type=float, default=None,
                       help="Ising couplings (elliptic modulus)")
        p.add_argument("--nu", type=float, default=None, help="XX filling, default 1/2")
        p.add_argument("--L", nargs="+", type=int, default=None, help="system sizes")
        p.add_argument("--L-range", dest="L_range", default=None,
                       help="geometric ladder START:STOP:FACTOR, e.g. 64:4096:2")
        p.add_argument("--geometry", choices=sorted(_GEOMETRIES), default=None)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--threads", type=int, default=None,
                       help="parallel scan workers (output order is unaffected)")
        if with_format:
            p.add_argument("--format", choices=["csv", "json"], default=None)

    p_spec = sub.add_parser("spectrum", help="single-particle entanglement spectrum")
    common(p_spec)

    p_scan = sub.add_parser("scan", help="entanglement scan table")
    common(p_scan, with_format=True)

    p_fit = sub.add_parser("fit-c", help="central-charge report from a scan table")
    p_fit.add_argument("scan_file", help="CSV produced by `sce scan`")
    p_fit.add_argument("--observable", choices=["S1", "S"], default=None)
    common(p_fit)

    p_ana = sub.add_parser("analytic", help="evaluate a closed-form prediction")
    p_ana.add_argument("formula", help="elliptic-k | tfim-s1 | tfim-s1-critical | "
                                       "conformal-s1 | conformal-renyi-trace | xx-spectrum")
    p_ana.add_argument("params", nargs="*", help="[geometry] key=value ...")
    p_ana.add_argument("--config", default=None)
    p_ana.add_argument("--out", default=None)

    p_cmp = sub.add_parser("compare-oracle",
                           help="XXZ diagonalization vs free-fermion route at Delta=0")
    common(p_cmp)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _parse_config_file(args.config) if args.config else {}
        opts = _Options(args, config)
        if args.command == "spectrum":
            return cmd_spectrum(opts)
        if args.command == "scan":
            return cmd_scan(opts)
        if args.command == "fit-c":
            return cmd_fit_c(opts, args.scan_file)
        if args.command == "analytic":
            return cmd_analytic(args.formula, args.params, opts)
        if args.command == "compare-oracle":
            return cmd_compare_oracle(opts)
        raise ValueError(f"unknown command {args.command!r}")
    except (np.linalg.LinAlgError, ArithmeticError, RuntimeError) as err:
        # LinAlgError subclasses ValueError, so numerical failures go first
        print(f"numerical failure: {err}", file=sys.stderr)
        return 3
    except (ValueError, OSError, KeyError, TypeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
