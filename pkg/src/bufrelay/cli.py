"""Command-line front end.

Subcommands
-----------
analyze   closed-form results: outage curves, fallback probability (pbrs),
          state-space dumps, high-SNR gains
sim       Monte Carlo runs: outage, pbrs (mode statistics), delay
reproduce canned experiment presets (fig2..fig5) written as CSV curve files

Outputs use a fixed CSV schema
    scheme,n,lb,ne,snr_db,rate,value_kind,value,stderr,trials,seed
(RFC 4180, UTF-8, '. ' decimal separator, probabilities with 10 significant
digits) or a JSON report document; every row/report embeds the resolved
configuration and master seed.  Each sweep point derives an independent
substream seed from the master seed and the point coordinates (the same
derivation for every scheme, so schemes are compared on common draws).

Exit codes: 0 success, 2 config/usage error, 3 infeasible or unsupported
configuration, 1 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

import jsonschema

from .channel import LinkBudget, RateConfig, db_to_linear
from .errors import InfeasibleConfigError, UnsupportedConfigError
from . import markov
from .outage import OutageCurve, OutagePoint, analytic_outage, gain_summary
from .sim import SimConfig, SimReport, derive_seed, empirical_p_brs, run_delay_sim, run_outage_sim

CSV_HEADER = (
    "scheme", "n", "lb", "ne", "snr_db", "rate",
    "value_kind", "value", "stderr", "trials", "seed",
)

SCHEMES = ("brs", "mmrs", "hrs")

CONFIG_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "bufrelay experiment configuration",
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "scheme": {
            "oneOf": [
                {"enum": list(SCHEMES)},
                {"type": "array", "items": {"enum": list(SCHEMES)}, "minItems": 1},
            ]
        },
        "n": {"type": "integer", "minimum": 1},
        "lb": {
            "oneOf": [
                {"type": "integer", "minimum": 1},
                {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1},
            ]
        },
        "ne": {
            "oneOf": [
                {"type": "integer", "minimum": 0},
                {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1},
            ]
        },
        "snr_db": {
            "oneOf": [
                {"type": "number"},
                {"type": "array", "items": {"type": "number"}, "minItems": 1},
            ]
        },
        "rate": {"type": "number", "exclusiveMinimum": 0},
        "trials": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer"},
        "workers": {"type": "integer", "minimum": 1},
        "buffer_mode": {"enum": ["analysis_matched", "outage_aware"]},
        "burn_in": {"type": "integer", "minimum": 0},
        "out": {"type": "string"},
        "format": {"enum": ["csv", "json"]},
    },
}


class UsageError(Exception):
    pass


def _default_workers() -> int:
    env = os.environ.get("BUFRELAY_WORKERS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _as_list(value):
    if value is None:
        return None
    return list(value) if isinstance(value, (list, tuple)) else [value]


def _scalar(value, name: str):
    if isinstance(value, (list, tuple)):
        if len(value) != 1:
            raise UsageError(f"{name} takes a single value here, got {list(value)}")
        return value[0]
    return value


def _get(args: argparse.Namespace, cfg: dict, key: str, default=None):
    value = getattr(args, key, None)
    if value is None:
        value = cfg.get(key, default)
    return value


def _half_full(n: int, lb: int) -> int:
    # half the elements, clamped so lb = 1 stays feasible (only ne = 0 exists)
    return min(math.ceil(n * lb / 2), n * (lb - 1))


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def _write_csv(rows: list[dict], stream) -> None:
    writer = csv.writer(stream, lineterminator="\r\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([_fmt(row.get(key)) for key in CSV_HEADER])


def _csv_text(rows: list[dict]) -> str:
    buf = io.StringIO()
    _write_csv(rows, buf)
    return buf.getvalue()


def _emit(args, cfg, rows: list[dict], json_doc: dict | None = None) -> None:
    """Write rows (and the JSON report document for sim commands)."""
    fmt = _get(args, cfg, "format", "csv")
    out = _get(args, cfg, "out")
    json_text = (
        json.dumps(json_doc, sort_keys=True, indent=2) + "\n" if json_doc is not None else None
    )
    if out:
        if fmt == "json" and json_text is not None:
            _write_file(out, json_text)
        else:
            _write_file(out, _csv_text(rows))
            if json_text is not None:
                _write_file(out + ".json", json_text)
    else:
        if fmt == "json" and json_text is not None:
            sys.stdout.write(json_text)
        else:
            sys.stdout.write(_csv_text(rows))


def _write_file(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    print(f"wrote {path}", file=sys.stderr)


def _point_seed(master: int, label: str) -> int:
    return derive_seed(master, label)


def _iid_budget(n: int, snr_db: float) -> LinkBudget:
    return LinkBudget.iid(n, db_to_linear(snr_db))


# ---------------------------------------------------------------- analyze

def _cmd_analyze_outage(args, cfg) -> int:
    schemes = _as_list(_get(args, cfg, "scheme")) or list(SCHEMES)
    n = _get(args, cfg, "n")
    if n is None:
        raise UsageError("--n is required")
    snrs = _as_list(_get(args, cfg, "snr_db"))
    if not snrs:
        raise UsageError("an SNR grid (--snr-db) is required")
    rate = RateConfig(float(_get(args, cfg, "rate", 1.0)))
    lbs = _as_list(_get(args, cfg, "lb")) or [None]
    nes = _as_list(_get(args, cfg, "ne")) or [None]
    points = []
    for scheme in schemes:
        if scheme == "hrs" and lbs == [None]:
            raise UsageError("hrs requires --lb")
        for lb in lbs if scheme == "hrs" else [None]:
            for ne in nes if scheme == "hrs" else [None]:
                ne_res = _half_full(n, lb) if (scheme == "hrs" and ne is None) else ne
                for snr in snrs:
                    prob = analytic_outage(
                        scheme, _iid_budget(n, float(snr)), rate.threshold, lb, ne_res
                    )
                    points.append(OutagePoint(
                        scheme=scheme, n_relays=n, mean_snr_db=float(snr),
                        threshold=rate.threshold, probability=prob,
                        capacity=lb, total_full=ne_res,
                    ))
    curve = OutageCurve(tuple(points), metadata={"rate": rate.rate, "n": n})
    _emit(args, cfg, [_curve_row(p, rate.rate) for p in curve.points])
    return 0


def _curve_row(point: OutagePoint, rate: float) -> dict:
    return {
        "scheme": point.scheme, "n": point.n_relays, "lb": point.capacity,
        "ne": point.total_full, "snr_db": point.mean_snr_db, "rate": rate,
        "value_kind": "outage_analytic", "value": point.probability,
    }


def _cmd_analyze_pbrs(args, cfg) -> int:
    n = _get(args, cfg, "n")
    lbs = _as_list(_get(args, cfg, "lb"))
    if n is None or not lbs:
        raise UsageError("--n and --lb are required")
    nes = _as_list(_get(args, cfg, "ne")) or [None]
    rows = []
    for lb in lbs:
        for ne in nes:
            ne_res = _half_full(n, lb) if ne is None else ne
            pb = markov.p_brs_total(n, lb, ne_res)
            rows.append({
                "scheme": "hrs", "n": n, "lb": lb, "ne": ne_res,
                "value_kind": "p_brs_analytic", "value": float(pb),
            })
            if not _get(args, cfg, "out"):
                print(
                    f"n={n} lb={lb} ne={ne_res}: "
                    f"P_BRS = {pb} (exact) = {float(pb):.6f}, "
                    f"P_MMRS = {1 - pb} (exact) = {float(1 - pb):.6f}, "
                    f"N_s = {markov.count_states(n, lb, ne_res)}"
                )
    if _get(args, cfg, "out"):
        _emit(args, cfg, rows)
    return 0


def _cmd_analyze_states(args, cfg) -> int:
    n = _get(args, cfg, "n")
    lb = _scalar(_get(args, cfg, "lb"), "--lb")
    ne = _scalar(_get(args, cfg, "ne"), "--ne")
    if n is None or lb is None:
        raise UsageError("--n and --lb are required")
    ne_res = _half_full(n, lb) if ne is None else ne
    space = markov.enumerate_states(n, lb, ne_res)
    matrix = markov.build_transition_matrix(space)
    markov.stationary_distribution(matrix)  # verifies structure before dumping
    text = json.dumps(markov.debug_dump(space, matrix), sort_keys=True, indent=2) + "\n"
    out = _get(args, cfg, "out")
    if out:
        _write_file(out, text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_analyze_gains(args, cfg) -> int:
    scheme = _get(args, cfg, "scheme")
    n = _get(args, cfg, "n")
    if scheme is None or n is None:
        raise UsageError("--scheme and --n are required")
    if isinstance(scheme, list):
        raise UsageError("gains takes a single --scheme")
    p_brs = None
    lb = _scalar(_get(args, cfg, "lb"), "--lb")
    ne = _scalar(_get(args, cfg, "ne"), "--ne")
    if scheme == "hrs":
        if lb is None:
            raise UsageError("hrs gains require --lb")
        p_brs = markov.p_brs_total(n, lb, _half_full(n, lb) if ne is None else ne)
    g = gain_summary(scheme, n, p_brs)
    print(
        f"scheme={g.scheme} n={g.n_relays}: diversity_gain={g.diversity_gain} "
        f"coding_gain={g.coding_gain:.6f} snr_gain_vs_brs_db={g.snr_gain_db_vs_brs:.2f}"
    )
    return 0


# -------------------------------------------------------------------- sim

def _sim_config(args, cfg, scheme: str, n: int, snr_db: float, run_seed: int) -> SimConfig:
    lb = _scalar(_get(args, cfg, "lb"), "--lb")
    ne = _scalar(_get(args, cfg, "ne"), "--ne")
    if scheme == "hrs" and lb is None:
        raise UsageError("hrs requires --lb")
    return SimConfig(
        policy=scheme,
        budget=_iid_budget(n, snr_db),
        rate=RateConfig(float(_get(args, cfg, "rate", 1.0))),
        capacity=lb if scheme == "hrs" else None,
        total_full=(ne if ne is not None else None) if scheme == "hrs" else None,
        trials=int(_get(args, cfg, "trials", 1_000_000)),
        seed=run_seed,
        workers=int(_get(args, cfg, "workers", _default_workers())),
        buffer_mode=_get(args, cfg, "buffer_mode", "analysis_matched"),
        burn_in=_get(args, cfg, "burn_in"),
    )


def _report_rows(report: SimReport, kind: str, value, stderr, snr_db, master_seed) -> dict:
    c = report.config
    return {
        "scheme": c["policy"], "n": c["n_relays"], "lb": c["capacity"],
        "ne": c["total_full"], "snr_db": snr_db, "rate": c["rate"],
        "value_kind": kind, "value": value, "stderr": stderr,
        "trials": c["trials"], "seed": master_seed,
    }


def _cmd_sim_outage(args, cfg) -> int:
    scheme = _get(args, cfg, "scheme")
    n = _get(args, cfg, "n")
    snrs = _as_list(_get(args, cfg, "snr_db"))
    if scheme is None or n is None or not snrs:
        raise UsageError("--scheme, --n and --snr-db are required")
    master = int(_get(args, cfg, "seed", 0))
    rows, reports = [], []
    for i, snr in enumerate(snrs):
        label = f"sim-outage:n={n}:snr_db={float(snr):g}:point={i}"
        config = _sim_config(args, cfg, scheme, n, float(snr), _point_seed(master, label))
        report = run_outage_sim(config)
        reports.append(report.to_dict())
        rows.append(_report_rows(
            report, "outage_sim", report.outage_estimate, report.outage_stderr,
            float(snr), master,
        ))
    print(f"seed: {master}", file=sys.stderr)
    _emit(args, cfg, rows, {"seed": master, "reports": reports})
    return 0


def _cmd_sim_pbrs(args, cfg) -> int:
    n = _get(args, cfg, "n")
    lb = _scalar(_get(args, cfg, "lb"), "--lb")
    if n is None or lb is None:
        raise UsageError("--n and --lb are required")
    snr = float(_get(args, cfg, "snr_db", 20.0))
    master = int(_get(args, cfg, "seed", 0))
    label = f"sim-pbrs:n={n}:snr_db={snr:g}:point=0"
    config = _sim_config(args, cfg, "hrs", n, snr, _point_seed(master, label))
    report = empirical_p_brs(config)
    rows = [_report_rows(report, "p_brs_sim", report.p_brs_empirical, None, snr, master)]
    print(f"seed: {master}", file=sys.stderr)
    _emit(args, cfg, rows, {"seed": master, "reports": [report.to_dict()]})
    return 0


def _cmd_sim_delay(args, cfg) -> int:
    scheme = _get(args, cfg, "scheme", "hrs")
    n = _get(args, cfg, "n")
    if n is None:
        raise UsageError("--n is required")
    snr = float(_get(args, cfg, "snr_db", 15.0))
    master = int(_get(args, cfg, "seed", 0))
    label = f"sim-delay:n={n}:snr_db={snr:g}:point=0"
    config = _sim_config(args, cfg, scheme, n, snr, _point_seed(master, label))
    report = run_delay_sim(config)
    rows = [_report_rows(report, "delay_sim", report.average_delay, None, snr, master)]
    print(f"seed: {master}", file=sys.stderr)
    _emit(args, cfg, rows, {"seed": master, "reports": [report.to_dict()]})
    return 0


# -------------------------------------------------------------- reproduce

def _fig_sim(args, cfg, scheme, n, lb, ne, snr_db, seed, trials, burn_in=None) -> SimConfig:
    return SimConfig(
        policy=scheme,
        budget=_iid_budget(n, snr_db),
        rate=RateConfig(1.0),
        capacity=lb if scheme == "hrs" else None,
        total_full=ne if scheme == "hrs" else None,
        trials=trials,
        seed=seed,
        workers=int(_get(args, cfg, "workers", _default_workers())),
        burn_in=burn_in,
    )


def _row(scheme, n, lb, ne, snr_db, kind, value, stderr=None, trials=None, seed=None) -> dict:
    return {
        "scheme": scheme, "n": n, "lb": lb, "ne": ne, "snr_db": snr_db,
        "rate": 1.0, "value_kind": kind, "value": value, "stderr": stderr,
        "trials": trials, "seed": seed,
    }


def _reproduce_fig2(args, cfg, master, trials) -> list[dict]:
    """Outage vs buffer size at 20 dB, N in {2, 3}, half-full buffers."""
    snr, rows = 20.0, []
    for n in (2, 3):
        budget = _iid_budget(n, snr)
        threshold = RateConfig(1.0).threshold
        for scheme in ("brs", "mmrs"):
            prob = analytic_outage(scheme, budget, threshold)
            rows.append(_row(scheme, n, None, None, snr, "outage_analytic", prob))
            seed = _point_seed(master, f"fig2:n={n}:flat")
            rep = run_outage_sim(_fig_sim(args, cfg, scheme, n, None, None, snr, seed, trials))
            rows.append(_row(
                scheme, n, None, None, snr, "outage_sim",
                rep.outage_estimate, rep.outage_stderr, trials, master,
            ))
        for lb in range(1, 51):
            ne = _half_full(n, lb)
            prob = analytic_outage("hrs", budget, threshold, lb, ne)
            rows.append(_row("hrs", n, lb, ne, snr, "outage_analytic", prob))
            seed = _point_seed(master, f"fig2:n={n}:lb={lb}")
            rep = run_outage_sim(_fig_sim(args, cfg, "hrs", n, lb, ne, snr, seed, trials))
            rows.append(_row(
                "hrs", n, lb, ne, snr, "outage_sim",
                rep.outage_estimate, rep.outage_stderr, trials, master,
            ))
    return rows


def _reproduce_fig3(args, cfg, master, trials) -> list[dict]:
    """Outage vs average full elements per relay, L_b = 100, 20 dB."""
    snr, lb, rows = 20.0, 100, []
    for n in (2, 3):
        budget = _iid_budget(n, snr)
        threshold = RateConfig(1.0).threshold
        for k in range(lb):
            ne = n * k
            prob = analytic_outage("hrs", budget, threshold, lb, ne)
            rows.append(_row("hrs", n, lb, ne, snr, "outage_analytic", prob))
            seed = _point_seed(master, f"fig3:n={n}:ne={ne}")
            rep = run_outage_sim(_fig_sim(args, cfg, "hrs", n, lb, ne, snr, seed, trials))
            rows.append(_row(
                "hrs", n, lb, ne, snr, "outage_sim",
                rep.outage_estimate, rep.outage_stderr, trials, master,
            ))
    return rows


def _reproduce_fig4(args, cfg, master, trials) -> list[dict]:
    """Outage vs SNR 0..40 dB for N in {1, 2, 3, 5}; HRS with L_b = 30,
    half full.  Analytic curves at 1 dB steps, simulation at 5 dB steps."""
    lb, rows = 30, []
    threshold = RateConfig(1.0).threshold
    for n in (1, 2, 3, 5):
        ne = _half_full(n, lb)
        for snr_int in range(0, 41):
            snr = float(snr_int)
            budget = _iid_budget(n, snr)
            for scheme in ("brs", "mmrs", "hrs"):
                prob = analytic_outage(
                    scheme, budget, threshold,
                    lb if scheme == "hrs" else None, ne if scheme == "hrs" else None,
                )
                rows.append(_row(
                    scheme, n, lb if scheme == "hrs" else None,
                    ne if scheme == "hrs" else None, snr, "outage_analytic", prob,
                ))
            if snr_int % 5 == 0:
                seed = _point_seed(master, f"fig4:n={n}:snr_db={snr:g}")
                for scheme in ("brs", "mmrs", "hrs"):
                    rep = run_outage_sim(_fig_sim(
                        args, cfg, scheme, n, lb if scheme == "hrs" else None,
                        ne if scheme == "hrs" else None, snr, seed, trials,
                    ))
                    rows.append(_row(
                        scheme, n, lb if scheme == "hrs" else None,
                        ne if scheme == "hrs" else None, snr, "outage_sim",
                        rep.outage_estimate, rep.outage_stderr, trials, master,
                    ))
    return rows


def _reproduce_fig5(args, cfg, master, trials) -> list[dict]:
    """Average HRS packet delay vs buffer size at 15 dB, half-full buffers."""
    snr, rows = 15.0, []
    for n in (2, 3):
        for lb in range(1, 51):
            ne = _half_full(n, lb)
            seed = _point_seed(master, f"fig5:n={n}:lb={lb}")
            rep = run_delay_sim(_fig_sim(args, cfg, "hrs", n, lb, ne, snr, seed, trials))
            rows.append(_row(
                "hrs", n, lb, ne, snr, "delay_sim",
                rep.average_delay, None, trials, master,
            ))
    return rows


_FIGURES = {
    "fig2": (_reproduce_fig2, 1_000_000),
    "fig3": (_reproduce_fig3, 1_000_000),
    "fig4": (_reproduce_fig4, 1_000_000),
    "fig5": (_reproduce_fig5, 100_000),
}


def _cmd_reproduce(args, cfg) -> int:
    builder, default_trials = _FIGURES[args.figure]
    master = int(_get(args, cfg, "seed", 0))
    trials = int(_get(args, cfg, "trials", default_trials))
    rows = builder(args, cfg, master, trials)
    out_dir = _get(args, cfg, "out", ".")
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{args.figure}.csv")
    _write_file(path, _csv_text(rows))
    print(f"seed: {master}", file=sys.stderr)
    return 0


# ------------------------------------------------------------------ main

def _add_common(p: argparse.ArgumentParser, *, multi_snr: bool) -> None:
    p.add_argument("--config", help="JSON experiment config (flags override it)")
    p.add_argument("--n", type=int, help="number of relays")
    p.add_argument("--lb", type=int, nargs="+", help="buffer size(s)")
    p.add_argument("--ne", type=int, nargs="+", help="total full elements (default: half full)")
    if multi_snr:
        p.add_argument("--snr-db", dest="snr_db", type=float, nargs="+", help="SNR grid in dB")
    else:
        p.add_argument("--snr-db", dest="snr_db", type=float, help="SNR in dB")
    p.add_argument("--rate", type=float, help="target rate in bit/sec/Hz (default 1)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=["csv", "json"], help="output format (default csv)")


def _add_sim_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--trials", type=int, help="measured intervals (default 1e6)")
    p.add_argument("--seed", type=int, help="master seed (default 0)")
    p.add_argument("--workers", type=int, help="worker threads (default $BUFRELAY_WORKERS or 1)")
    p.add_argument("--buffer-mode", dest="buffer_mode",
                   choices=["analysis_matched", "outage_aware"])
    p.add_argument("--burn-in", dest="burn_in", type=int,
                   help="unmeasured warm-up intervals (default 10*N*L_b for delay/pbrs)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bufrelay",
        description="Buffer-aided relay selection: exact analysis and Monte Carlo simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="closed-form results")
    asub = analyze.add_subparsers(dest="subcommand", required=True)

    p = asub.add_parser("outage", help="analytic outage curves")
    _add_common(p, multi_snr=True)
    p.add_argument("--scheme", nargs="+", choices=SCHEMES, help="default: all three")
    p.set_defaults(func=_cmd_analyze_outage)

    p = asub.add_parser("pbrs", help="exact BRS-fallback probability of HRS")
    _add_common(p, multi_snr=False)
    p.set_defaults(func=_cmd_analyze_pbrs)

    p = asub.add_parser("states", help="dump buffer state space and transition matrix")
    _add_common(p, multi_snr=False)
    p.set_defaults(func=_cmd_analyze_states)

    p = asub.add_parser("gains", help="diversity/coding gains and SNR gain over BRS")
    _add_common(p, multi_snr=False)
    p.add_argument("--scheme", choices=SCHEMES, help="scheme to evaluate")
    p.set_defaults(func=_cmd_analyze_gains)

    simp = sub.add_parser("sim", help="Monte Carlo simulation")
    ssub = simp.add_subparsers(dest="subcommand", required=True)

    p = ssub.add_parser("outage", help="estimate outage probability")
    _add_common(p, multi_snr=True)
    p.add_argument("--scheme", choices=SCHEMES)
    _add_sim_options(p)
    p.set_defaults(func=_cmd_sim_outage)

    p = ssub.add_parser("pbrs", help="empirical mode statistics and state histogram")
    _add_common(p, multi_snr=False)
    _add_sim_options(p)
    p.set_defaults(func=_cmd_sim_pbrs)

    p = ssub.add_parser("delay", help="average packet delay")
    _add_common(p, multi_snr=False)
    p.add_argument("--scheme", choices=SCHEMES, help="hrs (default) or brs")
    _add_sim_options(p)
    p.set_defaults(func=_cmd_sim_delay)

    p = sub.add_parser("reproduce", help="write a canned experiment as CSV")
    p.add_argument("figure", choices=sorted(_FIGURES))
    p.add_argument("--config", help="JSON experiment config (flags override it)")
    p.add_argument("--out", help="output directory (default: current)")
    p.add_argument("--trials", type=int, help="Monte Carlo trials per point")
    p.add_argument("--seed", type=int, help="master seed (default 0)")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=_cmd_reproduce)

    return parser


def _load_config(args: argparse.Namespace) -> dict:
    path = getattr(args, "config", None)
    if not path:
        return {}
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    jsonschema.validate(doc, CONFIG_SCHEMA)
    return doc


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except jsonschema.ValidationError as exc:
        print(f"config error: {exc.message}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (InfeasibleConfigError, UnsupportedConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
