"""Command-line driver: sweeps and verifications emitting CSV/JSON.

Output files are byte-deterministic for identical flags: floats are printed
with 17 significant digits, rows follow grid order, and line endings are
always "\n".  Every file starts with '#'-prefixed metadata lines.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .entanglement import concurrence, tangle, three_tangle
from .exceptions import ResourceLimitError
from .freefermion import assemble_spectrum
from .hamiltonian import IsingParams, apply_hamiltonian, build_hamiltonian, ground_state
from .qcore import hermitian_eig
from .specialstates import (
    alpha_family,
    bell_extraction_fidelity,
    verify_block_mixedness,
    xstate,
)
from .thermal import thermal_pair_concurrence

MAX_DENSE_QUBITS = 14
MAX_CROSSCHECK_QUBITS = 12
MAX_XSTATE_QUBITS = 13


@dataclass
class SweepResult:
    """Column schema, numeric rows in grid order, and run metadata."""

    schema: list[str]
    rows: list[tuple]
    metadata: dict = field(default_factory=dict)


def _fmt(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def _write_result(res: SweepResult, path: str, fmt: str) -> None:
    if fmt == "json":
        doc = {
            "metadata": res.metadata,
            "schema": res.schema,
            "rows": [[float(v) for v in row] for row in res.rows],
        }
        with open(path, "w", newline="\n") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return
    with open(path, "w", newline="\n") as fh:
        for key, val in res.metadata.items():
            fh.write(f"# {key}: {val}\n")
        fh.write(",".join(res.schema) + "\n")
        for row in res.rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _metadata(args, command: str, **extra) -> dict:
    md = {
        "tool": f"isingring {__version__}",
        "command": command,
        "qubits": getattr(args, "qubits", None),
    }
    md = {k: v for k, v in md.items() if v is not None}
    md.update(extra)
    return md


def _lambda_grid(args) -> np.ndarray:
    if args.lambda_steps < 1:
        raise ValueError("--lambda-steps must be at least 1")
    return np.linspace(args.lambda_min, args.lambda_max, args.lambda_steps)


def _guard(n: int, ceiling: int) -> None:
    if n > ceiling:
        raise ResourceLimitError(
            f"N = {n} exceeds the dense-storage ceiling of {ceiling} qubits"
        )


def _ordered_map(fn, items, threads):
    if threads == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _parse_pair(text: str, n: int) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"pair must look like 'i,j', got {text!r}")
    i, j = (int(p) for p in parts)
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError(f"pair ({i},{j}) invalid for N = {n}")
    return i, j


def cmd_spectrum(args) -> int:
    _guard(args.qubits, MAX_DENSE_QUBITS)
    grid = _lambda_grid(args)

    def levels_at(lam):
        return np.linalg.eigvalsh(build_hamiltonian(IsingParams(args.qubits, lam)))

    all_levels = _ordered_map(levels_at, list(grid), args.threads)
    rows = []
    for lam, levels in zip(grid, all_levels):
        for k, e in enumerate(levels, start=1):
            rows.append((lam, k, e))
    md = _metadata(
        args,
        "spectrum",
        **{"lambda-grid": f"{_fmt(args.lambda_min)} {_fmt(args.lambda_max)} {args.lambda_steps}"},
    )
    _write_result(SweepResult(["lambda", "level", "energy"], rows, md), args.out, args.format)
    return 0


def cmd_ground_entanglement(args) -> int:
    _guard(args.qubits, MAX_DENSE_QUBITS)
    n = args.qubits
    grid = _lambda_grid(args)
    measure = args.measure
    if measure in ("three-tangle", "all") and n != 3:
        raise ValueError(f"--measure {measure} requires N = 3")
    pairs = [_parse_pair(p, n) for p in args.pairs] if args.pairs else [(1, 2)]

    def gs_at(lam):
        return ground_state(IsingParams(n, lam))

    states = _ordered_map(gs_at, list(grid), args.threads)
    rows = []
    if measure == "concurrence":
        schema = ["lambda", "i", "j", "concurrence"]
        for lam, psi in zip(grid, states):
            for i, j in pairs:
                rows.append((lam, i, j, concurrence(psi.marginal([i, j]))))
    elif measure == "tangle":
        schema = ["lambda", "qubit", "tangle"]
        for lam, psi in zip(grid, states):
            rows.append((lam, args.qubit, tangle(psi, args.qubit)))
    elif measure == "three-tangle":
        schema = ["lambda", "three_tangle"]
        for lam, psi in zip(grid, states):
            rows.append((lam, three_tangle(psi)))
    elif measure == "all":
        schema = ["lambda", "concurrence", "tangle", "three_tangle"]
        for lam, psi in zip(grid, states):
            rows.append(
                (lam, concurrence(psi.marginal([1, 2])), tangle(psi, 1), three_tangle(psi))
            )
    else:  # distance-fan: pairs (1, 1+d) for every ring distance
        schema = ["lambda", "distance", "concurrence"]
        for lam, psi in zip(grid, states):
            for d in range(1, n // 2 + 1):
                rows.append((lam, d, concurrence(psi.marginal([1, 1 + d]))))
    md = _metadata(
        args,
        "ground-entanglement",
        measure=measure,
        **{"lambda-grid": f"{_fmt(args.lambda_min)} {_fmt(args.lambda_max)} {args.lambda_steps}"},
    )
    _write_result(SweepResult(schema, rows, md), args.out, args.format)
    return 0


def cmd_thermal(args) -> int:
    _guard(args.qubits, MAX_DENSE_QUBITS)
    n = args.qubits
    lam_grid = _lambda_grid(args)
    if args.temp_steps < 1:
        raise ValueError("--temp-steps must be at least 1")
    t_grid = np.linspace(args.temp_min, args.temp_max, args.temp_steps)
    if np.any(t_grid < 0):
        raise ValueError("temperatures must be non-negative")
    pair = _parse_pair(args.pair, n)

    def cell(cell_args):
        lam, T = cell_args
        if T == 0.0:  # ground-state limit
            psi = ground_state(IsingParams(n, lam))
            return concurrence(psi.marginal(list(pair)))
        return thermal_pair_concurrence(n, lam, T, pair)

    cells = [(lam, T) for lam in lam_grid for T in t_grid]
    values = _ordered_map(cell, cells, args.threads)
    rows = [(lam, T, c) for (lam, T), c in zip(cells, values)]
    md = _metadata(
        args,
        "thermal",
        pair=f"{pair[0]},{pair[1]}",
        **{
            "lambda-grid": f"{_fmt(args.lambda_min)} {_fmt(args.lambda_max)} {args.lambda_steps}",
            "temp-grid": f"{_fmt(args.temp_min)} {_fmt(args.temp_max)} {args.temp_steps}",
        },
    )
    _write_result(
        SweepResult(["lambda", "temperature", "concurrence"], rows, md), args.out, args.format
    )
    return 0


def cmd_xstate_verify(args) -> int:
    n_qubits = args.qubits
    if n_qubits % 2 == 0:
        raise ValueError("xstate-verify requires odd N")
    _guard(n_qubits, MAX_XSTATE_QUBITS)
    tol = args.tolerance
    n = (n_qubits - 1) // 2
    psi = xstate(n_qubits)

    residual = float(
        np.linalg.norm(apply_hamiltonian(IsingParams(n_qubits, 1.0), psi.amplitudes))
    )
    block_devs = []
    for size in range(1, n + 1):
        for start in range(1, n_qubits + 1):
            block = [(start - 1 + t) % n_qubits + 1 for t in range(size)]
            block_devs.append(
                {
                    "start": start,
                    "size": size,
                    "deviation": verify_block_mixedness(psi, block),
                }
            )
    region = tuple(range(1, n + 1))
    family = alpha_family(n_qubits, region)
    gram_dev = float(np.max(np.abs(family.gram() - 2.0**n * np.eye(1 << n))))
    bell_fid = bell_extraction_fidelity(n_qubits, region)

    passed = (
        residual < tol
        and all(b["deviation"] < tol for b in block_devs)
        and gram_dev < tol
        and bell_fid >= 1.0 - tol
    )
    report = {
        "num_qubits": n_qubits,
        "tolerance": tol,
        "residual_zero_energy": residual,
        "block_deviations": block_devs,
        "gram_deviation": gram_dev,
        "bell_fidelity": bell_fid,
        "passed": passed,
    }
    with open(args.out, "w", newline="\n") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return 0 if passed else 1


def cmd_crosscheck(args) -> int:
    if args.n_min < 2 or args.n_max < args.n_min:
        raise ValueError("need 2 <= n-min <= n-max")
    _guard(args.n_max, MAX_CROSSCHECK_QUBITS)
    lambdas = [float(s) for s in args.lambdas.split(",")]
    if not lambdas:
        raise ValueError("lambda list must be non-empty")

    def deviation(cell):
        n, lam = cell
        dense = np.linalg.eigvalsh(build_hamiltonian(IsingParams(n, lam)))
        analytic = assemble_spectrum(n, lam)
        return float(np.max(np.abs(dense - analytic)))

    cells = [(n, lam) for n in range(args.n_min, args.n_max + 1) for lam in lambdas]
    devs = _ordered_map(deviation, cells, args.threads)
    rows = [(n, lam, d) for (n, lam), d in zip(cells, devs)]
    md = _metadata(
        args,
        "crosscheck",
        **{
            "n-range": f"{args.n_min} {args.n_max}",
            "lambdas": args.lambdas,
        },
    )
    _write_result(SweepResult(["n", "lambda", "deviation"], rows, md), args.out, args.format)
    return 0 if all(d <= args.tolerance for d in devs) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isingring",
        description="Spectra, entanglement, and special states of the transverse-field Ising ring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, qubits=True, lam=True, tol_default=1e-9):
        if qubits:
            p.add_argument("--qubits", "-n", type=int, required=True)
        if lam:
            p.add_argument("--lambda-min", type=float, default=0.0)
            p.add_argument("--lambda-max", type=float, default=3.0)
            p.add_argument("--lambda-steps", type=int, default=31)
        p.add_argument("--out", required=True)
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--tolerance", type=float, default=tol_default)
        p.add_argument("--threads", type=int, default=0)

    p = sub.add_parser("spectrum", help="eigenvalues over a lambda grid")
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("ground-entanglement", help="ground-state entanglement sweeps")
    common(p)
    p.add_argument(
        "--measure",
        choices=["concurrence", "tangle", "three-tangle", "all", "distance-fan"],
        default="concurrence",
    )
    p.add_argument("--pairs", nargs="*", help="qubit pairs like 1,2 (concurrence mode)")
    p.add_argument("--qubit", type=int, default=1, help="anchor qubit for tangle mode")
    p.set_defaults(func=cmd_ground_entanglement)

    p = sub.add_parser("thermal", help="pair concurrence over (lambda, T)")
    common(p)
    p.add_argument("--temp-min", type=float, default=0.01)
    p.add_argument("--temp-max", type=float, default=3.0)
    p.add_argument("--temp-steps", type=int, default=31)
    p.add_argument("--pair", default="1,2")
    p.set_defaults(func=cmd_thermal)

    p = sub.add_parser("xstate-verify", help="zero-energy X-state verification report")
    common(p, lam=False)
    p.set_defaults(func=cmd_xstate_verify)

    p = sub.add_parser("crosscheck", help="dense vs free-fermion spectrum comparison")
    common(p, qubits=False, lam=False, tol_default=1e-8)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--lambdas", default="0,0.5,1,2")
    p.set_defaults(func=cmd_crosscheck)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            import os

            args.threads = os.cpu_count() or 1
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
