"""Command line front end.

Input files are JSON::

    {"size": p, "degree": n,
     "coefficients": [P_n, P_{n-1}, ..., P_0],   # each p x p, entries [re, im]
     "column_degrees": [...]}                     # optional

Exit codes: ``check`` returns 0 / 1 / 2 for Stable / NotStable / Indeterminate;
usage and input errors return 64, numerical failures 70 with a JSON error body.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import replace

import numpy as np

from .bezout import bezout_inertia_check
from .eig_oracle import finite_spectrum
from .errors import HankelHurwitzError, ParseError, ShapeError
from .matpoly import MatrixPolynomial
from .perturb import PerturbConfig, run_experiment
from .stability import Tolerances, analyze, hurwitz_check, polynomial_inertia

EXIT_STABLE, EXIT_NOT_STABLE, EXIT_INDETERMINATE = 0, 1, 2
EXIT_USAGE = 64
EXIT_NUMERIC = 70

VERDICT_EXIT = {"Stable": EXIT_STABLE, "NotStable": EXIT_NOT_STABLE, "Indeterminate": EXIT_INDETERMINATE}


def _reject_constant(name):
    raise ValueError(f"non-finite number {name} is not allowed")


def _entry(value, where: str) -> complex:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        raise ShapeError(f"{where}: expected an [re, im] pair, got {json.dumps(value)}")
    re, im = float(value[0]), float(value[1])
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ParseError(f"{where}: non-finite entry")
    return complex(re, im)


def parse_document(doc) -> tuple[MatrixPolynomial, tuple[int, ...] | None]:
    if not isinstance(doc, dict):
        raise ShapeError("top level must be a JSON object")
    for key in ("size", "degree", "coefficients"):
        if key not in doc:
            raise ParseError(f"missing field '{key}'")
    p, n = doc["size"], doc["degree"]
    if not isinstance(p, int) or isinstance(p, bool) or p < 1:
        raise ShapeError(f"'size' must be a positive integer, got {p!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ShapeError(f"'degree' must be a nonnegative integer, got {n!r}")
    coeffs = doc["coefficients"]
    if not isinstance(coeffs, list):
        raise ShapeError("'coefficients' must be a list of matrices")
    if len(coeffs) != n + 1:
        missing = len(coeffs) if len(coeffs) < n + 1 else n + 1
        raise ShapeError(
            f"'coefficients' has {len(coeffs)} matrices, expected {n + 1} "
            f"(first offending index: coefficients[{missing}])"
        )
    out = np.empty((n + 1, p, p), dtype=complex)
    for k, mat in enumerate(coeffs):
        if not isinstance(mat, list) or len(mat) != p:
            raise ShapeError(f"coefficients[{k}]: expected {p} rows")
        for i, row in enumerate(mat):
            if not isinstance(row, list) or len(row) != p:
                got = len(row) if isinstance(row, list) else "non-list"
                raise ShapeError(f"coefficients[{k}][{i}]: expected {p} entries, got {got}")
            for j, value in enumerate(row):
                out[k, i, j] = _entry(value, f"coefficients[{k}][{i}][{j}]")
    cdeg = doc.get("column_degrees")
    if cdeg is not None:
        if (
            not isinstance(cdeg, list)
            or len(cdeg) != p
            or not all(isinstance(c, int) and not isinstance(c, bool) and 0 <= c <= n for c in cdeg)
        ):
            raise ShapeError(f"'column_degrees' must list {p} integers in [0, {n}]")
        cdeg = tuple(cdeg)
    return MatrixPolynomial(out), cdeg


def _coefficient_path(text: str, pos: int) -> list[int] | None:
    """Indices ``[k, i, j]`` of the coefficient entry being read at offset ``pos``."""
    start = text.find('"coefficients"')
    if start < 0 or start > pos:
        return None
    start = text.find("[", start)
    if start < 0 or start > pos:
        return None
    path: list[int] = []
    for ch in text[start:pos]:
        if ch == "[":
            path.append(0)
        elif ch == "]" and path:
            path.pop()
        elif ch == "," and path:
            path[-1] += 1
    return path[:3]


def parse_input(source) -> tuple[MatrixPolynomial, tuple[int, ...] | None]:
    """Read a polynomial file from a path, an open text stream or ``"-"`` for stdin."""
    if hasattr(source, "read"):
        text = source.read()
    elif str(source) == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror}") from exc
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        where = _coefficient_path(text, exc.pos)
        ctx = "" if not where else " (while reading coefficients" + "".join(f"[{i}]" for i in where) + ")"
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}{ctx}") from exc
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return parse_document(doc)


def dump_polynomial(F: MatrixPolynomial, cdeg=None) -> dict:
    doc = {"size": F.p, "degree": F.degree, "coefficients": _cmat(F.coeffs)}
    if cdeg is not None:
        doc["column_degrees"] = list(cdeg)
    return doc


def _cmat(a) -> list:
    a = np.asarray(a)
    if a.ndim == 0:
        z = complex(a)
        return [z.real, z.imag]
    return [_cmat(x) for x in a]


def _clean(obj):
    """Replace non-finite floats by ``None`` so the output is strict JSON."""
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def emit_json(obj, stream) -> None:
    # json writes floats with repr, which round-trips binary64
    json.dump(_clean(obj), stream, indent=2, allow_nan=False)
    stream.write("\n")


def parse_eps(text: str) -> float:
    """``1e-3.5`` means ``10 ** -3.5``; anything else is parsed as a float."""
    text = text.strip()
    try:
        return float(text)
    except ValueError:
        pass
    mant, sep, exp = text.lower().partition("e")
    try:
        if sep:
            return float(mant) * 10.0 ** float(exp)
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"invalid eps value {text!r}")


def parse_eps_list(text: str) -> list[float]:
    return [parse_eps(t) for t in text.split(",") if t.strip()]


def _tolerances(args) -> Tolerances:
    tol = Tolerances(symmetrize=args.symmetrize)
    if args.tol is not None:
        tol = tol.with_tol(args.tol)
    if args.hermitian_tol is not None:
        tol = replace(tol, hermitian_tol=args.hermitian_tol)
    if args.axis_tol is not None:
        tol = replace(tol, axis_tol=args.axis_tol)
    return tol


def _seq_dict(a) -> dict:
    seq = a.sequence
    return {
        "l": seq.l,
        "markov_parameters": _cmat(seq.params),
        "hermitian_deviation": seq.hermitian_deviation,
        "is_hermitian": seq.is_hermitian,
        "column_degrees": list(a.split.cdeg),
        "normalizing_unitary": _cmat(a.normalized.q),
    }


def _hankel_dict(a) -> dict:
    idx, h = a.index_sets, a.hankel
    rows0 = h.block_offsets_h0
    return {
        "h0": _cmat(h.h0),
        "h1": _cmat(h.h1),
        "sizes": {"h0": h.sizes[0], "h1": h.sizes[1]},
        "all_even": h.all_even,
        "block_offsets_h0": list(rows0),
        "block_offsets_h1": list(h.block_offsets_h1),
        "index_sets": {
            "I": [list(idx.labels(i)) for i in range(idx.m + 1)],
            "I_tilde": [list(idx.tilde_labels(i)) for i in range(idx.m + 1)],
        },
    }


def cmd_check(F, cdeg, tol, args, out) -> int:
    report = hurwitz_check(F, tol, cdeg)
    doc = report.to_dict()
    if args.oracle:
        spec = finite_spectrum(F, tol.axis_tol)
        doc["oracle"] = spec.to_dict()
        if report.verdict.value != "Indeterminate":
            doc["oracle"]["agrees"] = (report.verdict.value == "Stable") == spec.hurwitz_stable
    emit_json(doc, out)
    return VERDICT_EXIT[report.verdict.value]


def cmd_markov(F, cdeg, tol, args, out) -> int:
    emit_json(_seq_dict(analyze(F, tol, cdeg)), out)
    return 0


def cmd_hankel(F, cdeg, tol, args, out) -> int:
    emit_json(_hankel_dict(analyze(F, tol, cdeg)), out)
    return 0


def cmd_inertia(F, cdeg, tol, args, out) -> int:
    pi = polynomial_inertia(F, tol, cdeg)
    emit_json({
        "inertia": dict(zip(("gamma_plus", "gamma_minus", "gamma_zero"), pi.triple)),
        "determinate": pi.determinate,
    }, out)
    return 0


def cmd_eig(F, cdeg, tol, args, out) -> int:
    emit_json(finite_spectrum(F, tol.axis_tol).to_dict(), out)
    return 0


def cmd_bezout(F, cdeg, tol, args, out) -> int:
    emit_json(bezout_inertia_check(F, tol, cdeg).to_dict(), out)
    return 0


def cmd_perturb(F, cdeg, tol, args, out) -> int:
    config = PerturbConfig(
        eps_grid=tuple(sorted(args.eps)),
        samples_per_eps=args.samples,
        seed=args.seed,
        entry_kind="complex" if args.complex else "real",
        tolerances=tol,
        workers=args.workers,
    )
    result = run_experiment(F, config)
    if args.format == "json":
        emit_json(result.to_dict(), out)
    else:
        out.write(result.to_csv())
    return 0


COMMANDS = {
    "check": (cmd_check, "Hurwitz verdict from the Hankel pair"),
    "markov": (cmd_markov, "dump the Markov parameters"),
    "hankel": (cmd_hankel, "dump H0, H1 and the index sets"),
    "inertia": (cmd_inertia, "inertia of F relative to the imaginary axis"),
    "eig": (cmd_eig, "finite spectrum from the companion pencil"),
    "bezout-verify": (cmd_bezout, "compare Bezoutian inertia with the Hankel pair"),
    "perturb": (cmd_perturb, "perturbation experiment"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="polynomial JSON file, or - for stdin")
    common.add_argument("--tol", type=float, help="zero and inertia tolerance")
    common.add_argument("--hermitian-tol", type=float)
    common.add_argument("--axis-tol", type=float)
    common.add_argument("--symmetrize", action="store_true",
                        help="replace each s_k by its Hermitian part")
    common.add_argument("--format", choices=("json", "csv"), default=None)

    parser = _Parser(prog="hankel-hurwitz", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name == "check":
            p.add_argument("--oracle", action="store_true",
                           help="append the eigenvalue oracle cross-check")
        if name == "perturb":
            p.add_argument("--eps", type=parse_eps_list, default=[10 ** -3.5],
                           help="comma separated list; 1e-3.5 means 10^-3.5")
            p.add_argument("--samples", type=int, default=200)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--complex", action="store_true",
                           help="complex perturbation entries")
            p.add_argument("--workers", type=int, default=None)
    return parser


def main(argv=None, stdout=None) -> int:
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = args.format or ("csv" if args.command == "perturb" else "json")
    if fmt == "csv" and args.command != "perturb":
        print("hankel-hurwitz: --format csv is only available for perturb", file=sys.stderr)
        return EXIT_USAGE
    args.format = fmt
    if args.command == "perturb" and (args.samples < 1 or args.seed < 0 or not args.eps):
        print("hankel-hurwitz: --samples must be >= 1, --seed >= 0, --eps nonempty", file=sys.stderr)
        return EXIT_USAGE
    try:
        F, cdeg = parse_input(args.input)
    except ParseError as exc:
        print(f"hankel-hurwitz: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        tol = _tolerances(args)
        return COMMANDS[args.command][0](F, cdeg, tol, args, out)
    except (HankelHurwitzError, np.linalg.LinAlgError, ValueError) as exc:
        emit_json({"error": type(exc).__name__, "message": str(exc)}, out)
        return EXIT_NUMERIC


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
