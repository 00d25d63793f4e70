"""Command-line interface: ``ktoeplitz {det,charpoly,eig,inv,bench}``.

Problem specs are JSON objects read from a file or stdin::

    {"ring": {"kind": "zmod", "modulus": 60}, "n": 19, "k": 3,
     "a": ["1", "2", "3"], "b": ["1", "-1", "1"], "c": ["12", "7", "1"]}

Results go to stdout as JSON with sorted keys. Exit status is 0 on success,
2 for malformed input or an algorithm that does not apply, and 3 for a
semantic failure (for instance ``--require-unit`` with a non-unit
determinant).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .benchmark import ALGOS, INV_MAX_N, run_grid
from .determinant import (
    det_auto,
    det_d1,
    det_d2,
    det_d3,
    det_d4,
    det_general,
    det_reducible_factored,
)
from .inverse import inv_entry, inv_full
from .matrix import KToeplitzSpec, count_ops
from .oracle import DenseMatrix, dense_materialize, matmul
from .ring import CountingRing, PolynomialRing, ZMod, ring_from_json, ring_to_json
from .spectral import charpoly, eigencheck, eigvec_v, eigvec_w, lambda_scan

EXIT_OK, EXIT_INPUT, EXIT_SEMANTIC = 0, 2, 3

DET_ALGOS = {
    "d1": det_d1,
    "d2": det_d2,
    "d3": det_d3,
    "d4": det_d4,
    "general": det_general,
    "auto": det_auto,
}


class InputError(Exception):
    pass


class SemanticError(Exception):
    pass


def _parse_int(value, what: str) -> int:
    if isinstance(value, bool):
        raise InputError(f"{what}: expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip(), 10)
        except ValueError:
            pass
    raise InputError(f"{what}: expected an integer string, got {value!r}")


def parse_spec(obj) -> KToeplitzSpec:
    """Validate a wire-form problem spec and reduce its values into the ring."""
    if not isinstance(obj, dict):
        raise InputError("problem spec must be a JSON object")
    missing = [key for key in ("ring", "n", "k", "a", "b", "c") if key not in obj]
    if missing:
        raise InputError(f"problem spec is missing {', '.join(missing)}")
    if not isinstance(obj["ring"], dict):
        raise InputError("'ring' must be an object")
    try:
        ring = ring_from_json(obj["ring"])
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    n, k = _parse_int(obj["n"], "n"), _parse_int(obj["k"], "k")
    if n < 1 or k < 1:
        raise InputError("n and k must be positive")
    seeds = []
    for name in ("a", "b", "c"):
        seq = obj[name]
        if not isinstance(seq, list) or len(seq) != k:
            raise InputError(f"'{name}' must be an array of k={k} integer strings")
        seeds.append(tuple(ring.from_int(_parse_int(v, f"{name}[{i}]")) for i, v in enumerate(seq)))
    return KToeplitzSpec(ring, n, k, *seeds)


def _load(path: str) -> KToeplitzSpec:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return parse_spec(obj)


def _el(spec: KToeplitzSpec, x):
    return None if x is None else spec.ring.format(x)


def _vec(spec: KToeplitzSpec, xs):
    return [spec.ring.format(x) for x in xs]


def _element_arg(spec: KToeplitzSpec, value: str, flag: str):
    return spec.ring.from_int(_parse_int(value, flag))


def _zero_positions(spec: KToeplitzSpec) -> list:
    R = spec.ring
    in_b = [i + 1 for i, v in enumerate(spec.b) if R.is_zero(v)]
    if in_b:
        return in_b
    return [i + 1 for i, v in enumerate(spec.c) if R.is_zero(v)]


def cmd_det(args) -> dict:
    spec = _load(args.input)
    if args.algo == "reducible":
        zeros = args.zeros if args.zeros else _zero_positions(spec)
        if not zeros:
            raise InputError("reducible needs a zero entry in b or c")
        fn = lambda s: det_reducible_factored(s, zeros)  # noqa: E731
    else:
        fn = DET_ALGOS[args.algo]
    try:
        if args.count_ops:
            value, ops = count_ops(fn, spec)
        else:
            value, ops = fn(spec), None
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = {"algo": args.algo, "det": _el(spec, value)}
    if ops is not None:
        out["ops"] = ops.as_dict()
    return out


def cmd_charpoly(args) -> dict:
    spec = _load(args.input)
    P = PolynomialRing(spec.ring)
    if args.count_ops:
        P = CountingRing(P)
    poly = charpoly(spec, P)
    out = {"coefficients": _vec(spec, poly.descending()), "degree": poly.degree}
    if args.count_ops:
        out["ops"] = P.count.as_dict()
    return out


def cmd_eig(args) -> dict:
    spec = _load(args.input)
    if args.scan:
        if not isinstance(spec.ring, ZMod):
            raise InputError("--scan needs a zmod ring")
        rows = lambda_scan(spec)
        return {
            "eigenvalues": [str(lam) for lam, _, z in rows if z is not None],
            "non_eigenvalues": [str(lam) for lam, _, z in rows if z is None],
        }
    if args.lam is None:
        raise InputError("eig needs --lambda V or --scan")
    lam = _element_arg(spec, args.lam, "--lambda")
    value, witness = eigencheck(spec, lam)
    out = {"lambda": _el(spec, lam), "p_lambda": _el(spec, value)}
    z = witness if args.z is None else _element_arg(spec, args.z, "--z")
    if witness is None or z is None:
        out.update(eigenvalue=False, status="not an eigenvalue")
        return out
    build = eigvec_v if args.form == "v" else eigvec_w
    try:
        vec = build(spec, lam, z, p_value=value)
    except ValueError as exc:
        raise SemanticError(str(exc)) from exc
    out.update(eigenvalue=True, z=_el(spec, z), form=args.form,
               vector="absent" if vec is None else _vec(spec, vec))
    return out


def cmd_inv(args) -> dict:
    spec = _load(args.input)
    if (args.row is None) != (args.col is None):
        raise InputError("--row and --col go together")
    if args.row is not None:
        try:
            e = inv_entry(spec, args.row, args.col)
        except IndexError as exc:
            raise InputError(str(exc)) from exc
        if args.require_unit and e.quotient is None:
            raise SemanticError(f"determinant {_el(spec, e.det)} is not a unit")
        return {"i": e.i, "j": e.j, "numerator": _el(spec, e.numerator),
                "det": _el(spec, e.det), "quotient": _el(spec, e.quotient)}
    X = inv_full(spec, with_numerators=True)
    if args.require_unit and X.quotients is None:
        raise SemanticError(f"determinant {_el(spec, X.det)} is not a unit")
    out = {
        "n": spec.n,
        "det": _el(spec, X.det),
        "numerators": [_vec(spec, row) for row in X.numerators],
        "quotients": None if X.quotients is None else [_vec(spec, row) for row in X.quotients],
    }
    if args.check:
        if X.quotients is None:
            raise SemanticError("--check needs a unit determinant")
        R = spec.ring
        T = dense_materialize(spec)
        Xd = DenseMatrix.from_rows(X.quotients)
        ident = [[R.one if i == j else R.zero for j in range(spec.n)] for i in range(spec.n)]
        ok = all(
            [list(r) for r in prod.rows] == ident
            for prod in (matmul(R, T, Xd), matmul(R, Xd, T))
        )
        out["verified"] = ok
        if not ok:
            raise SemanticError("T X = I check failed")
    return out


def _int_list(text: str) -> list:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _ring_arg(text: str):
    if text == "integer":
        return ring_from_json({"kind": "integer"})
    if text.startswith("zmod:"):
        try:
            return ZMod(int(text[5:]))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc
    raise argparse.ArgumentTypeError("ring must be 'integer' or 'zmod:M'")


def cmd_bench(args) -> dict:
    algos = args.algos.split(",")
    bad = [a for a in algos if a not in ALGOS]
    if bad:
        raise InputError(f"unknown algorithm(s) {', '.join(bad)}; choose from {', '.join(ALGOS)}")
    rows = run_grid(algos, args.n, args.k, args.ring, args.seed, args.inv_max_n)
    return {"ring": ring_to_json(args.ring), "rows": [r.as_dict() for r in rows]}


def _text(obj, indent: str = "") -> str:
    lines = []
    for key in sorted(obj):
        val = obj[key]
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_text(val, indent + "  "))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{indent}{key}:")
            for item in val:
                lines.append(indent + "  " + " ".join(f"{k}={item[k]}" for k in sorted(item)))
        elif isinstance(val, list) and val and isinstance(val[0], list):
            lines.append(f"{indent}{key}:")
            for row in val:
                lines.append(indent + "  " + " ".join(row))
        elif isinstance(val, list):
            lines.append(f"{indent}{key}: " + " ".join(str(v) for v in val))
        else:
            lines.append(f"{indent}{key}: {val}")
    return "\n".join(lines)


def _csv(rows: list) -> str:
    buf = io.StringIO()
    fields = list(rows[0]) if rows else []
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ktoeplitz", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="problem spec JSON file (default stdin)")
        p.add_argument("--output", choices=("json", "text"), default="json")
        return p

    p = common(sub.add_parser("det", help="determinant"))
    p.add_argument("--algo", choices=sorted(DET_ALGOS) + ["reducible"], default="auto")
    p.add_argument("--zeros", type=_int_list, help="1-based zero positions for --algo reducible")
    p.add_argument("--count-ops", action="store_true", help="report ring (K) and integer (Z) operations")
    p.set_defaults(func=cmd_det)

    p = common(sub.add_parser("charpoly", help="characteristic polynomial, highest degree first"))
    p.add_argument("--count-ops", action="store_true", help="count polynomial-ring operations")
    p.set_defaults(func=cmd_charpoly)

    p = common(sub.add_parser("eig", help="eigenvalue test and eigenvector"))
    p.add_argument("--lambda", dest="lam", metavar="V")
    p.add_argument("--z", metavar="V", help="annihilator of p(lambda) (default: ring witness)")
    p.add_argument("--form", choices=("v", "w"), default="v")
    p.add_argument("--scan", action="store_true", help="test every residue of a zmod ring")
    p.set_defaults(func=cmd_eig)

    p = common(sub.add_parser("inv", help="inverse entries"))
    p.add_argument("--row", type=int)
    p.add_argument("--col", type=int)
    p.add_argument("--require-unit", action="store_true", help="fail (exit 3) if det is not a unit")
    p.add_argument("--check", action="store_true", help="verify T X = X T = I on the dense matrix")
    p.set_defaults(func=cmd_inv)

    p = common(sub.add_parser("bench", help="measured operation counts against their bounds"), False)
    p.add_argument("--n", type=_int_list, default=[100, 1000, 10000, 100000])
    p.add_argument("--k", type=_int_list, default=[2, 3, 5, 8])
    p.add_argument("--algos", default="d1,d2,d3,d3-total,eig,entry")
    p.add_argument("--ring", type=_ring_arg, default=ZMod(101), help="'integer' or 'zmod:M'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inv-max-n", type=int, default=INV_MAX_N)
    p.add_argument("--csv", action="store_true", help="emit the rows as CSV")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        result = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SemanticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    if getattr(args, "csv", False):
        print(_csv(result["rows"]))
    elif args.output == "text":
        print(_text(result))
    else:
        print(json.dumps(result, sort_keys=True))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
