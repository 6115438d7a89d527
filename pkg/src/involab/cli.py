"""Command-line interface: enumerate, biject, series, verify, closed, table.

JSON output has sorted keys and every number rendered as a string, so the
same invocation always prints the same bytes.

Exit codes: 0 success, 1 verification mismatch, 2 bad flags, 3 size limit
exceeded, 4 input outside a map's domain, 5 unknown name.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import oracle
from .bijections import phi, phi_inv, psi, rtl_lemma_map, stack_sort_word
from .catalog import catalog_names, closed_count, gf_catalog
from .contfrac import CF_NAMES, cf_catalog, rtl_gf
from .errors import DomainError, LimitExceeded, UnknownName
from .perm import format_perm, inversions, parity, parse_perm, statistics
from .series import Poly
from .succession import (
    FIXED_POINTS,
    INVERSIONS,
    RISES,
    bounded_system,
    dp_inversions,
    dp_rises,
    level_counts,
    table_to_csv,
)
from .verify import MATCH, TARGETS, verify
from .words import (
    check_word,
    double_step_count,
    factors,
    primitive_factor_count,
    right_dyck_steps,
    surplus,
    xi,
    xi_inv,
)

EXIT_OK, EXIT_MISMATCH, EXIT_FLAGS, EXIT_LIMIT, EXIT_DOMAIN, EXIT_UNKNOWN = range(6)

DEFAULT_ORDER = 20
MAX_ORDER = 64
MAX_TABLE_N = 20


class FlagError(Exception):
    pass


def _strings(obj):
    """Numbers become strings, recursively."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _strings(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_strings(v) for v in obj]
    return str(obj)


def _dump_json(obj) -> str:
    return json.dumps(_strings(obj), sort_keys=True, ensure_ascii=False, indent=2)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _order(args) -> int:
    if args.order is not None:
        order = args.order
    else:
        env = os.environ.get("INVOLAB_ORDER")
        try:
            order = int(env) if env else DEFAULT_ORDER
        except ValueError:
            raise FlagError(f"INVOLAB_ORDER must be an integer, got {env!r}")
    if not 0 <= order <= MAX_ORDER:
        raise FlagError(f"order must lie in 0..{MAX_ORDER}")
    return order


def _limits(args) -> dict:
    lim = {oracle.INVOLUTIONS: args.max_involutions, oracle.PERMUTATIONS: args.max_permutations}
    if min(lim.values()) <= 0:
        raise FlagError("size limits must be positive")
    return lim


# enumerate -----------------------------------------------------------------------


def _contain(items) -> tuple:
    out = []
    for item in items or ():
        pat, sep, cnt = item.partition("=")
        if not sep:
            raise FlagError(f"--contain expects PATTERN=COUNT, got {item!r}")
        try:
            out.append((pat, int(cnt)))
        except ValueError:
            raise FlagError(f"bad count in {item!r}")
    return tuple(out)


def _split_list(items) -> tuple:
    return tuple(s for item in items or () for s in item.split(",") if s)


def cmd_enumerate(args):
    if args.n < 0:
        raise FlagError("--n must be nonnegative")
    q = oracle.CountQuery(args.cls, args.n, _split_list(args.avoid), _contain(args.contain),
                          _split_list(args.stats))
    limit = _limits(args)[args.cls]
    meta = {"class": args.cls, "n": args.n, "avoid": [str(t) for t in q.avoid],
            "contain": {str(t): c for t, c in q.contain}}
    if not q.stats:
        objs = oracle.enumerate_objects(q, limit)
        text = [format_perm(p) for p in objs]
        if args.format == "json":
            return _dump_json(dict(meta, count=len(objs), objects=text)), EXIT_OK
        if args.format == "csv":
            return _csv(["permutation"], [[t] for t in text]), EXIT_OK
        return "\n".join(text), EXIT_OK
    dist = oracle.distribution(q, limit)
    rows = sorted(dist.items(), key=lambda kv: tuple(_sort_key(v) for v in kv[0]))
    if args.format == "json":
        table = {",".join(map(str, key)): cnt for key, cnt in rows}
        return _dump_json(dict(meta, stats=list(q.stats), distribution=table,
                               total=sum(dist.values()))), EXIT_OK
    if args.format == "csv":
        return _csv(list(q.stats) + ["count"], [list(k) + [c] for k, c in rows]), EXIT_OK
    return "\n".join(f"{','.join(map(str, k))}: {c}" for k, c in rows), EXIT_OK


def _sort_key(v):
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


# biject ----------------------------------------------------------------------------


def _perm_stats(p) -> dict:
    st = statistics(p)
    return {"length": len(p), "fixed_points": st.fixed_points, "inversions": inversions(p),
            "parity": parity(p), "rises": st.rises, "rtl_maxima": st.rtl_maxima}


def _word_stats(w) -> dict:
    b = xi(w) if w.count("U") >= w.count("D") else None
    out = {"length": len(w), "surplus": surplus(w), "factors": len(factors(w))}
    if b is not None:
        out["right_dyck_steps"] = right_dyck_steps(w)
        out["double_steps_of_xi"] = double_step_count(b)
    return out


def cmd_biject(args):
    m, text = args.map, args.input
    extra = {}
    if m == "phi":
        p = parse_perm(text)
        image = phi(p)
        src, dst = _perm_stats(p), _word_stats(image)
        shown = image
    elif m == "phi-inv":
        w = check_word(text.strip())
        image = phi_inv(w)
        src, dst = _word_stats(w), _perm_stats(image)
        shown = format_perm(image)
    elif m == "xi":
        w = check_word(text.strip())
        shown = xi(w)
        src, dst = _word_stats(w), {"length": len(shown), "double_steps": double_step_count(shown)}
    elif m == "xi-inv":
        b = check_word(text.strip())
        shown = xi_inv(b)
        src, dst = {"length": len(b), "double_steps": double_step_count(b)}, _word_stats(shown)
    elif m == "psi":
        p = parse_perm(text)
        image = psi(p)
        src, dst = _perm_stats(p), _perm_stats(image)
        shown = format_perm(image)
    elif m == "stack":
        p = parse_perm(text)
        shown = stack_sort_word(p)
        src = _perm_stats(p)
        dst = {"length": len(shown), "primitive_factors": primitive_factor_count(shown)}
    else:  # rtl-lemma
        p = parse_perm(text)
        img = rtl_lemma_map(p, inverse=args.inverse)
        src, dst = _perm_stats(p), _perm_stats(img.perm)
        shown = format_perm(img.perm)
        extra = {"case": img.case, "inverse": args.inverse}
    if args.format == "plain":
        return shown, EXIT_OK
    if args.format == "csv":
        return _csv(["map", "input", "output"], [[m, text.strip(), shown]]), EXIT_OK
    return _dump_json(dict(extra, map=m, input=text.strip(), output=shown,
                           input_stats=src, output_stats=dst)), EXIT_OK


# series ------------------------------------------------------------------------------


def _coeff_out(c):
    if isinstance(c, Poly):
        return list(c.c) if c.c else [0]
    return c


def cmd_series(args):
    order = _order(args)
    name = args.gf
    params = {}
    if name in CF_NAMES:
        weights = args.weights or "x"
        s = cf_catalog(name, weights, order)
        params["weights"] = weights
        if all(c.is_constant() for c in s.c):
            s = s.at_y(1)
    elif name == "rtl":
        s = rtl_gf(order)
    else:
        params = {k: v for k, v in (("k", args.k), ("d", args.d), ("variant", args.variant))
                  if v is not None}
        s = gf_catalog(name, order, **params)
    coeffs = [_coeff_out(s[i]) for i in range(order + 1)]
    if args.format == "plain":
        flat = [c if not isinstance(c, list) else "[" + " ".join(map(str, c)) + "]" for c in coeffs]
        return ",".join(map(str, flat)), EXIT_OK
    if args.format == "csv":
        rows = []
        for i, c in enumerate(coeffs):
            if isinstance(c, list):
                rows += [[i, j, v] for j, v in enumerate(c)]
            else:
                rows.append([i, c])
        header = ["n", "j", "coefficient"] if coeffs and isinstance(coeffs[0], list) else ["n", "coefficient"]
        return _csv(header, rows), EXIT_OK
    return _dump_json({"name": name, "params": params, "order": order,
                       "coefficients": coeffs}), EXIT_OK


# verify --------------------------------------------------------------------------------


def cmd_verify(args):
    params = {k: v for k, v in (("k", args.k), ("d", args.d)) if v is not None}
    lim = _limits(args)
    rep = verify(args.target, args.n_max, params, lim[oracle.INVOLUTIONS], lim[oracle.PERMUTATIONS])
    code = EXIT_OK if rep["verdict"] == MATCH else EXIT_MISMATCH
    if args.format == "json":
        return _dump_json(rep), code
    if rep["target"] == "all":
        header = ["target", "n_max", "rows", "gating", "verdict"]
        body = [[r[h] for h in header] for r in rep["rows"]]
    else:
        extra = sorted({k for r in rep["rows"] for k in r} - {"n", "expected", "observed", "match"})
        header = extra + ["n", "expected", "observed", "match"]
        body = [[_cell(r.get(h, "")) for h in header] for r in rep["rows"]]
    if args.format == "csv":
        return _csv(header, body), code
    lines = ["\t".join(header)] + ["\t".join(map(str, row)) for row in body]
    lines.append(f"verdict: {rep['verdict']}")
    return "\n".join(lines), code


def _cell(v):
    if isinstance(v, list):
        return " ".join(map(str, v))
    return v


# closed formulas and tables ----------------------------------------------------------------


def cmd_closed(args):
    params = {}
    for item in args.param or ():
        key, sep, val = item.partition("=")
        if not sep:
            raise FlagError(f"--param expects NAME=VALUE, got {item!r}")
        try:
            params[key] = val if key == "variant" else int(val)
        except ValueError:
            raise FlagError(f"bad value in {item!r}")
    value = closed_count(args.name, args.n, **params)
    if args.format == "plain":
        return str(value), EXIT_OK
    if args.format == "csv":
        return _csv(["name", "n", "value"], [[args.name, args.n, value]]), EXIT_OK
    return _dump_json({"name": args.name, "n": args.n, "params": params, "value": value}), EXIT_OK


SYSTEMS = {"fixed-points": FIXED_POINTS, "inversions": INVERSIONS, "rises": RISES}


def cmd_table(args):
    if args.n < 0:
        raise FlagError("--n must be nonnegative")
    if args.n > MAX_TABLE_N:
        raise LimitExceeded(f"tables are limited to n <= {MAX_TABLE_N}")
    if args.kind == "inversions":
        return table_to_csv(dp_inversions(args.n), ["n", "p", "i"]).rstrip("\n"), EXIT_OK
    if args.kind == "rises":
        return table_to_csv(dp_rises(args.n), ["n", "p", "r", "b"]).rstrip("\n"), EXIT_OK
    system = bounded_system(args.k) if args.kind == "bounded" else SYSTEMS[args.kind]
    counts = level_counts(system, args.n)
    rows = [list(label) + [c] for label, c in sorted(counts.items())]
    width = len(system.root)
    return _csv([f"label{i}" for i in range(width)] + ["count"], rows), EXIT_OK


# parser ---------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_FLAGS)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    common.add_argument("--max-involutions", type=int, default=oracle.DEFAULT_LIMITS[oracle.INVOLUTIONS],
                        help="largest involution length the oracle will enumerate")
    common.add_argument("--max-permutations", type=int, default=oracle.DEFAULT_LIMITS[oracle.PERMUTATIONS])

    p = _Parser(prog="involab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", parents=[common], help="list objects or tally statistics")
    e.add_argument("--class", dest="cls", choices=(oracle.INVOLUTIONS, oracle.PERMUTATIONS),
                   default=oracle.INVOLUTIONS)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--avoid", action="append", help="pattern such as 1-3-2 (repeatable, comma list)")
    e.add_argument("--contain", action="append", metavar="PATTERN=COUNT")
    e.add_argument("--stats", action="append",
                   help="statistic names (comma list): " + ", ".join(oracle.STATISTICS) + ", occ:<pattern>")
    e.set_defaults(func=cmd_enumerate)

    b = sub.add_parser("biject", parents=[common], help="apply one of the bijections")
    b.add_argument("--map", required=True,
                   choices=("phi", "phi-inv", "xi", "xi-inv", "psi", "stack", "rtl-lemma"))
    b.add_argument("--input", required=True)
    b.add_argument("--inverse", action="store_true", help="rtl-lemma only: undo the map")
    b.set_defaults(func=cmd_biject)

    s = sub.add_parser("series", parents=[common], help="expand a generating function")
    s.add_argument("--gf", required=True,
                   help="catalog name, C_S, C_I, D_S, D_I or rtl; catalog: " + ", ".join(catalog_names()))
    s.add_argument("--k", type=int)
    s.add_argument("--d", type=int)
    s.add_argument("--variant")
    s.add_argument("--weights", help="continued fractions: x_1,x_2,... as monomials, e.g. x,y")
    s.add_argument("--order", type=int, help=f"truncation order (default $INVOLAB_ORDER or {DEFAULT_ORDER})")
    s.set_defaults(func=cmd_series)

    v = sub.add_parser("verify", parents=[common], help="compare formulas with the oracle")
    v.add_argument("--target", required=True, help="all, " + ", ".join(sorted(TARGETS)))
    v.add_argument("--n-max", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--d", type=int)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("closed", parents=[common], help="evaluate a closed counting formula")
    c.add_argument("--name", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--param", action="append", metavar="NAME=VALUE")
    c.set_defaults(func=cmd_closed)

    t = sub.add_parser("table", parents=[common], help="dp tables and succession levels as CSV")
    t.add_argument("--kind", required=True, choices=("inversions", "rises", "fixed-points", "bounded"))
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--k", type=int, default=3)
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except FlagError as exc:
        print(f"involab: error: {exc}", file=sys.stderr)
        return EXIT_FLAGS
    except LimitExceeded as exc:
        print(f"involab: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except UnknownName as exc:
        print(f"involab: unknown name: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except DomainError as exc:
        print(f"involab: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
