"""Command-line harness: tables, verification suites, RSK and straightening runs.

Exit codes: 0 all checks pass, 1 an identity or property failed,
2 usage errors, malformed input or resource guards.  Reports go to stdout;
timings and warnings go to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from collections import Counter
from fractions import Fraction as F

from .suites import SUITES, Envelope, _jsonable, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
TABLE_SYMMETRIES = ("U", "O", "S", "UU", "u")
TABLE_GUARD = {"U": 8, "O": 6, "S": 6, "UU": 6, "u": 5}


class UsageFailure(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2) + "\n"


def _warn(msg: str) -> None:
    print(f"incseq: warning: {msg}", file=sys.stderr)


# ---------------------------------------------------------------------------
# table


def cmd_table(args) -> int:
    from .combinat import f_count
    from .integrals import count_from_series
    syms = TABLE_SYMMETRIES if args.sym in (None, "all") else (args.sym,)
    for s in syms:
        if s not in TABLE_SYMMETRIES:
            raise UsageFailure(f"unknown symmetry {s!r}; choose from {', '.join(TABLE_SYMMETRIES)}")
    N = 4 if args.n is None else args.n
    L = 4 if args.l is None else args.l
    if N < 0 or L < 0:
        raise UsageFailure("--n and --l must be nonnegative")
    rows = []
    for s in syms:
        if N > TABLE_GUARD[s]:
            raise UsageFailure(f"--n {N} exceeds the brute-force guard {TABLE_GUARD[s]} for {s}")
        ns = range(1, N + 1) if N else (0,)
        ls = range(1, L + 1) if N else (L,)
        for n in ns:
            for l in ls:
                a, b = f_count(s, n, l), count_from_series(s, l, n)
                rows.append({"symmetry": s, "n": n, "l": l, "f_bruteforce": a,
                             "f_series": b, "match": a == b})
    cols = ["symmetry", "n", "l", "f_bruteforce", "f_series", "match"]
    if args.format == "json":
        sys.stdout.write(_dump(rows))
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({**r, "match": str(r["match"]).lower()})
        sys.stdout.write(buf.getvalue())
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_FAIL


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    for name in ("l", "vars", "deg", "n", "cases"):
        v = getattr(args, name)
        if v is not None and v < 0:
            raise UsageFailure(f"--{name} must be nonnegative")
    if args.jobs < 1:
        raise UsageFailure("--jobs must be at least 1")
    env = Envelope(l=args.l, vars=args.vars, deg=args.deg, n=args.n, cases=args.cases,
                   seed=args.seed, jobs=args.jobs)
    t = time.perf_counter()
    rep = run_suite(args.suite, env)
    for w in rep["warnings"]:
        _warn(w)
    print(f"incseq: {args.suite}: {rep['status']} ({rep['cases_run']} cases, "
          f"{time.perf_counter() - t:.2f}s)", file=sys.stderr)
    sys.stdout.write(_dump(rep))
    return EXIT_OK if rep["status"] == "pass" else EXIT_FAIL


# ---------------------------------------------------------------------------
# rsk


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as e:
        raise UsageFailure(f"cannot read {path}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageFailure(f"{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None


def parse_multiset_input(data) -> tuple[Counter, frozenset, frozenset]:
    from .rsk import multiset
    if not isinstance(data, dict):
        raise UsageFailure("input: top level must be an object with 'entries', 'W1', 'W2'")
    entries = data.get("entries")
    if not isinstance(entries, list):
        raise UsageFailure("input.entries: expected a list of [i, j, mult] triples")
    for k, e in enumerate(entries):
        if (not isinstance(e, list) or len(e) not in (2, 3)
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise UsageFailure(f"input.entries[{k}]: expected [i, j] or [i, j, mult] of integers")
        if len(e) == 3 and e[2] < 0:
            raise UsageFailure(f"input.entries[{k}]: negative multiplicity")
    sets = []
    for key in ("W1", "W2"):
        v = data.get(key, [])
        if not isinstance(v, list) or not all(isinstance(x, int) for x in v):
            raise UsageFailure(f"input.{key}: expected a list of integers")
        sets.append(frozenset(v))
    return multiset(tuple(e) for e in entries), sets[0], sets[1]


GREENE_GUARD = 20000


def rsk_report(M: Counter, W1, W2) -> dict:
    from math import prod
    from .combinat import conjugate
    from .rsk import (greene_numbers, is_compatible, knuth_correspondence, knuth_inverse,
                      lis_general, shape)
    if not is_compatible(M, W1, W2):
        raise ValueError("multiset is not (W1, W2)-compatible")
    P, Q = knuth_correspondence(M, W1, W2)
    lam = shape(P)
    conj = conjugate(lam)
    rows = [sum(lam[:k]) for k in range(1, len(lam) + 1)]
    cols = [sum(conj[:k]) for k in range(1, len(conj) + 1)]
    rep = {"P": [list(r) for r in P], "Q": [list(r) for r in Q], "shape": list(lam),
           "lis": lis_general(M, W1, W2),
           "greene": {"rows": rows, "columns": cols},
           "round_trip": knuth_inverse(P, Q, W1, W2) == M}
    if prod(m + 1 for m in M.values()) <= GREENE_GUARD:
        ok = True
        for k in range(1, max(len(lam), len(conj)) + 1):
            inc, dec = greene_numbers(M, W1, W2, k)
            ok &= inc == sum(lam[:k]) and dec == sum(conj[:k])
        rep["greene_verified"] = ok
    else:
        rep["greene_verified"] = None
    return rep


def cmd_rsk(args) -> int:
    M, W1, W2 = parse_multiset_input(_read_json(args.input))
    try:
        rep = rsk_report(M, W1, W2)
    except ValueError as e:
        raise UsageFailure(f"input: {e}") from None
    sys.stdout.write(_dump(rep))
    good = rep["round_trip"] and rep["greene_verified"] is not False and rep["lis"] == (
        rep["shape"][0] if rep["shape"] else 0)
    return EXIT_OK if good else EXIT_FAIL


# ---------------------------------------------------------------------------
# opuc


def cmd_opuc(args) -> int:
    from .opuc import bessel_opuc, opuc_identities
    L = 3 if args.l is None else args.l
    order = 8 if args.deg is None else args.deg
    if L < 0 or order < 0:
        raise UsageFailure("--l and --deg must be nonnegative")
    data = bessel_opuc(L, order)
    ser = lambda s: [str(s[k]) for k in range(order + 1)]
    rep = {"weight": "exp(t(z+1/z))", "order": order, "l": L,
           "reflection": {str(j): ser(data.refl(j)) for j in range(1, L + 1)},
           "norms": {str(j): ser(data.N[j]) for j in range(L + 1)},
           "checks": opuc_identities(data, L)}
    sys.stdout.write(_dump(rep))
    return EXIT_OK if all(rep["checks"].values()) else EXIT_FAIL


# ---------------------------------------------------------------------------
# straighten


def parse_perm(text: str) -> tuple:
    t = text.strip()
    try:
        p = tuple(int(x) for x in (t.split(",") if "," in t else t))
    except ValueError:
        raise UsageFailure(f"--perm: cannot parse {text!r}; use e.g. 321 or 3,2,1") from None
    if sorted(p) != list(range(1, len(p) + 1)):
        raise UsageFailure(f"--perm: {text!r} is not a permutation of 1..{len(p)}")
    return p


def cmd_straighten(args) -> int:
    from .invariants import (DomainError, ResourceError, T_matrix, _combine, invariant_vector,
                             orth_reduce, straighten_U, symp_reduce)
    from .combinat import lds, lis
    if args.perm is None:
        raise UsageFailure("--perm is required")
    p = parse_perm(args.perm)
    l = 2 if args.l is None else args.l
    if l < 0:
        raise UsageFailure("--l must be nonnegative")
    if args.n is not None and args.n != len(p):
        raise UsageFailure(f"--n {args.n} does not match the permutation length {len(p)}")
    kind = args.kind
    try:
        if kind == "U":
            out = straighten_U({p: F(1)}, l)
            cert = {"reduced": all(lds(q) <= l for q in out)}
            cert["operator_equal"] = (T_matrix({p: F(1)}, l) == T_matrix(out, l, len(p))) if l else None
        else:
            if any(p[p[i] - 1] != i + 1 or p[i] == i + 1 for i in range(len(p))):
                raise UsageFailure("--perm must be a fixed-point-free involution for O and Sp")
            if kind == "O":
                out = orth_reduce({p: F(1)}, l)
                cert = {"reduced": all(lis(q) <= l for q in out)}
            else:
                out = symp_reduce({p: F(1)}, l)
                cert = {"reduced": all(lds(q) <= 2 * l for q in out)}
            cert["tensor_equal"] = (_combine(out, l, kind) == invariant_vector(p, l, kind)) if l else None
    except ResourceError as e:
        raise UsageFailure(str(e)) from None
    except DomainError as e:
        raise UsageFailure(str(e)) from None
    terms = [{"perm": "".join(map(str, q)) if len(q) < 10 else ",".join(map(str, q)),
              "coeff": str(c)} for q, c in sorted(out.items())]
    rep = {"input": args.perm, "kind": kind, "l": l, "terms": len(terms),
           "result": terms, "certificates": cert}
    sys.stdout.write(_dump(rep))
    return EXIT_OK if all(v is not False for v in cert.values()) else EXIT_FAIL


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized cases")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--cases", type=int, help="number of random cases")
    common.add_argument("--l", type=int, help="bound on the longest subsequence / group size")
    common.add_argument("--vars", type=int, help="number of variables")
    common.add_argument("--deg", type=int, help="truncation degree or t-order")
    common.add_argument("--sym", help="symmetry type: U, O, S, UU, u or all")
    common.add_argument("--n", type=int, help="size parameter")

    p = _Parser(prog="incseq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    t = sub.add_parser("table", parents=[common], help="f counts by brute force and by series")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", required=True, choices=SUITES)
    r = sub.add_parser("rsk", parents=[common], help="generalized Knuth correspondence on a JSON multiset")
    r.add_argument("--input", default="-", help="JSON file ({entries, W1, W2}); '-' for stdin")
    sub.add_parser("opuc", parents=[common], help="OPUC data for the Bessel weight")
    s = sub.add_parser("straighten", parents=[common], help="straighten a permutation or involution")
    s.add_argument("--perm", help="one-line notation, e.g. 321 or 3,2,1")
    s.add_argument("--kind", choices=("U", "O", "Sp"), default="U")
    return p


COMMANDS = {"table": cmd_table, "verify": cmd_verify, "rsk": cmd_rsk, "opuc": cmd_opuc,
            "straighten": cmd_straighten}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageFailure as e:
        print(f"incseq: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (MemoryError, RecursionError) as e:
        print(f"incseq: resource limit: {type(e).__name__}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
