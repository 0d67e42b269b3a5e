"""Verification suites behind ``incseq verify`` and the acceptance tests.

Each suite takes an :class:`Envelope` and returns a report dict with the
envelope, one record per case (sorted by case key), the overall status
and the first counterexample.  Reports contain no timings, so the same
envelope and seed always give the same report.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction as F
from typing import Callable

SUITES = ("schur", "opuc", "rsk", "straighten", "pfaffian", "integrals", "szego", "diagonal")


@dataclass(frozen=True)
class Envelope:
    """Parameter envelope; None means the suite default."""
    l: int | None = None
    vars: int | None = None
    deg: int | None = None
    n: int | None = None
    cases: int | None = None
    seed: int = 0
    jobs: int = 1

    def get(self, name: str, default: int) -> int:
        v = getattr(self, name)
        return default if v is None else v


def _run(tasks: list[tuple[str, Callable, tuple]], jobs: int) -> list[dict]:
    """Run (key, fn, args) tasks; fn returns a dict with an 'ok' entry."""
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as ex:
            futs = [ex.submit(fn, *args) for _, fn, args in tasks]
            results = [f.result() for f in futs]
    else:
        results = [fn(*args) for _, fn, args in tasks]
    out = []
    for (key, _, _), res in zip(tasks, results):
        rec = {"case": key}
        rec.update(res)
        out.append(rec)
    return sorted(out, key=lambda r: r["case"])


def _report(suite: str, envelope: dict, cases: list[dict], warnings=()) -> dict:
    bad = [c for c in cases if not c["ok"]]
    rep = {"suite": suite, "envelope": envelope, "status": "pass" if not bad else "fail",
           "cases_run": len(cases), "cases_failed": len(bad), "cases": cases,
           "warnings": list(warnings)}
    if bad:
        rep["counterexample"] = bad[0]
    return rep


def _vacuous(suite: str, envelope: dict, why: str) -> dict:
    return _report(suite, envelope, [], [f"empty envelope ({why}): vacuous pass"])


def _jsonable(x):
    if isinstance(x, F):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (frozenset, set)):
        return sorted(_jsonable(v) for v in x)
    return x


def _gate(rep: dict, skip_suffix: str = ":printed") -> dict:
    """{name: bool} -> case payload; keys ending in skip_suffix are reported only."""
    gated = {k: v for k, v in rep.items() if not k.endswith(skip_suffix)}
    info = {k: v for k, v in rep.items() if k.endswith(skip_suffix)}
    failed = sorted(k for k, v in gated.items() if not v)
    out = {"ok": not failed, "checks": len(gated)}
    if failed:
        out["failed"] = failed
    if info:
        out["reported_only"] = info
    return out


# ---------------------------------------------------------------------------
# schur


def _schur_case(tag, l, k, D, cap):
    from .symfunc import verify_identity
    r = verify_identity(tag, l, k, D, cap)
    out = {"ok": r["status"] == "pass", "checks": len(r["checks"])}
    if "counterexample" in r:
        out["counterexample"] = _jsonable(r["counterexample"])
    return out


def schur_suite(env: Envelope) -> dict:
    from .symfunc import TAGS
    L, k, D = env.get("l", 3), env.get("vars", 4), env.get("deg", 8)
    cap = min(3, D)
    envd = {"l": L, "vars": k, "deg": D, "alpha_beta_cap": cap}
    if D == 0:
        return _vacuous("schur", envd, "degree 0")
    tasks = [(f"{tag}/l={l}", _schur_case, (tag, l, k, D, cap))
             for tag in TAGS for l in range(L + 1)]
    return _report("schur", envd, _run(tasks, env.jobs))


# ---------------------------------------------------------------------------
# opuc


def _opuc_case(name, L, order):
    from . import opuc
    from .integrals import exp_tz
    g = exp_tz(order)
    if name == "identities":
        rep = opuc.opuc_identities(opuc.bessel_opuc(2 * L + 2, order))
    elif name == "products":
        rep = opuc.verify_products(g, L)
    elif name == "tails":
        J = max(L + 1, order // 2)
        rep = {f"l={l}/{k}": v for l in range(L + 1)
               for k, v in opuc.tail_products(l, J, order).items()}
    elif name == "halfline":
        rep = opuc.halfline_relations_check(opuc.moments_of(g), L)
    elif name == "alpha":
        rep = opuc.alpha_formula_check(L, order)
    elif name == "unitary_alpha_beta":
        rep = {f"l={l}/{k}": v for l in range(L + 1)
               for k, v in opuc.unitary_alpha_beta_check(l, order).items()}
    elif name == "P_alpha":
        from .integrals import P_alpha_integral, P_alpha_opuc
        small = min(order, 8)
        rep = {}
        for sym, ls in (("O", range(L + 1)), ("S", range(1, L + 1, 2)), ("u", range(1, L + 1, 2))):
            for l in ls:
                rep[f"{sym}/l={l}"] = P_alpha_integral(sym, l, small) == P_alpha_opuc(sym, l, small)
    else:
        raise ValueError(name)
    return _gate(rep)


def opuc_suite(env: Envelope) -> dict:
    L, order = env.get("l", 5), env.get("deg", 16)
    envd = {"l": L, "order": order, "weight": "exp(t(z+1/z))"}
    if order == 0:
        return _vacuous("opuc", envd, "t-order 0")
    names = ("identities", "products", "tails", "halfline", "alpha", "unitary_alpha_beta", "P_alpha")
    tasks = [(name, _opuc_case, (name, L, order)) for name in names]
    return _report("opuc", envd, _run(tasks, env.jobs))


# ---------------------------------------------------------------------------
# rsk


def _rsk_exhaustive(n, total):
    from .rsk import exhaustive_suite
    r = exhaustive_suite(n, total)
    out = {"ok": r["ok"], "multisets": r["cases"], "sectors": r["sectors"]}
    if not r["ok"]:
        out["failures"] = r["failures"]
        out["first"] = _jsonable(r["first"])
    return out


def _rsk_model(tag, nvars, L, D):
    from .rsk import distribution_check, model_family
    bad = []
    count = 0
    for v in range(1, nvars + 1):
        for spec in model_family(tag, v):
            for l in range(L + 1):
                count += 1
                r = distribution_check(spec, l, D)
                if not r["ok"] and len(bad) < 3:
                    bad.append(_jsonable({k: r[k] for k in r if k != "ok"}))
    out = {"ok": not bad, "comparisons": count}
    if bad:
        out["failures"] = bad
    return out


def _rsk_corollary(pair, D):
    from .rsk import corollary_equidistribution_check
    shapes = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]
    bad = [s for s in shapes if not corollary_equidistribution_check(pair, *s, D=D)["ok"]]
    return {"ok": not bad, "alphabets": len(shapes), **({"failed": bad} if bad else {})}


def rsk_suite(env: Envelope) -> dict:
    from .rsk import PAIRS
    nv, total, L, D = env.get("vars", 3), env.get("n", 5), env.get("l", 2), env.get("deg", 6)
    Dc = min(D, 5)
    envd = {"grid": nv, "total": total, "l": L, "deg": D, "corollary_deg": Dc}
    if D == 0:
        return _vacuous("rsk", envd, "degree 0")
    tasks = [("exhaustive", _rsk_exhaustive, (nv, total))]
    tasks += [(f"model/{tag}", _rsk_model, (tag, nv, L, D)) for tag in ("U", "UU", "O", "S", "u")]
    tasks += [(f"corollary/{p}", _rsk_corollary, (p, Dc)) for p in PAIRS]
    return _report("rsk", envd, _run(tasks, env.jobs))


# ---------------------------------------------------------------------------
# straighten


def _basis_case(n, l):
    from .invariants import basis_U_certificate
    r = basis_U_certificate(n, l)
    return {"ok": r["ok"] and r["triangular"], "size": r["size"], "rank": r["rank"], "f": r["f"]}


def _involution_case(n, l, kind):
    from .invariants import involution_certificate
    r = involution_certificate(n, l, kind)
    return {"ok": r["ok"], "size": r["size"], "rank": r["rank"], "span_dim": r["span_dim"]}


def _random_straighten(n, l, count, seed):
    from .invariants import straighten_certificate
    rng = random.Random(seed)
    ok = True
    for _ in range(count):
        e = {}
        for _ in range(rng.randint(1, 3)):
            p = tuple(rng.sample(range(1, n + 1), n))
            e[p] = e.get(p, 0) + F(rng.randint(-3, 3))
        e = {p: c for p, c in e.items() if c}
        if not e:
            continue
        r = straighten_certificate(e, l)
        ok &= r["reduced"] and r["equal_operator"]
    return {"ok": ok, "elements": count}


def _multiset_case(nu, nu2):
    from itertools import combinations
    from .invariants import multiset_basis_certificate
    subs = lambda k: [frozenset(c) for r in range(k + 1) for c in combinations(range(1, k + 1), r)]
    bad = []
    count = 0
    for W in subs(len(nu)):
        for W2 in subs(len(nu2)):
            for l in (1, 2):
                count += 1
                r = multiset_basis_certificate(nu, nu2, W, W2, l)
                if not r["ok"]:
                    bad.append(_jsonable(r))
    return {"ok": not bad, "certificates": count, **({"failures": bad[:3]} if bad else {})}


def straighten_suite(env: Envelope) -> dict:
    N, L = env.get("n", 5), env.get("l", 3)
    count = env.get("cases", 20)
    envd = {"n": N, "l": L, "involution_n": min(N, 3), "involution_l": min(L, 2),
            "random_elements": count, "seed": env.seed}
    tasks = [(f"basis_U/n={n}/l={l}", _basis_case, (n, l))
             for n in range(1, N + 1) for l in range(1, L + 1)]
    tasks += [(f"{kind}/n={n}/l={l}", _involution_case, (n, l, kind))
              for kind in ("O", "Sp") for n in range(1, min(N, 3) + 1) for l in range(1, min(L, 2) + 1)]
    if N >= 2 and L >= 1:
        tasks.append(("random_straighten", _random_straighten,
                      (min(N, 5), min(L, N - 1), count, env.seed)))
    for nu, nu2 in (((2, 1), (1, 2)), ((3,), (1, 1, 1)), ((2, 2), (2, 2))):
        if sum(nu) <= N:
            tasks.append((f"multiset/{nu}/{nu2}", _multiset_case, (nu, nu2)))
    return _report("straighten", envd, _run(tasks, env.jobs))


# ---------------------------------------------------------------------------
# pfaffian


def random_de_bruijn_instance(rng: random.Random, n_max: int = 4):
    n = rng.randint(1, n_max)
    pts = list(range(rng.randint(1, 4)))
    rho = {}
    for x in pts:
        rho[(x, x)] = 0
        for y in pts:
            if x < y:
                v = rng.randint(-3, 3)
                rho[(x, y)], rho[(y, x)] = v, -v
    phis = [{x: rng.randint(-3, 3) for x in pts} for _ in range(n)]
    return n, pts, rho, phis


def random_odd_table(rng: random.Random, l: int) -> dict:
    tab = {0: 0}
    for j in range(1, 2 * l + 3):
        v = F(rng.randint(-5, 5), rng.randint(1, 3))
        tab[j], tab[-j] = v, -v
    return tab


def _de_bruijn_batch(count, n_max, seed):
    from .exact import de_bruijn_sides
    rng = random.Random(seed)
    bad = []
    for i in range(count):
        n, pts, rho, phis = random_de_bruijn_instance(rng, n_max)
        lhs, rhs = de_bruijn_sides(n, pts, rho, phis)
        if lhs != rhs and len(bad) < 3:
            bad.append({"instance": i, "n": n, "lhs": str(lhs), "rhs": str(rhs)})
    return {"ok": not bad, "instances": count, **({"failures": bad} if bad else {})}


def _gordon_batch(L, count, seed):
    from .exact import gordon_identity_check
    rng = random.Random(seed)
    bad = [(l, i) for l in range(L + 1) for i in range(count)
           if not gordon_identity_check(random_odd_table(rng, l), l)]
    return {"ok": not bad, "tables": (L + 1) * count, **({"failed": bad[:5]} if bad else {})}


def _alpha_pfaffian(l, D):
    from .symfunc import identity_ring, pfaffian_route_O
    r = pfaffian_route_O(identity_ring(4, D, D), l)
    return {"ok": r["direct_ok"] and r["reduced_ok"], "printed_M0_form": r["printed_ok"]}


def pfaffian_suite(env: Envelope) -> dict:
    count = env.get("cases", 100)
    n_max = env.get("n", 4)
    L = env.get("l", 3)
    D = env.get("deg", 4)
    envd = {"de_bruijn_instances": count, "n": n_max, "gordon_l": L, "alpha_l": 2, "deg": D,
            "seed": env.seed}
    tasks = [("de_bruijn", _de_bruijn_batch, (count, n_max, env.seed)),
             ("gordon", _gordon_batch, (L, max(1, count // 20), env.seed + 1))]
    if D > 0:
        tasks.append(("alpha_pfaffian/l=2", _alpha_pfaffian, (2, D)))
    warn = [] if D > 0 else ["degree 0: alpha-pfaffian identity skipped (vacuous)"]
    return _report("pfaffian", envd, _run(tasks, env.jobs), warn)


# ---------------------------------------------------------------------------
# integrals (moment counts and rotation)


def _moment_case(sym, N, L):
    from .combinat import f_count
    from .integrals import count_from_series
    bad = [(n, l) for n in range(N + 1) for l in range(1, L + 1)
           if f_count(sym, n, l) != count_from_series(sym, l, n)]
    return {"ok": not bad, "pairs": (N + 1) * L, **({"failed": bad} if bad else {})}


def _rotation_case(N, L):
    from .combinat import f_count, rotation_lis_profile
    from .integrals import rotation_count
    bad = []
    for n in range(N + 1):
        prof = rotation_lis_profile(n)
        for l in range(L + 1):
            brute = f_count("rot", n, l)
            via_sn = sum(c for k, c in prof.items() if k <= l)
            if not (brute == via_sn == rotation_count(l, n)):
                bad.append(("count", n, l))
    for l in range(1, L + 1):
        for n in range(l * l + 1, l * l + 4):
            if rotation_count(l, n):
                bad.append(("vanishing", n, l))
    return {"ok": not bad, **({"failed": bad} if bad else {})}


def integrals_suite(env: Envelope) -> dict:
    N, L = env.get("n", 5), env.get("l", 4)
    Nr = min(N, 2)
    envd = {"n": N, "l": L, "rotation_n": Nr}
    tasks = [(f"moments/{s}", _moment_case, (s, N, L)) for s in ("U", "O", "S", "UU", "u")]
    tasks.append(("rotation", _rotation_case, (Nr, L)))
    return _report("integrals", envd, _run(tasks, env.jobs))


# ---------------------------------------------------------------------------
# szego


def _szego_group(group, L):
    from .integrals import formal_szego_check
    bad = [l for l in range(L + 1) for r in [formal_szego_check(group, l)]
           if not (r["agree"] and r["monotone"])]
    return {"ok": not bad, **({"failed_l": bad} if bad else {})}


def _szego_super(group, L):
    from .symfunc import szego_super_check
    bad = [l for l in range(L + 1) for r in [szego_super_check(group, l, k=2, m=1)]
           if not (r["agree"] and r["monotone"])]
    return {"ok": not bad, **({"failed_l": bad} if bad else {})}


def szego_suite(env: Envelope) -> dict:
    L = env.get("l", 6)
    Ls = min(L, 2)
    envd = {"l": L, "super_alphabet_l": Ls, "super_alphabet": "x1,x2 / y1"}
    tasks = [(f"trace/{g}", _szego_group, (g, L)) for g in ("U", "O", "Sp")]
    tasks += [(f"super/{g}", _szego_super, (g, Ls)) for g in ("U", "O", "Sp")]
    return _report("szego", envd, _run(tasks, env.jobs))


# ---------------------------------------------------------------------------
# diagonal


def _diagonal_case(sym, N, L):
    from .combinat import ftilde_count, tilde_table
    from .integrals import ftilde_from_series
    bad = []
    for n in range(N + 1):
        keys = sorted({m for m, _ in tilde_table(sym, n)})
        for l in range(1, L + 1):
            series = ftilde_from_series(sym, l, n)
            for m in keys:
                if series.get(m, 0) != ftilde_count(sym, n, m, l):
                    bad.append((n, l, m))
            if any(m not in keys and v for m, v in series.items()):
                bad.append((n, l, "extra"))
    return {"ok": not bad, **({"failed": bad[:5]} if bad else {})}


def diagonal_suite(env: Envelope) -> dict:
    N, L = env.get("n", 6), env.get("l", 4)
    envd = {"n": N, "l": L}
    tasks = [(f"ftilde/{s}", _diagonal_case, (s, N, L)) for s in ("O", "S", "u")]
    return _report("diagonal", envd, _run(tasks, env.jobs))


RUNNERS = {
    "schur": schur_suite, "opuc": opuc_suite, "rsk": rsk_suite, "straighten": straighten_suite,
    "pfaffian": pfaffian_suite, "integrals": integrals_suite, "szego": szego_suite,
    "diagonal": diagonal_suite,
}


def run_suite(name: str, env: Envelope) -> dict:
    return RUNNERS[name](env)
