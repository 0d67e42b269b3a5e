"""Acceptance criteria, one test each, with wall-clock limits.

Every criterion records a line "criterion N: PASS|FAIL (...)"; the lines
are printed in the pytest terminal summary, and by running this file
directly with python3.
"""
import time

import pytest

from incseq.invariants import basis_U_certificate
from incseq.integrals import formal_szego_check
from incseq.suites import (
    Envelope, _moment_case, _rotation_case, diagonal_suite, opuc_suite, pfaffian_suite,
    rsk_suite, schur_suite, straighten_suite,
)
from incseq.combinat import f_count
from incseq.integrals import count_from_series

RESULTS: dict[int, str] = {}


def record(num, title, limit, fn):
    t = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t
    passed = ok and dt < limit
    why = "" if dt < limit else f", over the {limit}s limit"
    RESULTS[num] = (f"criterion {num}: {'PASS' if passed else 'FAIL'} "
                    f"({title}; {dt:.1f}s{why}{'; ' + detail if detail else ''})")
    print(RESULTS[num])
    return passed


def failed_cases(rep):
    bad = [c["case"] for c in rep["cases"] if not c["ok"]]
    return rep["status"] == "pass", ", ".join(bad[:5])


def crit1():
    bad = [s for s in ("U", "O", "S", "UU", "u") if not _moment_case(s, 5, 4)["ok"]]
    spot = f_count("U", 3, 2) == count_from_series("U", 2, 3) == 5
    return not bad and spot, ", ".join(bad)


def crit2():
    return failed_cases(diagonal_suite(Envelope(n=6, l=4)))


def crit3():
    rep = schur_suite(Envelope(l=3, vars=4, deg=8))
    assert rep["envelope"]["alpha_beta_cap"] == 3
    return failed_cases(rep)


def crit4():
    return failed_cases(opuc_suite(Envelope(l=5, deg=16)))


def crit5():
    rep = rsk_suite(Envelope(vars=3, n=5, l=2, deg=6))
    ex = next(c for c in rep["cases"] if c["case"] == "exhaustive")
    ok, detail = failed_cases(rep)
    return ok and ex["sectors"] == 64, detail


def crit6():
    ok, detail = failed_cases(straighten_suite(Envelope(n=5, l=3)))
    spot = basis_U_certificate(4, 2)
    return ok and spot["size"] == spot["rank"] == 14, detail


def crit7():
    return failed_cases(pfaffian_suite(Envelope(cases=100, n=4, l=3, deg=4)))


def crit8():
    bad = []
    for g in ("U", "O", "Sp"):
        for l in range(7):
            r = formal_szego_check(g, l)
            fd = r["first_difference"]
            if not (r["agree"] and r["monotone"] and (fd is None or fd > 2 * l)):
                bad.append(f"{g}/l={l}")
    return not bad, ", ".join(bad)


def crit9():
    r = _rotation_case(2, 4)
    return r["ok"], str(r.get("failed", ""))


CRITERIA = [
    (1, "moment-count identity, 5 symmetries, n<=5, l<=4", 120, crit1),
    (2, "diagonal points f-tilde, n<=6, l<=4", 120, crit2),
    (3, "Schur identity tags, l<=3, k=4, D<=8", 300, crit3),
    (4, "OPUC Bessel weight, order 16, l<=5", 120, crit4),
    (5, "RSK exhaustive, models and pairs", 600, crit5),
    (6, "straightening bases and ranks", 300, crit6),
    (7, "de Bruijn, Gordon, alpha pfaffian", 60, crit7),
    (8, "formal Szego through degree 2l, l<=6", 30, crit8),
    (9, "rotation ensemble, n<=2, l<=4", 60, crit9),
]


@pytest.mark.parametrize("num,title,limit,fn", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(num, title, limit, fn):
    assert record(num, title, limit, fn), RESULTS[num]


if __name__ == "__main__":
    import sys
    ok = all([record(*c) for c in CRITERIA])
    sys.exit(0 if ok else 1)
