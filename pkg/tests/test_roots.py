import random
from fractions import Fraction

import pytest

from conftest import interesting_seifert
from knotalg.alexander import alexander_poly
from knotalg.errors import NotSymmetric
from knotalg.laurent import LaurentPoly as LP
from knotalg.roots import count_roots, isolate_real_roots, refine, trace_polynomial, unit_circle_root_cuts
from oracles import trace_roots_numeric

P = LP.parse


def test_trace_polynomial_examples():
    assert trace_polynomial(P("t^2 - t + 1")) == P("t - 1")
    assert trace_polynomial(P("t^2 - 3*t + 1")) == P("t - 3")
    assert trace_polynomial(P("1")) == P("1")
    # t^-2 (t^4 - t^3 + t^2 - t + 1) = z^2 - z - 1
    assert trace_polynomial(P("t^4 - t^3 + t^2 - t + 1")) == P("t^2 - t - 1")


def test_not_symmetric():
    with pytest.raises(NotSymmetric):
        trace_polynomial(P("t^2 + 2*t + 3"))
    with pytest.raises(NotSymmetric):
        trace_polynomial(P("t + 1"))


def test_cut_examples():
    (r,) = unit_circle_root_cuts(P("t^2 - t + 1"))
    assert r.exact and r.lo == 1
    assert unit_circle_root_cuts(P("1")) == []
    assert unit_circle_root_cuts(P("t^2 - 3*t + 1")) == []


def test_cuts_match_numeric_roots():
    rng = random.Random(21)
    for _ in range(80):
        delta = alexander_poly(interesting_seifert(rng))
        p = trace_polynomial(delta)
        cuts = unit_circle_root_cuts(delta, width=Fraction(1, 10**6))
        numeric = trace_roots_numeric(p.dense())
        # collapse numerically repeated roots
        distinct = [x for i, x in enumerate(numeric) if i == 0 or abs(x - numeric[i - 1]) > 1e-6]
        assert len(cuts) == len(distinct)
        for r, x in zip(sorted(cuts, key=lambda r: r.lo), distinct):
            assert float(r.lo) - 1e-6 <= x <= float(r.hi) + 1e-6
            assert r.width < Fraction(1, 10**6)


def test_isolation_and_refinement():
    p = P("t^3 - 2*t")  # roots 0, +-sqrt 2
    roots = isolate_real_roots(p, -2, 2)
    assert len(roots) == 3
    assert count_roots(p, -2, 2) == 3
    exact = [r for r in roots if r.exact]
    assert [r.lo for r in exact] == [0]
    r = refine(p, max(roots, key=lambda r: r.lo), Fraction(1, 10**12))
    assert r.lo < Fraction(14142135623731, 10**13) < r.hi


def test_repeated_roots_collapse():
    p = P("t^2 - 1") * P("t^2 - 1") * P("t - 1/2")
    roots = isolate_real_roots(p, -2, 2)
    assert len(roots) == 3
