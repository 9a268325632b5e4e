"""The nine acceptance criteria, one test each.

Every test prints a single ``PASS criterion N: ...`` or ``FAIL criterion N: ...``
line (visible without ``-s``) before asserting.
"""
import time
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer3.catalog import catalog_group, names
from kummer3.cohomology import assemble, quotient_poincare
from kummer3.golden import CURVE_ROWS, DUAL_PAIRS, GROUPS, SELF_DUAL, P_Y_A4, P_Y_D4, P_Y_D6
from kummer3.intlinalg import IDENTITY, det, smith_normal_form
from kummer3.matgroup import IsoType
from kummer3.polys import IntPoly
from kummer3.report import catalog_report, compare_group, verify_tables
from kummer3.strata import analyze
from kummer3.torus import component_count

from oracles import brute_force_component_count, exterior_power_poincare


@pytest.fixture
def verdict(capsys):
    def emit(n, text, ok):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {text}")
        assert ok, text
    return emit


@lru_cache(maxsize=None)
def computed(name):
    s = analyze(catalog_group(name))
    return s, assemble(s)


def P(text):
    return IntPoly.parse(text)


def test_criterion_1_poincare_table(verdict):
    start = time.perf_counter()
    result = verify_tables()
    elapsed = time.perf_counter() - start
    px = {n: computed(n)[1].P_X for n in names()}
    ok = (
        result.p_x_matches() == 16
        and all(px[n] == GROUPS[n].poly("P_X") for n in names())
        and px["D4(1)"] == P("t^6 + 51t^4 + 8t^3 + 51t^2 + 1")
        and px["S4(2)"] == px["S4(3)"] == P("t^6 + 11t^4 + 8t^3 + 11t^2 + 1")
        and elapsed < 5.0
    )
    verdict(1, f"P_X {result.p_x_matches()}/16 exact, verify took {elapsed:.2f}s (limit 5s)", ok)


def test_criterion_2_quotient_family(verdict):
    family = {IsoType.D4: P_Y_D4, IsoType.D6: P_Y_D6, IsoType.D8: P_Y_D6, IsoType.D12: P_Y_D6,
              IsoType.A4: P_Y_A4, IsoType.S4: P_Y_A4}
    bad = []
    for n in names():
        g = catalog_group(n)
        p = quotient_poincare(g)
        if p != P(family[g.iso]) or p.to_list() != exterior_power_poincare(g.elements):
            bad.append(n)
    verdict(2, f"P_Y matches family value and exterior-power oracle for {16 - len(bad)}/16", not bad)


def test_criterion_3_strata_polynomials(verdict):
    bad = []
    for n in ["S4(2)", "S4(3)", "D12", "D6(1)"]:
        p = computed(n)[1]
        for key in ("P1", "P2", "P3"):
            if getattr(p, key) != GROUPS[n].poly(key):
                bad.append(f"{n} {key}")
    s42 = computed("S4(2)")[1]
    ok = not bad and s42.P1 == P("52t^2 + 16") and s42.P2 == P("10t^4 + 4t^3 - 33t^2 - 33")
    verdict(3, "P1, P2, P3 exact for S4(2), S4(3), D12, D6(1)" + (f"; mismatches {bad}" if bad else ""), ok)


def test_criterion_4_curve_tables(verdict):
    rows = sum(len(CURVE_ROWS[n]) for n in names())
    diffs = []
    for n in names():
        s, p = computed(n)
        diffs += [d for d in compare_group(n, s, p)[1] if d.cell.startswith("curve")]
    (z3,) = [r for r in computed("D6(1)")[0].curves if r.iso is IsoType.Z3]
    example = z3.components == 9 and sorted(z3.quotient_multiset()) == [(1, "P1", "Z2"), (4, "A", "Z1")]
    verdict(4, f"{rows} curve rows, {len(diffs)} mismatching cells", not diffs and example)


def test_criterion_5_point_census(verdict):
    def census(n):
        return {k.value: v for k, v in computed(n)[0].census.items()}

    bad = [n for n in names() if census(n) != GROUPS[n].census]
    ok = (
        not bad
        and census("S4(2)") == {"D4": 6, "A4": 6, "S4": 4}
        and len(computed("D4(1)")[0].points) == 64
        and census("D12") == {"D4": 12, "D6": 16, "D12": 4}
    )
    verdict(5, f"0-stratum census exact for {16 - len(bad)}/16", ok)


def test_criterion_6_fingerprints(verdict):
    digests = {computed(n)[0].fingerprint.digest() for n in names()}
    c3 = computed("D4(3)")[0].fingerprint.incidence_components
    c4 = computed("D4(4)")[0].fingerprint.incidence_components
    verdict(6, f"{len(digests)} distinct fingerprints; incidence components D4(3)={c3}, D4(4)={c4}",
            len(digests) == 16 and (c3, c4) == (1, 4))


def test_criterion_7_duality(verdict, duality):
    by = {e.name: e for e in duality}
    self_dual = sorted(n for n, e in by.items() if e.status == "self-dual")
    pairs_ok = all(by[a].dual == b and by[b].dual == a for a, b in DUAL_PAIRS)
    witnesses_ok = all(
        e.witness is not None and max(abs(x) for r in e.witness for x in r) <= 3 and abs(det(e.witness)) == 1
        for e in duality)
    equal_px = all(computed(a)[1].P_X == computed(b)[1].P_X for a, b in DUAL_PAIRS)
    ok = self_dual == sorted(SELF_DUAL) and pairs_ok and witnesses_ok and equal_px
    verdict(7, f"{len(self_dual)} self-dual, {len(DUAL_PAIRS)} pairs certified at bound 3, equal P_X: {equal_px}", ok)


def test_criterion_8_oracles(verdict):
    checked = 0
    bad = []
    for n in names():
        for h in catalog_group(n).elements:
            if h == IDENTITY:
                continue
            for level in (12, 24):
                checked += 1
                if component_count(h) != brute_force_component_count(h, level):
                    bad.append((n, h, level))

    seen = []

    @settings(max_examples=200, deadline=None, database=None)
    @given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3))
    def snf_holds(m):
        seen.append(1)
        res = smith_normal_form(m)
        u, v = res.U, res.V
        um = [[sum(u[i][k] * m[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        umv = [[sum(um[i][k] * v[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        assert umv == [list(r) for r in res.D]
        d = res.diagonal
        assert all((b == 0) or (a != 0 and b % a == 0) for a, b in zip(d, d[1:]))

    try:
        snf_holds()
        snf_ok = True
    except AssertionError:
        snf_ok = False
    verdict(8, f"{checked - len(bad)}/{checked} component counts agree at levels 12 and 24; "
               f"SNF identity on {len(seen)} random matrices: {snf_ok}", not bad and snf_ok and len(seen) >= 200)


def test_criterion_9_structure(verdict):
    bad = []
    for n in names():
        p = computed(n)[1]
        b = p.P_X
        if not (p.P_X == p.P1 + p.P2 + p.P3 and b.is_palindromic(6) and b[1] == b[5] == 0
                and b[0] == b[6] == 1 and b[3] % 2 == 0):
            bad.append(n)
        if catalog_report(n, 24).to_dict() != catalog_report(n).to_dict():
            bad.append(f"{n} level 24")
    verdict(9, f"structure and level doubling hold for {16 - len(bad)}/16" + (f"; {bad}" if bad else ""), not bad)
