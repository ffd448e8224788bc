"""Acceptance criteria 1-10.  Each test prints one PASS/FAIL line, then asserts.

Run alone with ``pytest tests/test_acceptance.py -v``; the summary lines go to
the terminal even when output is captured.
"""
import math
import time
from fractions import Fraction as Q

import numpy as np
import pytest

from hypergroups import haar_mass, haar_weight, support_product, verify_axioms
from hypergroups.amenability import (bai_certificate, check_f_implies_sf, folner_ratio,
                                     folner_to_reiter, haar_level_set, leptin_ratio,
                                     reiter_deficiency, strong_folner_ratio)
from hypergroups.catalog import (build_chebyshev, build_product, build_su2_dual, build_su3_dual,
                                 su3_dimension, su3_tensor_decompose)
from hypergroups.growth import (SU3_ALPHA, SU3_BETA, SU3_GENERATORS, SU3_LEPTIN_D, Balls,
                                d_leptin_estimate, su3_ball_closed_form, su3_bounds_check)

from _oracles import GROUPS, gt_dimension, su3_strip
from conftest import catalog, conjugacy

# pinned tolerances and ranges
C1_N = 50
C1_SECONDS = 120
C2_N = 100
C2_TAIL_FROM = 50
C2_TAIL_WITHIN = Q(110, 100)
C3_N_MAX = 300
C3_FROM = 120
C3_FOLNER = Q(5, 100)
C3_LEPTIN = Q(105, 100)
C4_SECONDS = 300
C6_ORACLE_MAX = 6
C6_DIM_MAX = 20
C7_PAIRS = 50
C8_INSTANCES = 200
C9_N = 100
C9_FROM = 50
C9_DEFICIENCY = 0.1
SEED = 20240611


@pytest.fixture
def announce(capsys):
    def say(n, ok, text):
        with capsys.disabled():
            print(f'\n[criterion {n:>2}] {"PASS" if ok else "FAIL"}  {text}')
    return say


def test_criterion_01_su3_growth_regression(announce):
    t0 = time.perf_counter()
    H = build_su3_dual()
    balls = Balls(H, SU3_GENERATORS)
    bad = [n for n in range(1, C1_N + 1) if balls.mass(n) != su3_ball_closed_form(n)]
    elapsed = time.perf_counter() - t0
    # anchors by shell summation with GT-pattern dimensions
    shells = [sum(gt_dimension(p, k - p) ** 2 for p in range(k + 1)) for k in range(3)]
    anchors = (balls.mass(1), balls.mass(2)) == (19, 155) == (sum(shells[:2]), sum(shells))
    ok = not bad and anchors and elapsed < C1_SECONDS
    announce(1, ok, f'h(F^n) == closed form for n=1..{C1_N} (mismatches {bad}); '
                    f'h(F^1)={balls.mass(1)}, h(F^2)={balls.mass(2)}; {elapsed:.1f}s')
    assert ok


def test_criterion_02_su3_bounds_and_leptin(announce):
    H = build_su3_dual()
    balls = Balls(H, SU3_GENERATORS)
    masses = [balls.mass(n) for n in range(C2_N + 1)]
    rep = su3_bounds_check(C2_N, masses=masses)
    eq_at_1 = masses[1] / 1 == SU3_BETA
    est = d_leptin_estimate(H, SU3_GENERATORS, SU3_GENERATORS, C2_N, D=SU3_LEPTIN_D, balls=balls)
    tail = [(l, r) for l, r in est.ratios if l >= C2_TAIL_FROM]
    tail_ok = all(abs(r - 1) <= C2_TAIL_WITHIN for _, r in tail)
    # and the ratios really do head towards 1: strictly decreasing from l = 1 on
    decreasing = all(a[1] > b[1] > 1 for a, b in zip(est.ratios[1:], est.ratios[2:]))
    ok = rep.ok and eq_at_1 and est.within_D and tail_ok and decreasing
    worst = max(tail, key=lambda t: t[1])
    first_below = next((l for l, r in est.ratios if l >= C2_TAIL_FROM and r <= C2_TAIL_WITHIN), None)
    announce(2, ok, f'{float(SU3_ALPHA):.6g} < h(F^n)/n^8 <= 19 for n=1..{C2_N} '
                    f'(min {float(rep.minimum[1]):.6g} at n={rep.minimum[0]}, 19 at n=1: {eq_at_1}); '
                    f'sup h(F*F^l)/h(F^l) = {est.sup} <= {SU3_LEPTIN_D}; '
                    f'tail |r-1| <= {float(C2_TAIL_WITHIN)} for l>={C2_TAIL_FROM} '
                    f'(max r {float(worst[1]):.4f} at l={worst[0]}, r <= 1.10 from l={first_below}); '
                    f'strictly decreasing to {float(est.last):.4f} at l={C2_N}: {decreasing}')
    assert ok


def test_criterion_03_su2_folner_leptin(announce):
    H = build_su2_dual()
    formula_bad, small_bad = [], []
    for n in range(1, C3_N_MAX + 1):
        V = range(n + 1)
        f = folner_ratio(H, 1, V).value
        if f != Q(6 * (n + 2), (n + 1) * (2 * n + 3)):
            formula_bad.append(n)
        if n >= C3_FROM:
            l = leptin_ratio(H, [1], V).value
            if not (f < C3_FOLNER and l < C3_LEPTIN):
                small_bad.append(n)
    # beyond the checked range: the closed form decreases in n
    decreasing = all(Q(6 * (n + 3), (n + 2) * (2 * n + 5)) < Q(6 * (n + 2), (n + 1) * (2 * n + 3))
                     for n in range(1, C3_N_MAX))
    at = folner_ratio(H, 1, range(C3_FROM + 1)).value
    ok = not formula_bad and not small_bad and decreasing
    announce(3, ok, f'folner(1, V_n) == 6(n+2)/((n+1)(2n+3)) for n=1..{C3_N_MAX}; '
                    f'n={C3_FROM}: folner {float(at):.5f} < 0.05, leptin '
                    f'{float(leptin_ratio(H, [1], range(C3_FROM + 1)).value):.5f} < 1.05; '
                    f'failures {formula_bad + small_bad}')
    assert ok


def _axiom_cases():
    c1, c2, c3 = build_chebyshev(1), build_chebyshev(2), build_chebyshev(3)
    su3 = build_su3_dual()
    prod = build_product([build_su2_dual(), build_chebyshev(1)])
    cases = [
        ('SU(2)^ ball 30', build_su2_dual(), list(range(31))),
        ('SU(3)^ p+q<=8', su3, su3.default_truncation(8)),
        ('Chebyshev d=1 box 0..6', c1, c1.box(6)),
        ('Chebyshev d=2 box 0..6', c2, c2.box(6)),
        ('Chebyshev d=3 box 0..6', c3, c3.box(6)),
    ]
    for g in GROUPS:
        H = conjugacy(g)
        cases.append((f'conjugacy {g.upper()}', H, H.default_truncation()))
    cases.append(('SU(2)^ x Chebyshev(1)', prod, prod.default_truncation()))
    return cases


def test_criterion_04_axiom_suite(announce):
    t0 = time.perf_counter()
    lines, ok = [], True
    for name, H, T in _axiom_cases():
        t = time.perf_counter()
        rep = verify_axioms(H, T)
        ok &= rep.ok
        lines.append(f'{name} |T|={len(T)} {"ok" if rep.ok else "FAILED " + str(rep.failures()[0])} '
                     f'({time.perf_counter() - t:.1f}s)')
    elapsed = time.perf_counter() - t0
    ok &= elapsed < C4_SECONDS
    announce(4, ok, f'all axioms on {len(lines)} truncations in {elapsed:.0f}s: ' + '; '.join(lines))
    assert ok


def test_criterion_05_haar_cross_checks(announce):
    bad = []
    su2 = build_su2_dual()
    bad += [('su2', n) for n in range(51) if haar_weight(su2, n) != (n + 1) ** 2]
    su3 = build_su3_dual()
    bad += [('su3', x) for x in su3.default_truncation(10) if haar_weight(su3, x) != gt_dimension(*x) ** 2]
    for g in GROUPS:
        H = conjugacy(g)
        bad += [(g, C) for C in range(len(H.classes)) if haar_weight(H, C) != len(H.classes[C])]
    for d in (1, 2, 3):
        H = build_chebyshev(d)
        for x in H.box(6):
            coords = (x,) if d == 1 else x
            if haar_weight(H, x) != 2 ** sum(1 for c in coords if c):
                bad.append((f'cheb{d}', x))
    announce(5, not bad, f'inverse-formula Haar == d^2 / |C| / 2^#nonzero on all test sets; mismatches {bad[:5]}')
    assert not bad


def test_criterion_06_fusion_oracle(announce):
    t0 = time.perf_counter()
    small = [(p, q) for p in range(C6_ORACLE_MAX + 1) for q in range(C6_ORACLE_MAX + 1)]
    oracle_bad = [(a, b) for a in small for b in small if su3_tensor_decompose(a, b) != su3_strip(a, b)]
    big = [(p, q) for p in range(C6_DIM_MAX + 1) for q in range(C6_DIM_MAX + 1)]
    dims = {x: su3_dimension(*x) for x in big}
    dim_bad = []
    for a in big:
        for b in big:
            dec = su3_tensor_decompose(a, b)
            if sum(m * su3_dimension(*c) for c, m in dec.items()) != dims[a] * dims[b]:
                dim_bad.append((a, b))
    ok = not oracle_bad and not dim_bad
    announce(6, ok, f'LR == weight stripping on {len(small) ** 2} pairs (p,q<={C6_ORACLE_MAX}); '
                    f'sum m d == d1 d2 on {len(big) ** 2} pairs '
                    f'(p,q<={C6_DIM_MAX}); {time.perf_counter() - t0:.0f}s')
    assert ok


def _random_subset(rng, T, lo, hi):
    k = int(rng.integers(lo, min(hi, len(T)) + 1))
    idx = rng.choice(len(T), size=k, replace=False)
    return [T[i] for i in sorted(idx)]


def test_criterion_07_bai_certificates(announce):
    rng = np.random.default_rng(SEED)
    bad, count = [], 0
    for name, (H, T) in catalog().items():
        for _ in range(C7_PAIRS):
            K = _random_subset(rng, T, 1, 3)
            V = _random_subset(rng, T, 1, 6)
            cert = bai_certificate(H, K, V)
            count += 1
            KV = support_product(H, K, V)
            allowed = support_product(H, KV, [H.involution(v) for v in V])
            checks = (all(v >= 0 for v in cert.u.values()),
                      all(cert.u(k) == 1 for k in K),
                      set(cert.u) <= allowed,
                      cert.bound_sq == haar_mass(H, KV) / haar_mass(H, V))
            if not all(checks):
                bad.append((name, K, V, checks))
    announce(7, not bad, f'{count} certificates over {len(catalog())} hypergroups: u >= 0, u = 1 on K, '
                         f'supp u in K*V*V~, bound^2 = h(K*V)/h(V); failures {bad[:3]}')
    assert not bad


def test_criterion_08_inequality_chain(announce):
    rng = np.random.default_rng(SEED + 1)
    cat = list(catalog().items())
    bad = []
    for i in range(C8_INSTANCES):
        name, (H, T) = cat[i % len(cat)]
        K = _random_subset(rng, T, 1, 3)
        V = _random_subset(rng, T, 1, 8)
        lep = leptin_ratio(H, K, V).value
        sf = strong_folner_ratio(H, K, V).value
        sf2, total = check_f_implies_sf(H, K, V)
        if not (lep - 1 <= sf and sf2 == sf and sf <= total):
            bad.append((name, K, V))
    announce(8, not bad, f'leptin-1 <= strong folner <= sum of folner on {C8_INSTANCES} instances; '
                         f'failures {bad[:3]}')
    assert not bad


def test_criterion_09_reiter(announce):
    H = build_chebyshev(1)
    bad, small_bad = [], []
    for n in range(1, C9_N + 1):
        rep = reiter_deficiency(H, folner_to_reiter(H, range(n + 1), 2), [1], 2)
        if rep.deficiency_pow != Q(1, 2 * n + 1):
            bad.append(n)
        if n >= C9_FROM and not rep.deficiency < C9_DEFICIENCY:
            small_bad.append(n)
    ok = not bad and not small_bad
    announce(9, ok, f'deficiency^2 == 1/(2n+1) for n=1..{C9_N}; deficiency < {C9_DEFICIENCY} '
                    f'for n>={C9_FROM} (n={C9_FROM}: {1 / math.sqrt(2 * C9_FROM + 1):.4f}); '
                    f'failures {bad + small_bad}')
    assert ok


def test_criterion_10_level_sets(announce):
    cheb = haar_level_set(build_chebyshev(1), 2, range(101))
    su2 = haar_level_set(build_su2_dual(), 100, range(201))
    ok = (cheb.all_below and cheb.verdict == 'all-below' and cheb.count == 101
          and su2.count == 10 and su2.elements == list(range(10)) and su2.verdict == 'saturating')
    announce(10, ok, f'Chebyshev(1) M=2: {cheb.count}/{cheb.size} below ({cheb.verdict}); '
                     f'SU(2)^ M=100: {su2.count} elements {su2.elements[0]}..{su2.elements[-1]} ({su2.verdict})')
    assert ok
