"""Acceptance criteria 1-7, one PASS/FAIL line each.

Run with ``pytest -s tests/test_acceptance.py``; the lines are also echoed in
the terminal summary.  Two printed values are contradicted by exhaustive
computation (criteria 2 and 3); those lines read FAIL with the reason, the
literal claims are strict xfails, and the corrected values are asserted.
"""
from collections import Counter
from itertools import accumulate

import pytest

from ribbonq import abacus_quotient as aq
from ribbonq import llt_q
from ribbonq import ribbon_tableaux as rt
from ribbonq import symfunc as sf
from ribbonq.shapes import hook_lengths, partitions, strict_partitions, strict_partitions_upto
from ribbonq.symfunc import QPolynomial as QP
from ribbonq.words_stats import adjust_marked, descent_set, peak_set, runs, spike_set, subsets

from oracles import hook_len

REPORT: dict[int, str] = {}


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})"
    REPORT[n] = line
    print(line)


def g_sets(f):
    return {tuple(sorted(P)): c for P, c in sf.expand_in_G(f).items()}


def f_sets(f):
    return {tuple(accumulate(a[:-1])): c for a, c in sf.expand_in_F(f).items()}


# ---------------------------------------------------------------- 1


def test_criterion_1_quotient():
    q = aq.k_quotient((16, 11, 10, 9, 8, 7, 4, 3, 1), 5)
    assert q.runner_shapes == ((4, 3, 1), (2,), (2, 1), (2, 1), (2,))
    assert q.folded[0] == aq.FoldedDiagram((3, 3, 2), 1)
    # (2) <> (2,1) is the three-cell column drawn in the figure
    assert q.folded[1] == aq.FoldedDiagram((1, 1, 1), -1)
    assert q.folded[1] == aq.combine((2,), (2, 1))
    assert q.shifted == (2,)
    report(1, True, "runners (431,2,21,21,2); folded ((3,3,2), c=1), ((1,1,1), c=-1); shifted (2)")


# ---------------------------------------------------------------- 2


def test_criterion_2_counts():
    assert len(rt.enumerate_standard((5, 4, 2, 1), 3)) == 2
    n7521 = len(rt.enumerate_standard((7, 5, 2, 1), 3))
    assert n7521 == 5
    assert len(rt.enumerate_standard((9, 8, 6, 2), 5)) == 20
    ts = rt.enumerate_semistandard((5, 4, 2, 1), 3, 2)
    assert len(ts) == 16
    assert Counter(t.weight(2) for t in ts) == Counter({(3, 1): 4, (2, 2): 8, (1, 3): 4})
    # the 5 tableaux are exactly what the printed G-expansion needs
    rows = llt_q.counterexample_report((7, 5, 2, 1), 3)
    need = {(2, 4): 8, (2,): 4, (4,): 4, (3,): 8}
    got = Counter()
    for r in rows:
        got[tuple(r["peak"])] += r["coefficient"]
    assert dict(got) == need
    report(2, False, "|SRT3(7,5,2,1)| is 5, not 3: the figure's three groups hold 2+2+1 tableaux, "
           "and 8G24+4G2+4G4+8G3 requires all 5; the other three counts and the 16 weights match")


@pytest.mark.xfail(strict=True, reason="printed count 3; exhaustive enumeration gives 5")
def test_criterion_2_literal_7521_count():
    assert len(rt.enumerate_standard((7, 5, 2, 1), 3)) == 3


# ---------------------------------------------------------------- 3


def test_criterion_3_generating_functions():
    f = sf.ribbon_Q((5, 4, 2, 1), 3, 2)
    assert f == sf.SymPoly(2, {(3, 1): 4, (2, 2): 8, (1, 3): 4}) == sf.schurQ((3, 1), 2)
    assert g_sets(sf.RQ((5, 4, 2, 1), 3)) == {(2,): 4, (3,): 4}
    assert g_sets(sf.RQ((7, 5, 2, 1), 3)) == {(2, 4): 8, (2,): 4, (4,): 4, (3,): 8}
    s32 = f_sets(sf.schur((3, 2)))
    assert s32 == {(2,): 1, (3,): 1, (1, 3): 1, (1, 4): 1, (2, 4): 1}
    e = sf.expand_in_schur(sf.foldedQ(aq.FoldedDiagram((2, 2), 0)))
    assert e.coefficients == {(3, 1): QP([4]), (2, 2): QP([4]), (2, 1, 1): QP([4])} and not e.remainder
    report(3, False, "s32 = F2+F3+F13+F14+F24 (five SYT of shape (3,2)), not F3+F2+F4+2F24; "
           "Q^f((2,2)) = 4(s31+s22+s211), the printed s2111 has the wrong degree; "
           "the two ribbon-Q identities in 2 variables and both G-expansions match")


@pytest.mark.xfail(strict=True, reason="the printed F-expansion of s32 is not correct")
def test_criterion_3_literal_s32():
    assert f_sets(sf.schur((3, 2))) == {(3,): 1, (2,): 1, (4,): 1, (2, 4): 2}


# ---------------------------------------------------------------- 4


def test_criterion_4_product_and_positivity():
    f = sf.RQ((9, 8, 6, 2), 5)
    e = sf.expand_in_Q(f)
    assert e.coefficients == {(5,): QP([2]), (4, 1): QP([4]), (3, 2): QP([3])} and not e.remainder
    q = aq.k_quotient((9, 8, 6, 2), 5)
    prod = sf.Q(q.shifted)
    for fd in q.folded:
        prod = prod * sf.foldedQ(fd)
    assert f == prod == sf.quotient_product((9, 8, 6, 2), 5)
    report(4, True, "RQ5(9,8,6,2) = 2Q5+4Q41+3Q32 = Q_(alpha5) * product of folded Q")


# ---------------------------------------------------------------- 5


def test_criterion_5_q_analogues():
    e = sf.expand_in_schur(llt_q.LLT((4, 4, 1, 1), 2))
    assert e.coefficients == {(2, 2, 1): QP([0, 0, 1]), (3, 1, 1): QP([0, 1]), (3, 2): QP([0, 1]), (4, 1): QP([1])}
    assert not e.remainder
    qr = llt_q.QR((9, 8, 6, 2), 5)
    e = sf.expand_in_Q(qr)
    assert e.coefficients == {(5,): QP([1, 1]), (4, 1): QP([1, 2, 1]), (3, 2): QP([0, 2, 1])} and not e.remainder
    assert qr.at_q(1) == sf.RQ((9, 8, 6, 2), 5)
    report(5, True, "LLT(4,4,1,1) = s41+q s32+q s311+q^2 s221; QR5(9,8,6,2) = (q+1)Q5+(q^2+2q+1)Q41+(q^2+2q)Q32; q=1 gives criterion 4")


# ---------------------------------------------------------------- 6


def sweep_a():
    for lam in strict_partitions_upto(12):
        hl = hook_lengths(lam)
        assert all(hl[c] == hook_len(lam, c) for c in hl)
        for k in range(1, 7):
            assert sum(1 for v in hl.values() if v == k) == len(rt.removable_ribbons(lam, k)), (lam, k)


def sweep_b():
    for lam in strict_partitions_upto(14):
        for k in range(1, 6):
            assert aq.reachable_cores(lam, k) == {aq.k_core(lam, k)}, (lam, k)


def sweep_c():
    n = 0
    for lam in strict_partitions_upto(16):
        for k in range(2, 6):
            for t in rt.enumerate_standard(lam, k):
                assert rt.phi_inverse(rt.phi_quotient(t)) == t
                n += 1
            for t in rt.enumerate_semistandard(lam, k, 2):
                f = rt.phi_quotient(t)
                assert rt.phi_inverse(f) == t and f.weight(2) == t.weight(2)
                n += 1
    return n


def sweep_dg():
    for lam in strict_partitions_upto(16):
        for k in range(2, 6):
            a = sf.RQ(lam, k)
            assert a == sf.RQ(lam, k, "marked") == sf.RQ(lam, k, "peak"), (lam, k)
            assert a == sf.RP(lam, k).scale(2 ** aq.k_length(lam, k)), (lam, k)
            e = sf.expand_in_Q(a)
            assert not e.remainder and e.is_nonnegative(), (lam, k, str(e))
            assert all(c == QP([c.at(1)]) for c in e.coefficients.values())


def sweep_e():
    for D in subsets(9):
        assert len(peak_set(D)) == len(runs(D)) - (1 if 1 in D else 0)
    m = 0
    for lam in strict_partitions_upto(16):
        for k in range(2, 6):
            for t in rt.enumerate_standard(lam, k):
                n = len(t)
                if n == 0 or n > 8:
                    continue
                D0 = descent_set(t.reading_word())
                P = peak_set(D0)
                images = Counter()
                for v in rt.mark_variants(t):
                    w = v.reading_word()
                    D = descent_set(adjust_marked(w))
                    marked = {val for val, mk in w if mk}
                    for i in range(1, n):
                        assert (i in D) == ((i not in marked) if i in D0 else (i + 1 in marked))
                    assert spike_set(D, n) >= P
                    images[D] += 1
                    m += 1
                assert set(images) == {D for D in subsets(n - 1) if spike_set(D, n) >= P}
                assert set(images.values()) == {2 ** (len(P) + 1)}
    return m


def sweep_f():
    small = [p for s in range(9) for p in strict_partitions(s)]
    for a in small:
        for b in small:
            assert aq.decompose(aq.combine(a, b)) == (a, b)


def test_criterion_6_property_suites():
    sweep_a()
    sweep_b()
    n = sweep_c()
    sweep_dg()
    m = sweep_e()
    sweep_f()
    report(6, True, f"(a)-(g) exhaustive; {n} tableaux through phi, {m} marked variants")


# ---------------------------------------------------------------- 7


def test_criterion_7_folded_independence():
    count = 0
    for n in range(9):
        for g in partitions(n):
            values = set()
            for c in range(-len(g) - 2, (g[0] if g else 0) + 3):
                f = aq.FoldedDiagram(g, c)
                if not aq.is_folded_diagram(f):
                    continue
                outer, inner = sf.staircase_view(f)
                fq = sf.foldedQ(f)
                assert fq == sf.skewQ(outer, inner), (g, c)
                values.add(fq)
                count += 1
            assert len(values) <= 1, g
    report(7, True, f"{count} folded diagrams with |gamma| <= 8, each equal to its staircase skew Q and independent of the diagonal")
