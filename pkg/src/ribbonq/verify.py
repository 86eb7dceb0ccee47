"""Replayable checks of the worked examples and of exhaustive identities.

Each check returns ``(status, detail)`` where status is ``True`` (pass),
``False`` (fail) or ``"erratum"`` (the printed value is contradicted by an
exhaustive, cross-checked computation; see the README).
"""
from __future__ import annotations

from collections import Counter

from . import abacus_quotient as aq
from . import llt_q, ribbon_tableaux as rt, symfunc as sf
from .shapes import hook_lengths, strict_partitions_upto
from .symfunc import QPolynomial as QP


def _q(*c):
    return QP(c)


def _quotient_golden():
    q = aq.k_quotient((16, 11, 10, 9, 8, 7, 4, 3, 1), 5)
    want_runners = ((4, 3, 1), (2,), (2, 1), (2, 1), (2,))
    want = (aq.FoldedDiagram((3, 3, 2), 1), aq.FoldedDiagram((1, 1, 1), -1))
    ok = q.runner_shapes == want_runners and q.folded == want and q.shifted == (2,)
    return ok, f"runners {q.runner_shapes}, folded {[(f.shape, f.diag_offset) for f in q.folded]}, shifted {q.shifted}"


def _count(lam, k, want):
    def check():
        n = len(rt.enumerate_standard(lam, k))
        if n == want:
            return True, f"{n}"
        return "erratum" if (lam, k, want) == ((7, 5, 2, 1), 3, 3) else False, f"found {n}, printed {want}"
    return check


def _semistandard_16():
    ts = rt.enumerate_semistandard((5, 4, 2, 1), 3, 2)
    w = Counter(t.weight(2) for t in ts)
    ok = len(ts) == 16 and w == Counter({(3, 1): 4, (2, 2): 8, (1, 3): 4})
    return ok, f"{len(ts)} fillings, weights {dict(w)}"


def _rq_5421():
    f = sf.ribbon_Q((5, 4, 2, 1), 3, 2)
    want = sf.SymPoly(2, {(3, 1): 4, (2, 2): 8, (1, 3): 4})
    return f == want and f == sf.schurQ((3, 1), 2), str(f)


def _peak(lam, want):
    def check():
        g = sf.expand_in_G(sf.RQ(lam, 3))
        return g == want, str({tuple(sorted(P)): c for P, c in g.items()})
    return check


def _s32():
    got = {frozenset(k): v for k, v in _f_expansion(sf.schur((3, 2))).items()}
    printed = {frozenset({3}): 1, frozenset({2}): 1, frozenset({4}): 1, frozenset({2, 4}): 2}
    if got == printed:
        return True, "matches"
    return "erratum", f"computed {_fmt_sets(got)}"


def _f_expansion(f):
    from itertools import accumulate

    return {tuple(accumulate(a[:-1])): c for a, c in sf.expand_in_F(f).items()}


def _fmt_sets(d):
    return " + ".join(f"{c}F{{{','.join(map(str, sorted(s)))}}}" for s, c in sorted(d.items(), key=lambda x: (len(x[0]), sorted(x[0]))))


def _folded_22():
    f = aq.FoldedDiagram((2, 2), 0)
    e = sf.expand_in_schur(sf.foldedQ(f))
    ok = e.coefficients == {(3, 1): _q(4), (2, 2): _q(4), (2, 1, 1): _q(4)} and not e.remainder
    return ok, f"{e} (printed s2111 read as s211)"


def _eq5():
    f = sf.RQ((9, 8, 6, 2), 5)
    e = sf.expand_in_Q(f)
    ok = e.coefficients == {(5,): _q(2), (4, 1): _q(4), (3, 2): _q(3)} and not e.remainder
    ok = ok and f == sf.quotient_product((9, 8, 6, 2), 5)
    return ok, str(e)


def _llt():
    e = sf.expand_in_schur(llt_q.LLT((4, 4, 1, 1), 2))
    want = {(2, 2, 1): _q(0, 0, 1), (3, 1, 1): _q(0, 1), (3, 2): _q(0, 1), (4, 1): _q(1)}
    return e.coefficients == want and not e.remainder, str(e)


def _qr():
    f = llt_q.QR((9, 8, 6, 2), 5)
    e = sf.expand_in_Q(f)
    want = {(5,): _q(1, 1), (4, 1): _q(1, 2, 1), (3, 2): _q(0, 2, 1)}
    ok = e.coefficients == want and not e.remainder and f.at_q(1) == sf.RQ((9, 8, 6, 2), 5)
    return ok, str(e)


def example_checks():
    return [
        ("quotient of (16,11,10,9,8,7,4,3,1), k=5", _quotient_golden),
        ("|SRT3(5,4,2,1)| = 2", _count((5, 4, 2, 1), 3, 2)),
        ("|SRT3(7,5,2,1)| = 3", _count((7, 5, 2, 1), 3, 3)),
        ("|SRT5(9,8,6,2)| = 20", _count((9, 8, 6, 2), 5, 20)),
        ("16 semi-standard fillings of (5,4,2,1), k=3", _semistandard_16),
        ("RQ3(5,4,2,1)(x1,x2) = Q31(x1,x2)", _rq_5421),
        ("RQ3(5,4,2,1) = 4G2 + 4G3", _peak((5, 4, 2, 1), {frozenset({2}): 4, frozenset({3}): 4})),
        ("RQ3(7,5,2,1) = 8G24 + 4G2 + 4G4 + 8G3", _peak(
            (7, 5, 2, 1), {frozenset({2, 4}): 8, frozenset({2}): 4, frozenset({4}): 4, frozenset({3}): 8})),
        ("s32 = F3 + F2 + F4 + 2F24", _s32),
        ("folded Q of ((2,2), diagonal 0) = 4(s31 + s22 + s211)", _folded_22),
        ("RQ5(9,8,6,2) = 2Q5 + 4Q41 + 3Q32 = product over the quotient", _eq5),
        ("LLT of (4,4,1,1), k=2", _llt),
        ("QR5(9,8,6,2)(X;q)", _qr),
    ]


def exhaustive_checks(max_size: int):
    def hooks():
        for lam in strict_partitions_upto(max_size):
            for k in range(1, 7):
                h = sum(1 for v in hook_lengths(lam).values() if v == k)
                if h != len(rt.removable_ribbons(lam, k)):
                    return False, f"{lam}, k={k}"
        return True, f"|lambda| <= {max_size}"

    def cores():
        for lam in strict_partitions_upto(max_size):
            for k in range(1, 6):
                if len(aq.reachable_cores(lam, k)) != 1:
                    return False, f"{lam}, k={k}"
        return True, f"|lambda| <= {max_size}"

    def phi():
        n = 0
        for lam in strict_partitions_upto(max_size):
            for k in range(2, 6):
                for t in rt.enumerate_standard(lam, k):
                    n += 1
                    if rt.phi_inverse(rt.phi_quotient(t)) != t:
                        return False, f"{lam}, k={k}"
        return True, f"{n} tableaux"

    def routes():
        for lam in strict_partitions_upto(max_size):
            for k in range(2, 6):
                a = sf.RQ(lam, k)
                if a != sf.RQ(lam, k, "marked") or a != sf.RQ(lam, k, "peak"):
                    return False, f"{lam}, k={k}"
                if a != sf.RP(lam, k).scale(2 ** aq.k_length(lam, k)):
                    return False, f"RQ = 2^l RP fails at {lam}, k={k}"
                e = sf.expand_in_Q(a)
                if e.remainder or not e.is_nonnegative():
                    return False, f"Q-expansion at {lam}, k={k}: {e}"
        return True, f"|lambda| <= {max_size}"

    return [
        ("hook length k <-> removable k-ribbon", hooks),
        ("k-core independent of move order", cores),
        ("phi roundtrip on standard tableaux", phi),
        ("three routes, RQ = 2^l RP, Q-positivity", routes),
    ]
