#!/usr/bin/env python3
"""Mint the frozen reference constants used by the test suite.

Every non-trivial expected value asserted in tests/ is computed here with
mpmath at 50 significant digits, using brute-force partial products and
partial sums that are independent of the library's own log-space evaluation
path. Constants are printed to 15 significant digits, ready to paste into
test modules.

Run: python3 tools/mint_reference_values.py
"""

from mpmath import mp, mpf, log, sqrt, pi, gamma, digamma, qp

mp.dps = 50


def qpochhammer(a, q, tail=mpf("1e-42")):
    """(a;q)_inf by direct product, stopping once |a| q^n < tail."""
    a, q = mpf(a), mpf(q)
    prod = mpf(1)
    p = a
    n = 0
    while abs(p) > tail:
        prod *= 1 - p
        p *= q
        n += 1
        if n > 500_000:
            raise RuntimeError("product did not converge")
    return prod


def qgamma_ref(x, q):
    """Jackson q-gamma by the defining products, both branches."""
    x, q = mpf(x), mpf(q)
    if q < 1:
        return qpochhammer(q, q) / qpochhammer(q**x, q) * (1 - q) ** (1 - x)
    p = 1 / q
    return (
        qpochhammer(p, p)
        / qpochhammer(p**x, p)
        * (q - 1) ** (1 - x)
        * q ** (x * (x - 1) / 2)
    )


def geometric_tail(shift, q, terms=600):
    """sum_{n>=0} q^(shift+n) / (1 - q^(shift+n)) by brute partial sums."""
    shift, q = mpf(shift), mpf(q)
    total = mpf(0)
    for n in range(terms):
        p = q ** (shift + n)
        total += p / (1 - p)
    return total


def show(name, value):
    print(f"{name:42s} = {mp.nstr(mpf(value), 15)}")


def main():
    print("# q-Pochhammer and geometric-tail oracles")
    qq_half = qpochhammer(mpf("0.5"), mpf("0.5"))
    show("(0.5;0.5)_inf", qq_half)
    # cross-check the brute product against mpmath's own qp()
    # (the brute product truncates at |a| q^n < 1e-42, so ~1e-41 agreement)
    assert abs(qq_half - qp(mpf("0.5"))) < mpf("1e-40")
    show("geometric_tail(shift=1, q=0.5)", geometric_tail(1, "0.5"))
    show("geometric_tail(shift=2, q=0.5)", geometric_tail(2, "0.5"))

    print("\n# q-digamma values at q=0.5  (-log(1-q) + log(q)*S(shift))")
    q = mpf("0.5")
    for shift in (1, 2):
        val = -log(1 - q) + log(q) * geometric_tail(shift, q)
        show(f"qdigamma(y={shift}, q=0.5)", val)

    print("\n# q-gamma table, q<1 branch (direct product oracle)")
    for qv in ("0.1", "0.5", "0.9"):
        for xv in ("0.25", "0.5", "1.5", "2.5", "5"):
            show(f"qgamma(x={xv}, q={qv})", qgamma_ref(xv, qv))

    print("\n# q-gamma table, q>1 branch")
    for qv in ("2", "5"):
        for xv in ("0.5", "1.5", "3"):
            show(f"qgamma(x={xv}, q={qv})", qgamma_ref(xv, qv))

    print("\n# exact normalization / small-integer sanity")
    show("qgamma(3, 0.5)   (expect 1.5)", qgamma_ref(3, "0.5"))
    show("qgamma(2, 2)     (expect 1)", qgamma_ref(2, "2"))
    show("qgamma(3, 2)     (expect 3)", qgamma_ref(3, "2"))

    print("\n# classical references")
    show("euler-mascheroni (float repr below)", mp.euler)
    print(f"{'  as float literal':42s} = {float(mp.euler)!r}")
    show("digamma(0.5) = -gamma - 2 log 2", -mp.euler - 2 * log(2))
    assert abs(digamma(mpf("0.5")) - (-mp.euler - 2 * log(2))) < mpf("1e-45")
    show("Gamma(3.5) = 15 sqrt(pi)/8", 15 * sqrt(pi) / 8)
    show("1/Gamma(3.5)", 8 / (15 * sqrt(pi)))
    show("log(1.5)", log(mpf("1.5")))
    show("termwise gap 1/7 - 1/3 = -4/21", mpf(1) / 7 - mpf(1) / 3)

    print("\n# classical-limit approach |qgamma(x,q) - Gamma(x)|, q -> 1")
    print("#   (strict decrease along each row is assumed by the tests)")
    mp.dps = 30
    for xv in ("0.5", "1.5", "2.5", "5"):
        gaps = []
        for qv in ("0.9", "0.99", "0.999"):
            gaps.append(abs(qgamma_ref(xv, qv) - gamma(mpf(xv))))
        marks = "decreasing" if gaps[0] > gaps[1] > gaps[2] else "NOT MONOTONE"
        print(
            f"x={xv:4s}: "
            + "  ".join(mp.nstr(g, 8) for g in gaps)
            + f"   [{marks}]"
        )

    print("\n# q>1 recurrence spot check: qgamma(x+1)/qgamma(x) vs (q^x-1)/(q-1)")
    mp.dps = 50
    for qv, xv in (("2", "0.75"), ("10", "2.5")):
        qm, xm = mpf(qv), mpf(xv)
        lhs = qgamma_ref(xm + 1, qm) / qgamma_ref(xm, qm)
        rhs = (qm**xm - 1) / (qm - 1)
        print(f"q={qv}, x={xv}: ratio/closed-form - 1 = {mp.nstr(lhs / rhs - 1, 5)}")


if __name__ == "__main__":
    main()
