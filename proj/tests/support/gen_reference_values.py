#!/usr/bin/env python3
"""Independent oracle for the numeric constants frozen into the C++ tests.

Computes the recurrence sequence, the log-error terms E_i, the constants
K2 / truncated K1, the empirical prefactors C_n, and the prediction errors
with mpmath at 120 decimal digits, then prints them in copy-paste form.

Run manually:  python3 tests/support/gen_reference_values.py
The values printed here are pasted into tests/ as string literals; this
script is not executed by the test suite.
"""

import sys
from fractions import Fraction

import mpmath as mp

sys.set_int_max_str_digits(100_000_000)

mp.mp.dps = 120

SEQ_MAX = 32  # A_33+ has millions of digits; E_i beyond ~25 is < 10^-4000 anyway
E_MAX = 26

K1_REFERENCE = mp.mpf("1.00001887227319")
K2_REFERENCE = mp.mpf("1.48369689570172")


def sequence(n_max):
    a = [1, 2]
    for n in range(2, n_max + 1):
        q, p = a[n - 2], a[n - 1]
        a.append(1 + (1 + q) * q // 2 + q * (p - q))
    return a[: n_max + 1]


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def e_term(i, seq):
    a, b = seq[i - 1], seq[i - 2]
    num_minus_den = Fraction(b + 2 - b * b)  # (2ab + b - b^2 + 2) - 2ab
    den = Fraction(2 * a * b)
    delta = num_minus_den / den
    return mp.log1p(mp.mpf(delta.numerator) / mp.mpf(delta.denominator))


def main():
    seq = sequence(SEQ_MAX)
    sqrt5 = mp.sqrt(5)
    lam2 = (1 + sqrt5) / 2
    lam1 = (1 - sqrt5) / 2

    print("== sequence ==")
    print("A_0..A_9 =", seq[:10])
    for n in (10, 12, 16, 20, 30):
        print(f"digits(A_{n}) = {len(str(seq[n]))}")

    print("\n== ratio decay ==")
    for n in (3, 4, 8, 9):
        r = mp.mpf(seq[n - 1]) / mp.mpf(seq[n])
        print(f"A_{n-1}/A_{n} = {mp.nstr(r, 8)}")

    print("\n== E terms ==")
    es = {i: e_term(i, seq) for i in range(2, E_MAX + 1)}
    for i in range(2, 11):
        print(f"E_{i} = {mp.nstr(es[i], 42)}")
    print("E_2 == log(3/2):", mp.almosteq(es[2], mp.log(mp.mpf(3) / 2)))
    print("E_4 == log(8/9):", mp.almosteq(es[4], mp.log(mp.mpf(8) / 9)))
    decreasing_from_5 = all(abs(es[i + 1]) < abs(es[i]) for i in range(5, E_MAX))
    print("|E_4| < |E_5|:", abs(es[4]) < abs(es[5]))
    print("|E_i| strictly decreasing for i in 5..%d:" % E_MAX, decreasing_from_5)

    def k2(terms):
        s = mp.log(2)
        for i in range(2, terms + 1):
            if i in es:
                s += es[i] * lam2 ** (-i + 1)
        return mp.exp(s / sqrt5)

    print("\n== K2 ==")
    k2_30 = k2(30)
    print("K2(terms=30) =", mp.nstr(k2_30, 65))
    print("K2(terms=20) - K2(terms=30) =", mp.nstr(k2(20) - k2_30, 5))
    print("|K2 - 1.48369689570172| =", mp.nstr(abs(k2_30 - K2_REFERENCE), 5))
    k2_t2 = mp.exp((mp.log(2) + mp.log(mp.mpf(3) / 2) / lam2) / sqrt5)
    print("K2(terms=2) closed form =", mp.nstr(k2_t2, 45))
    print("K2(terms=2) series      =", mp.nstr(k2(2), 45))
    tail_30 = abs(es[31]) * lam2 ** (-29) / (1 - 1 / lam2) if 31 in es else mp.mpf(0)
    print("tail bound at terms=30 (sum level) =", mp.nstr(tail_30, 5))

    def k1_trunc(n):
        s = mp.mpf(0)
        for i in range(2, n + 1):
            s += es[i] * lam1 ** (n - i + 1)
        return mp.exp(-s / sqrt5)

    print("\n== K1 truncated ==")
    for n in (3, 5, 8, 12, 16, 20, 21, 24):
        print(f"K1_trunc({n}) = {mp.nstr(k1_trunc(n), 45)}")
    k1_3_closed = mp.exp(-lam1 ** 2 * mp.log(mp.mpf(3) / 2) / sqrt5)
    print("K1_trunc(3) closed form =", mp.nstr(k1_3_closed, 45))
    print("K1_trunc(8) in (1.004, 1.008):", 1.004 < k1_trunc(8) < 1.008)
    for n in (19, 20, 21):
        print(f"K1_trunc({n}) - K1ref = {mp.nstr(k1_trunc(n) - K1_REFERENCE, 5)}")

    def lam2_pow(n):
        return fib(n) * lam2 + fib(n - 1) if n >= 1 else mp.mpf(1)

    def prefactor(n):
        return seq[n] * mp.exp(-lam2_pow(n) * mp.log(k2_30))

    print("\n== prefactor C_n ==")
    cs = {n: prefactor(n) for n in range(0, 23)}
    print("C_0 =", mp.nstr(cs[0], 45), " (1/K2 =", mp.nstr(1 / k2_30, 45), ")")
    for n in range(5, 18):
        print(f"C_{n} = {mp.nstr(cs[n], 42)}  |C-K1ref| = {mp.nstr(abs(cs[n] - K1_REFERENCE), 4)}")
    deltas = [abs(cs[n + 1] - cs[n]) for n in range(12, 16)]
    print("deltas 12..16:", [mp.nstr(d, 4) for d in deltas])
    print("deltas nonincreasing:", all(deltas[i + 1] <= deltas[i] for i in range(len(deltas) - 1)))
    print("max |C_n - K1ref| on 12..16:", mp.nstr(max(abs(cs[n] - K1_REFERENCE) for n in range(12, 17)), 4))

    print("\n== predict ==")
    for n, mode_k1 in ((5, K1_REFERENCE), (8, K1_REFERENCE), (8, mp.mpf(1))):
        est = mode_k1 * mp.exp(lam2_pow(n) * mp.log(k2_30))
        rel = abs(est - seq[n]) / seq[n]
        print(f"n={n} k1={mp.nstr(mode_k1, 16)}: est={mp.nstr(est, 12)} rel_err={mp.nstr(rel, 5)}")

    print("\n== by-leaves exponent ==")
    c_leaf = (3 * sqrt5 - 5) / 2
    for n in (8, 20, 40):
        diff = lam2_pow(n) - c_leaf * fib(n + 2)
        ratio = mp.exp(diff * mp.log(k2_30))
        print(f"n={n}: exponent diff = {mp.nstr(diff, 8)}, K2^diff - 1 = {mp.nstr(ratio - 1, 5)}")

    print("\n== misc ==")
    print("log10(K2) =", mp.nstr(mp.log10(k2_30), 20))
    print("lambda1 =", mp.nstr(lam1, 45))
    print("lambda2 =", mp.nstr(lam2, 45))
    print("F_7, F_27, F_42 =", fib(7), fib(27), fib(42))


if __name__ == "__main__":
    main()
