"""Exact-arithmetic layer: valuations, Teichmuller lifts, cyclotomic ring,
Weierstrass preparation."""

import random

import pytest

from padiclf.padic import (
    CycloPadic,
    InfinityAtPrecision,
    PadicInt,
    PowerSeries,
    PrecisionExhausted,
    teichmuller,
    valuation,
    weierstrass_prep,
)

SEED = 20177
print("test_padic seed:", SEED)


# ---------------------------------------------------------------- valuation

def test_valuation_18_base3():
    assert valuation(PadicInt(3, 18, 5)) == 2  # 18 = 2 * 3^2


def test_valuation_zero_is_infinity_at_precision():
    v = valuation(PadicInt(5, 0, 4))
    assert isinstance(v, InfinityAtPrecision) and v.prec == 4


def test_valuation_252_base3():
    # hand oracle: 252 = 2^2 * 3^2 * 7
    assert valuation(PadicInt(3, 252, 6)) == 2


def test_valuation_requires_a_digit():
    with pytest.raises(ValueError):
        valuation(PadicInt(3, 1, 0))


# ---------------------------------------------------------------- teichmuller

def hensel_root_x4(a, prec):
    # independent oracle: Newton iteration on x^4 - 1 = 0 from x = a, p = 5
    m = 5 ** prec
    x = a
    for _ in range(prec + 2):
        x = (x - (pow(x, 4, m) - 1) * pow(4 * pow(x, 3, m), -1, m)) % m
    return x


def test_teichmuller_identity():
    assert teichmuller(1, 5, 3).value == 1


def test_teichmuller_2_mod_125():
    t = teichmuller(2, 5, 3)
    assert t.value == 57
    assert t.value == hensel_root_x4(2, 3)


def test_teichmuller_minus_one():
    for p, n in [(3, 4), (5, 3), (7, 6)]:
        assert teichmuller(p - 1, p, n).value == p ** n - 1


def test_teichmuller_rejects_nonunit():
    with pytest.raises(ValueError):
        teichmuller(10, 5, 3)


def test_teichmuller_power_identity():
    rng = random.Random(SEED)
    for p in (3, 5, 7):
        for n in range(1, 21):
            a = rng.randrange(1, p)
            t = teichmuller(a, p, n)
            assert (t ** (p - 1)).value == 1 % p ** n


# ---------------------------------------------------------------- precision

def test_precision_soundness_of_products():
    rng = random.Random(SEED + 1)
    for _ in range(200):
        p = rng.choice([3, 5, 7])
        lo, hi = 6, 12
        a, b = rng.randrange(0, p ** hi), rng.randrange(0, p ** hi)
        coarse = PadicInt(p, a, lo) * PadicInt(p, b, lo)
        fine = PadicInt(p, a, hi) * PadicInt(p, b, hi)
        assert fine.congruent(coarse)  # agree mod the coarse result's precision


def test_addition_min_precision():
    x = PadicInt(5, 7, 8) + PadicInt(5, 3, 3)
    assert x.prec == 3


def test_multiplication_precision_plus_valuation():
    # error term is 25 * O(5^6): result known mod 5^(6+2) from that side,
    # but only mod 5^(6+0) from 2 * O(5^6)
    x = PadicInt(5, 25, 6) * PadicInt(5, 2, 6)
    assert x.prec == 6 and x.value == 50
    y = PadicInt(5, 25, 6) * PadicInt(5, 50, 6)
    assert y.prec == 8  # both factors have valuation 2


def test_unit_inverse_and_division():
    x = PadicInt(7, 3, 8)
    assert (x * x.unit_inverse()).value == 1
    y = PadicInt(7, 3 * 49, 8)
    assert (y / x).value == 49


def test_divide_exact_errors():
    with pytest.raises(PrecisionExhausted):
        PadicInt(3, 4, 5).divide_exact(1)


def test_congruent_never_asserts_beyond_joint_precision():
    with pytest.raises(PrecisionExhausted):
        PadicInt(3, 1, 4).congruent(PadicInt(3, 1, 4), 5)


# ---------------------------------------------------------------- cyclotomic

def test_cyclo_level_zero_recovers_padic():
    x = CycloPadic.from_padic(PadicInt(5, 42, 6))
    assert x.to_padic().value == 42


def test_zeta_has_exact_order():
    for p, r in [(3, 1), (3, 2), (5, 1), (5, 2)]:
        z = CycloPadic.zeta(p, r, 8)
        n = p ** r
        assert (z ** n).congruent(1)
        assert not (z ** (n // p)).congruent(1)


def test_zeta_geometric_sum_vanishes():
    # 1 + zeta + ... + zeta^(p^r - 1) = 0
    for p, r in [(3, 2), (5, 1), (7, 1)]:
        z = CycloPadic.zeta(p, r, 9)
        acc = CycloPadic.from_int(p, 0, 9, r)
        for k in range(p ** r):
            acc = acc + z ** k
        assert acc.is_zero()


def test_cyclo_unit_inverse():
    rng = random.Random(SEED + 2)
    for p, r in [(3, 1), (3, 2), (5, 1)]:
        deg = (p - 1) * p ** (r - 1)
        for _ in range(5):
            coeffs = [rng.randrange(0, p ** 6) for _ in range(deg)]
            coeffs[0] |= 1  # nudge toward a unit; skip if not
            x = CycloPadic(p, r, coeffs, 6)
            try:
                inv = x.unit_inverse()
            except ZeroDivisionError:
                continue
            assert (x * inv).congruent(1)


def test_conj_is_involution_and_fixes_rationals():
    z = CycloPadic.zeta(3, 2, 8)
    w = z * 7 + z ** 2 * 5 + 11
    assert w.conj().conj().congruent(w)
    c = CycloPadic.from_int(3, 13, 8)
    assert c.conj().congruent(c)


def test_p_shift_tracks_negative_powers():
    x = CycloPadic.from_int(5, 7, 8).p_shift(-2)
    y = x * CycloPadic.from_int(5, 25, 8)
    assert y.congruent(7)


def test_embed_compatible_with_products():
    z1 = CycloPadic.zeta(3, 1, 8)
    z2 = CycloPadic.zeta(3, 2, 8)
    assert (z2 ** 3).congruent(z1.embed(2))


# ---------------------------------------------------------------- weierstrass

def test_weierstrass_unit_series():
    # f = 1 + pT is already a unit
    f = PowerSeries.from_ints(3, [1, 3, 0, 0, 0, 0], 8)
    rep = weierstrass_prep(f)
    assert (rep.mu, rep.lam) == (0, 0)
    assert rep.distinguished.coeffs[0].value == 1
    recon = rep.distinguished * rep.unit
    for c, d in zip(recon.coeffs, f.coeffs):
        assert c.congruent(d, 6)


def test_weierstrass_p_plus_T():
    f = PowerSeries.from_ints(5, [5, 1, 0, 0, 0], 8)
    rep = weierstrass_prep(f)
    assert (rep.mu, rep.lam) == (0, 1)
    # distinguished factor is T + 5 on the nose
    assert rep.distinguished.coeffs[0].congruent(5, 6)
    assert rep.distinguished.coeffs[1].congruent(1, 6)


def test_weierstrass_with_p_content():
    # f = p^2 (T^2 + pT + p)
    p = 3
    f = PowerSeries.from_ints(p, [p ** 3, p ** 3, p ** 2, 0, 0, 0], 10)
    rep = weierstrass_prep(f)
    assert (rep.mu, rep.lam) == (2, 2)
    assert rep.distinguished.coeffs[2].congruent(1, 6)
    assert rep.distinguished.coeffs[0].lower_valuation() >= 1
    assert rep.distinguished.coeffs[1].lower_valuation() >= 1


def test_weierstrass_reconstruction_random():
    rng = random.Random(SEED + 3)
    for trial in range(100):
        p = rng.choice([3, 5])
        M, N = 7, 12
        mu = rng.randrange(0, 2)
        lam = rng.randrange(0, 4)
        coeffs = []
        for i in range(M):
            if i < lam:
                coeffs.append(p * rng.randrange(0, p ** (N - 2)))
            elif i == lam:
                coeffs.append(rng.randrange(1, p ** (N - 1)) * p + 1)
            else:
                coeffs.append(rng.randrange(0, p ** (N - 1)))
        f = PowerSeries.from_ints(p, [c * p ** mu for c in coeffs], N)
        rep = weierstrass_prep(f)
        assert (rep.mu, rep.lam) == (mu, lam)
        recon = (rep.distinguished * rep.unit).scale_p(rep.mu)
        check = N - rep.precision_slack - mu - 2
        if check < 1:
            continue
        for c, d in zip(recon.coeffs, f.coeffs):
            assert c.congruent(d, check)


def brute_force_zero_count(f, p, m, M):
    """Count discs of p*(Z/p^m) whose lift to precision M (Newton) hits a zero.

    Counts each simple root of f in pZ_p once, provided the roots are
    separated modulo p^m.  Independent of the Weierstrass factorization.
    """
    count = 0
    coeffs = [c.value for c in f.coeffs]
    mod = p ** M
    for t in range(0, p ** m, p):
        x = t
        root = None
        for _ in range(M + 2):
            fx = sum(c * pow(x, i, mod) for i, c in enumerate(coeffs)) % mod
            if fx == 0:
                root = x
                break
            dfx = sum(i * c * pow(x, i - 1, mod)
                      for i, c in enumerate(coeffs) if i) % mod
            if dfx % p == 0:
                break
            x = (x - fx * pow(dfx, -1, mod)) % mod
        if root is not None and root % p == 0 and (root - t) % p ** m == 0:
            count += 1
    return count


def test_weierstrass_lambda_counts_small_disc_zeros():
    # separable cases: distinct roots in pZ_p separated mod p^3, unit cofactor
    p, m, M, N = 3, 3, 12, 14

    def poly_from_roots(roots):
        cs = [1]
        for r in roots:
            nxt = [0] * (len(cs) + 1)
            for i, c in enumerate(cs):
                nxt[i] += -r * c
                nxt[i + 1] += c
            cs = nxt
        return cs

    for roots in [[3], [3, 6], [3, 12], []]:
        cs = poly_from_roots(roots)
        cs = cs + [0] * (6 - len(cs))
        f = PowerSeries.from_ints(p, cs, N)
        rep = weierstrass_prep(f)
        assert rep.lam == len(roots)
        assert rep.lam == brute_force_zero_count(f, p, m, M)


def test_weierstrass_rejects_zero_series():
    f = PowerSeries.from_ints(3, [0, 0, 0], 5)
    with pytest.raises(PrecisionExhausted):
        weierstrass_prep(f)
