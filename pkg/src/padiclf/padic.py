"""Capped-precision p-adic arithmetic.

Three layers:

  * PadicInt      -- an element of Z_p known modulo p^N (absolute precision
                     model: precision never exceeds what the inputs justify).
  * CycloPadic    -- an element of Z_p[zeta_{p^r}][1/p], stored as a coefficient
                     vector modulo the p^r-th cyclotomic polynomial together
                     with a global power-of-p shift.  Level r = 0 recovers
                     PadicInt (up to the shift).
  * PowerSeries   -- one-variable power series over PadicInt known mod T^M,
                     with Weierstrass preparation.

Everything here is immutable and pure; all operations are safe for
concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass


class PrecisionExhausted(ArithmeticError):
    """Raised when an operation needs digits that the inputs do not carry."""


@dataclass(frozen=True)
class InfinityAtPrecision:
    """Result of valuation() on a value indistinguishable from 0 mod p^prec."""

    prec: int

    def __ge__(self, other):
        return True

    def __gt__(self, other):
        return not isinstance(other, InfinityAtPrecision)


def _val_int(a, p):
    # p-adic valuation of a nonzero integer
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


class PadicInt:
    """Integer residue known modulo p^prec, 0 <= value < p^prec."""

    __slots__ = ("p", "prec", "value")

    def __init__(self, p, value, prec):
        if prec < 0:
            raise ValueError("negative precision")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "prec", prec)
        if value == 0 or prec == 0:
            object.__setattr__(self, "value", 0)
        else:
            object.__setattr__(self, "value", value % (p ** prec))

    def __setattr__(self, *a):
        raise AttributeError("PadicInt is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, p, num, den, prec):
        """num/den as an element of Z_p; den must be a p-adic unit."""
        if den % p == 0:
            raise ValueError("denominator not a p-adic unit")
        m = p ** prec
        return cls(p, num * pow(den, -1, m), prec)

    @classmethod
    def zero(cls, p, prec):
        return cls(p, 0, prec)

    @classmethod
    def one(cls, p, prec):
        return cls(p, 1, prec)

    # -- basic queries ------------------------------------------------

    def is_zero(self):
        """True when indistinguishable from 0 at the stated precision."""
        return self.value == 0

    def valuation(self):
        if self.value == 0:
            return InfinityAtPrecision(self.prec)
        return _val_int(self.value, self.p)

    def lower_valuation(self):
        """Valuation as an integer lower bound (prec when value is 0)."""
        v = self.valuation()
        return v.prec if isinstance(v, InfinityAtPrecision) else v

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PadicInt):
            if other.p != self.p:
                raise ValueError("mixed primes")
            return other
        if isinstance(other, int):
            return PadicInt(self.p, other, self.prec)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = min(self.prec, o.prec)
        return PadicInt(self.p, self.value + o.value, n)

    __radd__ = __add__

    def __neg__(self):
        return PadicInt(self.p, -self.value, self.prec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        # abs precision of a product: min over both factors of
        # (precision of one) + (valuation lower bound of the other)
        n = min(self.prec + o.lower_valuation(), o.prec + self.lower_valuation())
        n = min(n, self.prec + o.prec)  # both zero-at-precision
        return PadicInt(self.p, self.value * o.value, n)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.unit_inverse() ** (-e)
        out = PadicInt(self.p, 1, self.prec)
        b = self
        while e:
            if e & 1:
                out = out * b
            b = b * b
            e >>= 1
        return out

    def unit_inverse(self):
        if self.value % self.p == 0:
            raise ZeroDivisionError("not a p-adic unit")
        return PadicInt(self.p, pow(self.value, -1, self.p ** self.prec), self.prec)

    def divide_exact(self, k):
        """Divide by p^k; requires p^k | value (else PrecisionExhausted)."""
        if k == 0:
            return self
        if self.prec < k:
            raise PrecisionExhausted("dividing by p^%d leaves no digits" % k)
        pk = self.p ** k
        if self.value % pk != 0:
            raise PrecisionExhausted("value not divisible by p^%d" % k)
        return PadicInt(self.p, self.value // pk, self.prec - k)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        v = o.lower_valuation()
        if o.is_zero():
            raise ZeroDivisionError("division by 0 at precision")
        if v == 0:
            return self * o.unit_inverse()
        return self.divide_exact(v) * o.divide_exact(v).unit_inverse()

    # -- comparisons ----------------------------------------------------

    def congruent(self, other, k=None):
        """Equality modulo p^min(precisions, k); never asserts beyond joint precision."""
        o = self._coerce(other)
        n = min(self.prec, o.prec)
        if k is not None:
            if k > n:
                raise PrecisionExhausted(
                    "joint precision %d below requested modulus p^%d" % (n, k))
            n = k
        return (self.value - o.value) % (self.p ** n) == 0

    def __eq__(self, other):
        try:
            return self.congruent(other)
        except (ValueError, TypeError):
            return NotImplemented

    def __hash__(self):
        raise TypeError("PadicInt compares at joint precision; not hashable")

    def at_precision(self, n):
        """Truncate (never extend) to absolute precision n."""
        if n > self.prec:
            raise PrecisionExhausted("cannot raise precision %d -> %d" % (self.prec, n))
        return PadicInt(self.p, self.value, n)

    def __repr__(self):
        return "%d + O(%d^%d)" % (self.value, self.p, self.prec)


def valuation(x):
    """v_p of a PadicInt; InfinityAtPrecision(N) when x = 0 mod p^N."""
    if x.prec < 1:
        raise ValueError("need at least one digit of precision")
    return x.valuation()


def teichmuller(a, p, prec):
    """The unique (p-1)-th root of unity congruent to a mod p, mod p^prec."""
    if a % p == 0:
        raise ValueError("Teichmuller lift needs a unit residue")
    m = p ** prec
    # a^(p^(prec-1)) is fixed by x -> x^p mod p^prec, hence the lift
    return PadicInt(p, pow(a % m, p ** (prec - 1), m), prec)


# ----------------------------------------------------------------------
# Cyclotomic layer: Z_p[zeta_{p^r}][1/p]
# ----------------------------------------------------------------------

def _cyclo_degree(p, r):
    return 1 if r == 0 else (p - 1) * p ** (r - 1)


def _reduce_mod_cyclo(coeffs, p, r, modulus):
    """Reduce a coefficient list (powers of X) mod Phi_{p^r}(X) and the integer modulus.

    Phi_{p^r}(X) = sum_{i<p} X^{i p^(r-1)}, so
    X^{d} with d >= deg is rewritten via X^{(p-1)p^(r-1)} = -sum_{i<p-1} X^{i p^(r-1)}.
    """
    if r == 0:
        return [sum(coeffs) % modulus]
    deg = _cyclo_degree(p, r)
    q = p ** (r - 1)
    out = list(coeffs) + [0] * max(0, deg - len(coeffs))
    # highest power possibly present: p^r - 1 (from products); peel down
    i = len(out) - 1
    while i >= deg:
        c = out[i]
        if c:
            out[i] = 0
            for j in range(p - 1):
                out[i - deg + j * q] -= c
        i -= 1
    return [c % modulus for c in out[:deg]]


class CycloPadic:
    """p^shift * sum_i coeffs[i] * zeta^i with zeta a primitive p^r-th root of unity.

    Coefficients are plain integers known modulo p^prec (shared absolute
    precision for the vector); the element itself is known modulo
    p^(shift+prec) times the coefficient lattice.
    """

    __slots__ = ("p", "r", "coeffs", "prec", "shift")

    def __init__(self, p, r, coeffs, prec, shift=0):
        deg = _cyclo_degree(p, r)
        if prec < 0:
            raise ValueError("negative precision")
        m = p ** prec
        cs = _reduce_mod_cyclo(list(coeffs), p, r, m if prec > 0 else 1)
        cs += [0] * (deg - len(cs))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "shift", shift)

    def __setattr__(self, *a):
        raise AttributeError("CycloPadic is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_padic(cls, x, shift=0):
        return cls(x.p, 0, [x.value], x.prec, shift)

    @classmethod
    def from_int(cls, p, n, prec, r=0, shift=0):
        return cls(p, r, [n], prec, shift)

    @classmethod
    def zeta(cls, p, r, prec):
        """A fixed primitive p^r-th root of unity (the residue class of X)."""
        if r == 0:
            return cls(p, 0, [1], prec)
        return cls(p, r, [0, 1], prec)

    @classmethod
    def zeta_power(cls, p, r, k, prec):
        deg = p ** r
        k %= deg
        coeffs = [0] * (k + 1)
        coeffs[k] = 1
        return cls(p, r, coeffs, prec)

    # -- representation changes ------------------------------------------

    def embed(self, r2):
        """Inclusion Z_p[zeta_{p^r}] -> Z_p[zeta_{p^r2}], zeta -> zeta'^(p^(r2-r))."""
        if r2 < self.r:
            raise ValueError("cannot embed downward")
        if r2 == self.r:
            return self
        step = self.p ** (r2 - self.r)
        coeffs = [0] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            coeffs[i * step] = c
        return CycloPadic(self.p, r2, coeffs, self.prec, self.shift)

    def to_padic(self):
        """Back to PadicInt; requires level 0 and an integral value."""
        if self.r != 0:
            raise ValueError("nontrivial cyclotomic level")
        if self.shift < 0:
            k = -self.shift
            pk = self.p ** k
            if self.coeffs[0] % pk != 0:
                raise PrecisionExhausted("element not integral")
            return PadicInt(self.p, self.coeffs[0] // pk, self.prec - k)
        return PadicInt(self.p, self.coeffs[0] * self.p ** self.shift,
                        self.prec + self.shift)

    def normalized(self):
        """Move the common p-power content of the coefficients into the shift."""
        nz = [c for c in self.coeffs if c]
        if not nz:
            return self
        v = min(_val_int(c, self.p) for c in nz)
        v = min(v, self.prec)
        if v == 0:
            return self
        pk = self.p ** v
        return CycloPadic(self.p, self.r,
                          [c // pk for c in self.coeffs],
                          self.prec - v, self.shift + v)

    # -- queries ---------------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def lower_valuation(self):
        """Integer lower bound for v_p (via the coefficient lattice)."""
        nz = [c for c in self.coeffs if c]
        if not nz:
            return self.shift + self.prec
        return self.shift + min(_val_int(c, self.p) for c in nz)

    # -- arithmetic -------------------------------------------------------

    def _align(self, other):
        if isinstance(other, int):
            other = CycloPadic.from_int(self.p, other, self.prec + 64, 0, 0)
        elif isinstance(other, PadicInt):
            other = CycloPadic.from_padic(other)
        if not isinstance(other, CycloPadic):
            return None, None
        if other.p != self.p:
            raise ValueError("mixed primes")
        a, b = self, other
        r = max(a.r, b.r)
        a, b = a.embed(r), b.embed(r)
        if a.shift != b.shift:
            if a.shift > b.shift:
                a, b = b, a
            # now a.shift < b.shift: rescale b down to a's shift
            d = b.shift - a.shift
            pk = self.p ** d
            b = CycloPadic(b.p, b.r, [c * pk for c in b.coeffs],
                           b.prec + d, a.shift)
        return a, b

    def __add__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        n = min(a.prec, b.prec)
        return CycloPadic(a.p, a.r, [x + y for x, y in zip(a.coeffs, b.coeffs)],
                          n, a.shift)

    __radd__ = __add__

    def __neg__(self):
        return CycloPadic(self.p, self.r, [-c for c in self.coeffs],
                          self.prec, self.shift)

    def __sub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        n = min(a.prec, b.prec)
        return CycloPadic(a.p, a.r, [x - y for x, y in zip(a.coeffs, b.coeffs)],
                          n, a.shift)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = CycloPadic.from_int(self.p, other, self.prec + 64, 0, 0)
        elif isinstance(other, PadicInt):
            other = CycloPadic.from_padic(other)
        if not isinstance(other, CycloPadic):
            return NotImplemented
        r = max(self.r, other.r)
        a, b = self.embed(r), other.embed(r)
        va = a.lower_valuation() - a.shift
        vb = b.lower_valuation() - b.shift
        n = min(a.prec + vb, b.prec + va, a.prec + b.prec)
        prod = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] += x * y
        return CycloPadic(a.p, r, prod, n, a.shift + b.shift)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.unit_inverse() ** (-e)
        out = CycloPadic.from_int(self.p, 1, self.prec + 64, self.r)
        b = self
        while e:
            if e & 1:
                out = out * b
            b = b * b
            e >>= 1
        return out

    def p_shift(self, k):
        """Multiply by p^k (exact; k may be negative)."""
        return CycloPadic(self.p, self.r, self.coeffs, self.prec, self.shift + k)

    def conj(self):
        """The automorphism zeta -> zeta^(-1)."""
        if self.r == 0:
            return self
        n = self.p ** self.r
        coeffs = [0] * n
        for i, c in enumerate(self.coeffs):
            coeffs[(-i) % n] += c
        return CycloPadic(self.p, self.r, coeffs, self.prec, self.shift)

    def unit_inverse(self):
        """Inverse of a unit of Z_p[zeta] (coefficient content must be 0)."""
        x = self.normalized()
        deg = _cyclo_degree(x.p, x.r)
        if x.prec == 0:
            raise PrecisionExhausted("no digits left to invert")
        m = x.p ** x.prec
        # Gaussian elimination on the multiplication-by-x matrix over Z/p^prec
        cols = []
        for j in range(deg):
            col = _reduce_mod_cyclo(
                [0] * j + list(x.coeffs), x.p, x.r, m)
            cols.append(col)
        aug = [[cols[j][i] for j in range(deg)] + [1 if i == 0 else 0]
               for i in range(deg)]
        n = deg
        for c in range(n):
            piv = next((r2 for r2 in range(c, n) if aug[r2][c] % x.p != 0), None)
            if piv is None:
                raise ZeroDivisionError("not a unit of Z_p[zeta]")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = pow(aug[c][c], -1, m)
            aug[c] = [(v * inv) % m for v in aug[c]]
            for r2 in range(n):
                if r2 != c and aug[r2][c]:
                    f = aug[r2][c]
                    aug[r2] = [(v - f * w) % m for v, w in zip(aug[r2], aug[c])]
        sol = [aug[i][n] for i in range(n)]
        return CycloPadic(x.p, x.r, sol, x.prec, -x.shift)

    def __truediv__(self, other):
        if isinstance(other, (int, PadicInt)):
            other = (CycloPadic.from_int(self.p, other, self.prec)
                     if isinstance(other, int) else CycloPadic.from_padic(other))
        return self * other.unit_inverse()

    # -- comparison ---------------------------------------------------------

    def congruent(self, other, k=None):
        """Agreement modulo p^k (k <= joint precision, in the shifted lattice)."""
        a, b = self._align(other)
        d = a - b
        n = d.prec
        if k is not None:
            kk = k - d.shift
            if kk > n:
                raise PrecisionExhausted(
                    "joint precision p^%d below requested p^%d" % (n + d.shift, k))
            if kk <= 0:
                return True
            n = kk
        m = d.p ** n
        return all(c % m == 0 for c in d.coeffs)

    def joint_precision(self, other):
        """Largest k such that congruent(other, k) is meaningful."""
        a, b = self._align(other)
        return min(a.prec, b.prec) + a.shift

    def __eq__(self, other):
        try:
            return self.congruent(other)
        except (ValueError, TypeError):
            return NotImplemented

    def __hash__(self):
        raise TypeError("CycloPadic compares at joint precision; not hashable")

    def __repr__(self):
        if self.r == 0:
            return "%d*%d^%d + O(%d^%d)" % (
                self.coeffs[0], self.p, self.shift, self.p, self.prec + self.shift)
        nz = {i: c for i, c in enumerate(self.coeffs) if c}
        return "Cyclo(p=%d, r=%d, shift=%d, %s + O(p^%d))" % (
            self.p, self.r, self.shift, nz, self.prec)


# ----------------------------------------------------------------------
# Power series and Weierstrass preparation
# ----------------------------------------------------------------------

class PowerSeries:
    """sum coeffs[i] T^i known mod T^M; each coefficient a PadicInt."""

    __slots__ = ("p", "coeffs", "t_prec")

    def __init__(self, p, coeffs, t_prec=None):
        coeffs = list(coeffs)
        if t_prec is None:
            t_prec = len(coeffs)
        if len(coeffs) != t_prec:
            raise ValueError("need exactly t_prec coefficients")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "t_prec", t_prec)

    def __setattr__(self, *a):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def from_ints(cls, p, ints, prec):
        return cls(p, [PadicInt(p, c, prec) for c in ints])

    def __add__(self, other):
        m = min(self.t_prec, other.t_prec)
        return PowerSeries(self.p, [self.coeffs[i] + other.coeffs[i]
                                    for i in range(m)], m)

    def __sub__(self, other):
        m = min(self.t_prec, other.t_prec)
        return PowerSeries(self.p, [self.coeffs[i] - other.coeffs[i]
                                    for i in range(m)], m)

    def __mul__(self, other):
        if isinstance(other, PadicInt):
            return PowerSeries(self.p, [c * other for c in self.coeffs])
        m = min(self.t_prec, other.t_prec)
        out = [PadicInt.zero(self.p, 10 ** 9)] * m
        for i, a in enumerate(self.coeffs[:m]):
            for j, b in enumerate(other.coeffs[:m - i]):
                out[i + j] = out[i + j] + a * b
        return PowerSeries(self.p, out, m)

    def scale_p(self, k):
        pk = PadicInt(self.p, self.p ** k, min(c.prec for c in self.coeffs) + k)
        return PowerSeries(self.p, [c * pk for c in self.coeffs])

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def unit_inverse(self):
        """Inverse of a series with unit constant term, mod T^M."""
        c0 = self.coeffs[0]
        inv0 = c0.unit_inverse()
        out = [inv0]
        for m in range(1, self.t_prec):
            acc = PadicInt.zero(self.p, c0.prec)
            for i in range(1, m + 1):
                acc = acc + self.coeffs[i] * out[m - i]
            out.append(-(inv0 * acc))
        return PowerSeries(self.p, out)

    def evaluate(self, x):
        """Value at a CycloPadic point x (Horner); caller bounds the tail."""
        if not isinstance(x, CycloPadic):
            x = CycloPadic.from_padic(x)
        big = max(c.prec for c in self.coeffs) + x.prec + 8
        acc = CycloPadic.from_int(x.p, 0, big, x.r)
        for c in reversed(self.coeffs):
            acc = acc * x + CycloPadic.from_padic(c)
        return acc

    def __repr__(self):
        return "PowerSeries(p=%d, %s)" % (
            self.p, ", ".join("%d*T^%d" % (c.value, i)
                              for i, c in enumerate(self.coeffs) if not c.is_zero()))


@dataclass(frozen=True)
class WeierstrassReport:
    mu: int
    lam: int
    distinguished: PowerSeries
    unit: PowerSeries
    division_rounds: int
    precision_slack: int


def weierstrass_prep(f):
    """Factor f = p^mu * P * U with P distinguished of degree lam, U a unit.

    Returns a WeierstrassReport.  P is monic of degree lam with all lower
    coefficients divisible by p; the reconstruction holds modulo
    (p^(N - slack), T^M) where slack = lam * division_rounds.
    """
    p = f.p
    M = f.t_prec
    if f.is_zero():
        raise PrecisionExhausted("series identically 0 at working precision")
    vals = [c.lower_valuation() for c in f.coeffs]
    mu = min(v for c, v in zip(f.coeffs, vals) if not c.is_zero())
    g = PowerSeries(p, [c.divide_exact(mu) for c in f.coeffs])
    gvals = [c.lower_valuation() for c in g.coeffs]
    lam = next((i for i, (c, v) in enumerate(zip(g.coeffs, gvals))
                if not c.is_zero() and v == 0), None)
    if lam is None:
        raise PrecisionExhausted("no unit coefficient after removing p-content")

    # Weierstrass division of T^lam by g: T^lam = q*g + r, deg r < lam.
    # Iteratively: q_{k+1} = (T^lam - q_k * A) quo-by (T^lam B) with
    # g = A + T^lam * B, A = low part (coeffs in pZ_p), B unit series.
    prec0 = min(c.prec for c in g.coeffs)
    A = PowerSeries(p, list(g.coeffs[:lam]) +
                    [PadicInt.zero(p, prec0)] * (M - lam))
    B = PowerSeries(p, list(g.coeffs[lam:]) + [PadicInt.zero(p, prec0)] * lam)
    Binv = B.unit_inverse()

    def shift_down(s, k):
        # divide by T^k, dropping low terms (caller guarantees exactness usage)
        return PowerSeries(p, list(s.coeffs[k:]) + [PadicInt.zero(p, prec0)] * k)

    t_lam = PowerSeries(p, [PadicInt(p, 1 if i == lam else 0, prec0)
                            for i in range(M)])
    q = Binv
    rounds = 0
    while True:
        rounds += 1
        num = t_lam - q * A
        q_next = shift_down(num, lam) * Binv
        delta = q_next - q
        q = q_next
        if delta.is_zero() or rounds > prec0 + 2:
            break
    r = t_lam - q * g
    # distinguished polynomial P = T^lam - r
    P_coeffs = [-r.coeffs[i] for i in range(lam)]
    P = PowerSeries(p, P_coeffs + [PadicInt(p, 1 if i == 0 else 0, prec0)
                                   for i in range(M - lam)])
    unit = q.unit_inverse()
    slack = lam * rounds
    return WeierstrassReport(mu=mu, lam=lam, distinguished=P, unit=unit,
                             division_rounds=rounds, precision_slack=slack)
