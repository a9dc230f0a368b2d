"""Pure dominant weights and finite-dimensional coefficient representations.

The representation V of highest weight nu for GL_m is realized inside the
functions on the big cell: the generator

    f0(g) = prod_k (leading principal k x k minor of g)^(nu_k - nu_{k+1})
            * det(g)^(nu_m)

satisfies f0(lower_triangular * g) = nu(lower) * f0(g), and V is the span of
its right translates g -> f0(g*h).  Elements are stored as coefficient
vectors over a fixed frame of translates; group actions and evaluations are
then exact rational linear algebra.  The block-parabolic picture (functions
on the n x n block of the upper unipotent, valued in the Levi representation)
is recovered by evaluation, which is how the branching vectors are produced.

Rank n = 1 and n = 2 are instantiated at runtime; the interfaces are
rank-generic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction


class NotCritical(ValueError):
    """Infinity type outside the critical box."""


class TooLarge(ValueError):
    """Representation dimension exceeds the supported budget."""


DIM_BUDGET = 10 ** 4


# ----------------------------------------------------------------------
# Weights
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Weight:
    """Algebraic weight for restriction-of-scalars GL_{2n}.

    embeddings: ordered labels; conj pairs each label with its conjugate
    (a label may be self-paired, i.e. real).  components maps each label
    to a 2n-tuple of integers.
    """

    embeddings: tuple
    conj: dict
    components: dict

    @classmethod
    def rational(cls, *lam):
        """Weight for F = Q (one real embedding)."""
        return cls(("s",), {"s": "s"}, {"s": tuple(lam)})

    @classmethod
    def imag_quadratic(cls, lam_sigma, lam_csigma):
        return cls(("s", "c"), {"s": "c", "c": "s"},
                   {"s": tuple(lam_sigma), "c": tuple(lam_csigma)})

    @property
    def two_n(self):
        return len(next(iter(self.components.values())))

    @property
    def n(self):
        return self.two_n // 2

    def is_dominant(self):
        return all(all(c[i] >= c[i + 1] for i in range(len(c) - 1))
                   for c in self.components.values())

    def component(self, sigma=None):
        if sigma is None:
            sigma = self.embeddings[0]
        return self.components[sigma]


@dataclass(frozen=True)
class PurityResult:
    pure: bool
    w: int | None
    w_sigma: dict | None
    witness: tuple | None  # violating (sigma, i) when impure

    def __bool__(self):
        return self.pure


def is_pure(weight):
    """Check the purity relations; returns the weight w or a violating (sigma, i).

    The defining display in the source text equates the two sides with w;
    as discussed in the docs we implement the additive reading
    lam_{sigma,i} + lam_{c sigma, 2n+1-i} = w, consistent with the
    per-embedding relation lam_{sigma,i} + lam_{sigma,2n+1-i} = w_sigma.
    """
    if not weight.is_dominant():
        raise ValueError("purity is only defined for dominant weights")
    m = weight.two_n
    # per-embedding purity weights
    w_sigma = {}
    for s in weight.embeddings:
        lam = weight.components[s]
        vals = {lam[i] + lam[m - 1 - i] for i in range(m)}
        if len(vals) != 1:
            i = next(i for i in range(m)
                     if lam[i] + lam[m - 1 - i] != lam[0] + lam[m - 1])
            return PurityResult(False, None, None, (s, i))
        w_sigma[s] = vals.pop()
    # cross-conjugate purity: lam_{sigma,i} + lam_{c sigma,2n+1-i} = w
    w_candidates = set()
    for s in weight.embeddings:
        c = weight.conj[s]
        lam, lamc = weight.components[s], weight.components[c]
        vals = {lam[i] + lamc[m - 1 - i] for i in range(m)}
        if len(vals) != 1:
            i = next(i for i in range(m)
                     if lam[i] + lamc[m - 1 - i] != lam[0] + lamc[m - 1])
            return PurityResult(False, None, None, (s, i))
        w_candidates.add(vals.pop())
    if len(w_candidates) != 1:
        s = weight.embeddings[0]
        return PurityResult(False, None, None, (s, 0))
    w = w_candidates.pop()
    # w_sigma + w_{c sigma} = 2w
    for s in weight.embeddings:
        if w_sigma[s] + w_sigma[weight.conj[s]] != 2 * w:
            return PurityResult(False, None, None, (s, -1))
    return PurityResult(True, w, w_sigma, None)


def critical_range(weight):
    """All infinity types j with -lam_{sigma,n} <= j_sigma <= -lam_{sigma,n+1}.

    Returns a list of tuples aligned with weight.embeddings.
    """
    pr = is_pure(weight)
    if not pr:
        raise ValueError("critical range needs a pure dominant weight")
    n = weight.n
    ranges = []
    for s in weight.embeddings:
        lam = weight.components[s]
        lo, hi = -lam[n - 1], -lam[n]
        ranges.append(range(lo, hi + 1))
    out = [()]
    for rg in ranges:
        out = [t + (j,) for t in out for j in rg]
    return out


def weyl_dimension(lam):
    """Dimension of the GL_m representation of highest weight lam."""
    m = len(lam)
    num, den = 1, 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


# ----------------------------------------------------------------------
# Scalar highest-weight models
# ----------------------------------------------------------------------

def _minor(mat, k):
    """Leading principal k x k minor (Fraction arithmetic, small k)."""
    if k == 0:
        return Fraction(1)
    rows = [r[:k] for r in mat[:k]]
    return _det(rows)


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = Fraction(0)
    for j in range(n):
        if rows[0][j]:
            sub = [r[:j] + r[j + 1:] for r in rows[1:]]
            acc += (-1) ** j * rows[0][j] * _det(sub)
    return acc


def _mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def _mat_inv(a):
    n = len(a)
    aug = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = Fraction(1) / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _rank_profile(mat):
    """Indices of a maximal independent set of rows and of columns."""
    rows = [list(r) for r in mat]
    nrow, ncol = len(rows), len(rows[0]) if rows else 0
    piv_rows, piv_cols = [], []
    r = 0
    order = list(range(nrow))
    for c in range(ncol):
        piv = next((i for i in range(r, nrow) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        order[r], order[piv] = order[piv], order[r]
        piv_rows.append(order[r])
        piv_cols.append(c)
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrow):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == nrow:
            break
    return piv_rows, piv_cols


def _nullspace(mat):
    """Basis of the right kernel of a Fraction matrix."""
    rows = [list(r) for r in mat]
    nrow, ncol = len(rows), len(rows[0]) if rows else 0
    pivots = {}
    r = 0
    for c in range(ncol):
        piv = next((i for i in range(r, nrow) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrow):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots[c] = r
        r += 1
        if r == nrow:
            break
    free = [c for c in range(ncol) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncol
        v[fc] = Fraction(1)
        for c, rr in pivots.items():
            v[c] = -rows[rr][fc]
        basis.append(v)
    return basis


class ScalarModel:
    """Highest-weight GL_m module as a span of translates of f0."""

    def __init__(self, lam, seed=0):
        self.lam = tuple(lam)
        self.m = len(lam)
        self.dim = weyl_dimension(lam)
        if self.dim > DIM_BUDGET:
            raise TooLarge("dim V = %d exceeds budget" % self.dim)
        self._build_frame(seed)

    # f0 and evaluation ------------------------------------------------

    def f0(self, mat):
        val = Fraction(1)
        for k in range(1, self.m):
            e = self.lam[k - 1] - self.lam[k]
            if e:
                val *= _minor(mat, k) ** e
        d = _minor(mat, self.m)
        return val * d ** self.lam[-1]

    def _rand_unipotent(self, rng):
        m = self.m
        mat = [[Fraction(1 if i == j else 0) for j in range(m)] for i in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                mat[i][j] = Fraction(rng.randint(-3, 3))
        return mat

    def _rand_group_elt(self, rng):
        # lower unipotent * upper unipotent: integral, det 1
        m = self.m
        lo = [[Fraction(1 if i == j else 0) for j in range(m)] for i in range(m)]
        for i in range(m):
            for j in range(i):
                lo[i][j] = Fraction(rng.randint(-2, 2))
        return _mat_mul(lo, self._rand_unipotent(rng))

    def _build_frame(self, seed):
        rng = random.Random(0xC0FFEE + seed)
        dim = self.dim
        for attempt in range(8):
            count = 2 * dim + 8 * (attempt + 1)
            samples = [self._rand_unipotent(rng) for _ in range(count)]
            translates = [identity(self.m)] + \
                [self._rand_group_elt(rng) for _ in range(count - 1)]
            mat = [[self.f0(_mat_mul(s, h)) for s in samples]
                   for h in translates]
            row_piv, _ = _rank_profile(mat)
            if len(row_piv) < dim:
                continue
            frame = [translates[i] for i in row_piv[:dim]]
            sub = [mat[i] for i in row_piv[:dim]]
            _, col_piv = _rank_profile(sub)
            keep = col_piv[:dim]
            self.samples = [samples[c] for c in keep]
            self.frame = frame
            F = [[self.f0(_mat_mul(s, h)) for h in frame] for s in self.samples]
            self._F_inv = _mat_inv(F)
            return
        raise RuntimeError("frame construction failed for lam=%r" % (self.lam,))

    # elements are length-dim value vectors at self.samples ------------

    def coords(self, values):
        """Frame coefficients of the element with the given sample values."""
        return [sum(self._F_inv[i][j] * values[j] for j in range(self.dim))
                for i in range(self.dim)]

    def value_at_coords(self, coords, mat):
        """Evaluate sum_i coords[i] * f0((.) h_i) at the group element mat."""
        return sum((c * self.f0(_mat_mul(mat, h))
                    for c, h in zip(coords, self.frame) if c), Fraction(0))

    def value_at(self, values, mat):
        """Evaluate the element with the given sample values at mat."""
        return self.value_at_coords(self.coords(values), mat)

    def action_matrix(self, g):
        """Matrix of the translation action f -> (x -> f(x g)) on value vectors."""
        E = [[self.f0(_mat_mul(_mat_mul(s, g), h)) for h in self.frame]
             for s in self.samples]
        EFinv = _mat_mul(E, self._F_inv)
        return EFinv

    def highest_vector_values(self):
        return [self.f0(s) for s in self.samples]


def identity(m):
    return [[Fraction(1 if i == j else 0) for j in range(m)] for i in range(m)]


def weyl_element(n):
    """Longest Weyl element of GL_n (antidiagonal 1s)."""
    return [[Fraction(1 if i + j == n - 1 else 0) for j in range(n)]
            for i in range(n)]


# ----------------------------------------------------------------------
# Block-parabolic model for GL_{2n} and branching vectors
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class RepElement:
    rep: "RepModel"
    values: tuple  # sample values in the GL_{2n} model


@dataclass(frozen=True)
class DualElement:
    rep: "RepModel"
    coords: tuple  # functional coordinates dual to the sample values

    def pair(self, f):
        return sum(a * b for a, b in zip(self.coords, f.values))


@dataclass(frozen=True)
class BranchingVector:
    j: int
    rep: "RepModel"
    coefficients: tuple  # frame coefficients in the GL_{2n} model
    element: RepElement


class RepModel:
    """V_lambda for GL_{2n} over one embedding, with its Levi structure.

    Carries the scalar GL_{2n} model, the Levi factor models of highest
    weights lam' = lam[:n] and lam'' = lam[n:], and the fixed generator
    v_lambda^H of the det^w-isotypic line of V^H restricted to the
    diagonal copy of GL_n.
    """

    def __init__(self, weight, seed=0):
        pr = is_pure(weight)
        if not pr:
            raise ValueError("RepModel needs a pure dominant weight")
        if len(weight.embeddings) != 1:
            raise TooLarge("only single-embedding models are instantiated")
        self.weight = weight
        self.w = pr.w
        lam = weight.component()
        self.n = weight.n
        self.lam = lam
        dim = weyl_dimension(lam)
        if dim > DIM_BUDGET:
            raise TooLarge("dim V = %d exceeds budget 10^4" % dim)
        self.G = ScalarModel(lam, seed=seed)
        # resample G so every sample has an invertible upper-right block
        self._ensure_corner_invertible(seed)
        self.H1 = ScalarModel(lam[:self.n], seed=seed + 1)
        self.H2 = ScalarModel(lam[self.n:], seed=seed + 2)
        self._vH = self._solve_levi_line(seed)

    @property
    def dim(self):
        return self.G.dim

    @property
    def basis(self):
        return self.G.frame

    # -- plumbing -------------------------------------------------------

    def _ensure_corner_invertible(self, seed):
        n = self.n
        rng = random.Random(0xFACADE + seed)
        samples = []
        for _ in range(200 * self.G.dim + 200):
            s = self.G._rand_unipotent(rng)
            X = [row[n:] for row in s[:n]]
            if _det(X) == 0:
                continue
            samples.append(s)
            if len(samples) < self.G.dim:
                continue
            F = [[self.G.f0(_mat_mul(t, h)) for h in self.G.frame]
                 for t in samples]
            try:
                self.G._F_inv = _mat_inv(F)
            except ValueError:
                samples.pop(rng.randrange(len(samples)))
                continue
            self.G.samples = samples
            return
        raise RuntimeError("could not find generic samples")

    def _solve_levi_line(self, seed):
        """Generator of the det^w line of V^H under the diagonal GL_n."""
        rng = random.Random(0xBEEF + seed)
        d1, d2 = self.H1.dim, self.H2.dim
        rows = []
        for _ in range(4):
            g = self.H1._rand_group_elt(rng)
            dg = _det(g) ** self.w
            A1 = self.H1.action_matrix(g)
            A2 = self.H2.action_matrix(g)
            for i in range(d1):
                for j in range(d2):
                    row = [Fraction(0)] * (d1 * d2)
                    for a in range(d1):
                        for b in range(d2):
                            row[a * d2 + b] += A1[i][a] * A2[j][b]
                    row[i * d2 + j] -= dg
                    rows.append(row)
        ker = _nullspace(rows)
        if len(ker) != 1:
            raise RuntimeError("Levi line has dimension %d, expected 1" % len(ker))
        v = ker[0]
        lead = next(x for x in v if x != 0)
        return [x / lead for x in v]  # coordinate 1 at the first weight-basis slot

    def levi_vector_value(self, h1, h2):
        """Value of v_lambda^H at the point (h1, h2) of the Levi."""
        val = Fraction(0)
        C = self._vH
        d2 = self.H2.dim
        # move to frame coordinates factorwise
        coords = _mat_mul(self.H1._F_inv,
                          _mat_mul([[C[a * d2 + b] for b in range(d2)]
                                    for a in range(self.H1.dim)],
                                   _transpose(self.H2._F_inv)))
        for a, ha in enumerate(self.H1.frame):
            row1 = self.H1.f0(_mat_mul(h1, ha))
            if all(coords[a][b] == 0 for b in range(d2)):
                continue
            for b, hb in enumerate(self.H2.frame):
                if coords[a][b]:
                    val += coords[a][b] * row1 * self.H2.f0(_mat_mul(h2, hb))
        return val

    # -- spec operations --------------------------------------------------

    def branching_vector(self, j):
        """The unique v_j in V_lambda with the prescribed unipotent-cell values."""
        n = self.n
        box = critical_range(self.weight)
        if (j,) not in box:
            raise NotCritical("j = %r outside the critical box" % (j,))
        wn = weyl_element(n)
        vals = [self._vj_value(s, j, wn) for s in self.G.samples]
        coords = self.G.coords(vals)
        # verify against fresh generic points; failure means no such element
        rng = random.Random(0xD1CE)
        checked = 0
        while checked < self.dim // 2 + 4:
            s = self.G._rand_unipotent(rng)
            X = [row[n:] for row in s[:n]]
            if _det(X) == 0:
                continue
            checked += 1
            if self.G.value_at_coords(coords, s) != self._vj_value(s, j, wn):
                raise NotCritical("prescribed values do not extend to V_lambda")
        vals_t = tuple(vals)
        return BranchingVector(j, self, tuple(coords), RepElement(self, vals_t))

    def _vj_value(self, s, j, wn):
        n = self.n
        N1 = [row[:n] for row in s[:n]]
        Xt = [row[n:] for row in s[:n]]
        N2 = [row[n:] for row in s[n:]]
        X = _mat_mul(_mat_inv(N1), Xt)
        det_wnX = _det(_mat_mul(wn, X))
        if det_wnX == 0:
            raise ZeroDivisionError("sample not in the open cell")
        h1 = _mat_mul(N1, X)
        return det_wnX ** j * self.levi_vector_value(h1, N2)

    def hom_space_dim(self, j, generators=6, seed=0):
        """dim Hom_H(V^dual, det_1^j det_2^(-w-j)) by exact linear algebra.

        Equals the dimension of the (-j, w+j)-eigenspace of the Levi
        action on V_lambda, computed from sampled H-generators.
        """
        if self.dim > DIM_BUDGET:
            raise TooLarge("dimension budget exceeded")
        rng = random.Random(0xAB1E + seed)
        dim = self.dim
        rows = []
        for _ in range(generators):
            g1 = self.H1._rand_group_elt(rng)
            g2 = self.H2._rand_group_elt(rng)
            if rng.random() < 0.5:
                g1[0] = [2 * x for x in g1[0]]  # non-unimodular Levi elements
            A = self.G.action_matrix(block_diag(g1, g2))
            chi = _det(g1) ** (-j) * _det(g2) ** (self.w + j)
            for i in range(dim):
                row = list(A[i])
                row[i] -= chi
                rows.append(row)
        return len(_nullspace(rows))

    # -- actions ----------------------------------------------------------

    def lam_of_tp(self, p):
        return Fraction(p) ** sum(self.lam[:self.n])

    def t_p_matrix(self, p):
        n = self.n
        return [[Fraction(p if (i == j and i < n) else (1 if i == j else 0))
                 for j in range(2 * n)] for i in range(2 * n)]

    def _conj_by_t(self, s, p, inverse=False):
        # t^-1 s t scales the upper-right block by 1/p (or by p when inverse)
        n = self.n
        f = Fraction(1, p) if not inverse else Fraction(p)
        out = [list(r) for r in s]
        for i in range(n):
            for jj in range(n, 2 * n):
                out[i][jj] *= f
        return out

    def is_parahoric(self, g, p):
        n = self.n
        det = _det(g)
        if det == 0 or any(x.denominator % p == 0 for row in g for x in row):
            return False
        if det.numerator % p == 0:
            return False
        for i in range(n, 2 * n):
            for jj in range(n):
                if (g[i][jj].numerator % p) != 0:
                    return False
        return True

    def act(self, g, x, mode="dot", p=None):
        """Action of g (matrix or 't_p') on RepElement / DualElement."""
        if isinstance(g, str) and g == "t_p":
            g = self.t_p_matrix(p)
        if isinstance(x, RepElement):
            if mode == "dot":
                A = self.G.action_matrix(g)
                return RepElement(self, tuple(_mat_vec(A, list(x.values))))
            if mode == "star":
                if p is not None and g == self.t_p_matrix(p):
                    vals = [self.G.value_at(list(x.values),
                                            self._conj_by_t(s, p))
                            for s in self.G.samples]
                    return RepElement(self, tuple(vals))
                if p is None or not self.is_parahoric(g, p):
                    raise ValueError("star action needs a parahoric element or t_p")
                return self.act(g, x, "dot")
            raise ValueError("mode must be dot or star")
        if isinstance(x, DualElement):
            if mode == "dot":
                A = self.G.action_matrix(_mat_inv(g))
                return DualElement(self, tuple(_mat_vec(_transpose(A),
                                                        list(x.coords))))
            if mode == "star":
                if p is not None and g == self.t_p_matrix(p):
                    # (t * mu)(f) = mu(t^-1 * f), t^-1 * f = f(t (.) t^-1)
                    S = [[None] * self.dim for _ in range(self.dim)]
                    cols = []
                    for jcol in range(self.dim):
                        vals = [Fraction(1 if i == jcol else 0)
                                for i in range(self.dim)]
                        new = [self.G.value_at(vals,
                                               self._conj_by_t(s, p, inverse=True))
                               for s in self.G.samples]
                        cols.append(new)
                    St = [[cols[jc][ic] for jc in range(self.dim)]
                          for ic in range(self.dim)]
                    return DualElement(self, tuple(_mat_vec(_transpose(St),
                                                            list(x.coords))))
                if p is None or not self.is_parahoric(g, p):
                    raise ValueError("star action needs a parahoric element or t_p")
                return self.act(g, x, "dot")
        raise TypeError("unsupported element")


def block_diag(a, b):
    n, m = len(a), len(b)
    out = [[Fraction(0)] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            out[i][j] = a[i][j]
    for i in range(m):
        for j in range(m):
            out[n + i][n + j] = b[i][j]
    return out


def _transpose(a):
    return [[a[i][j] for i in range(len(a))] for j in range(len(a[0]))]


def _mat_vec(a, v):
    return [sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a))]


def branching_vector(rep, j):
    return rep.branching_vector(j)


def hom_space_dim(rep, j, **kw):
    return rep.hom_space_dim(j, **kw)


def act(g, x, mode="dot", p=None):
    return x.rep.act(g, x, mode=mode, p=p)
