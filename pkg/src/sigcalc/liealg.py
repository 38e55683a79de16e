"""Exact matrix model of su(n) over the Gaussian rationals.

Indices in public helpers (``root_space``, ``E``) are 1-based to match the
usual E_jk notation; matrices themselves are 0-based tuples of rows.

The reference ordered basis of su(n) is

    i(E_11 - E_nn), ..., i(E_{n-1,n-1} - E_nn),
    then for each j < k (lexicographic): E_jk - E_kj, i(E_jk + E_kj)

and the coordinates of a skew-hermitian traceless X in it are simply
``Im X_mm`` (m < n), then ``Re X_jk, Im X_jk``.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .errors import NotSameSpan
from .linalg import det, nullspace, rank, rref


class GaussianRational:
    """Exact a + bi with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(x, 0)

    def __add__(self, o):
        o = GaussianRational.coerce(o)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, o):
        o = GaussianRational.coerce(o)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return GaussianRational.coerce(o) - self

    def __mul__(self, o):
        o = GaussianRational.coerce(o)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = GaussianRational.coerce(o)
        n = o.re * o.re + o.im * o.im
        return self * GaussianRational(o.re / n, -o.im / n)

    def __pow__(self, k):
        if k < 0:
            return (GaussianRational(1) / self) ** (-k)
        out, base = GaussianRational(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, o):
        try:
            o = GaussianRational.coerce(o)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i)"


GQ = GaussianRational
ZERO = GQ(0)
ONE = GQ(1)
I = GQ(0, 1)

UNIT_TAGS = {"1": ONE, "-1": -ONE, "i": I, "-i": -I}


def unit_tag(z):
    for tag, v in UNIT_TAGS.items():
        if v == z:
            return tag
    raise ValueError(f"{z!r} is not a fourth root of unity")


# -- plain complex matrices -------------------------------------------------

def zeros(n):
    return [[ZERO] * n for _ in range(n)]


def freeze(m):
    return tuple(tuple(row) for row in m)


def eye(n):
    return freeze([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])


def mmul(a, b):
    n, k = len(a), len(b[0])
    out = []
    for i in range(n):
        row = a[i]
        nz = [(j, x) for j, x in enumerate(row) if x]
        out.append(tuple(sum((x * b[j][c] for j, x in nz), ZERO) for c in range(k)))
    return tuple(out)


def madd(a, b, sb=1):
    return tuple(tuple(x + y if sb == 1 else x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mscale(a, s):
    s = GQ.coerce(s)
    return tuple(tuple(x * s for x in row) for row in a)


def dagger(a):
    return tuple(tuple(a[j][i].conj() for j in range(len(a))) for i in range(len(a[0])))


def trace(a):
    return sum((a[i][i] for i in range(len(a))), ZERO)


def is_diagonal(a):
    return all(not a[i][j] for i in range(len(a)) for j in range(len(a)) if i != j)


def cdet(a):
    """Determinant by exact elimination over Q(i)."""
    m = [list(row) for row in a]
    n = len(m)
    d = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d = d * m[c][c]
        inv = ONE / m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return d


def E(n, j, k):
    """Matrix unit E_jk (1-based)."""
    m = zeros(n)
    m[j - 1][k - 1] = ONE
    return freeze(m)


# -- algebra and group elements ----------------------------------------------

@dataclass(frozen=True)
class AlgebraElement:
    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(GQ.coerce(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        n = len(m)
        for i in range(n):
            for j in range(n):
                if m[i][j] != -m[j][i].conj():
                    raise ValueError("matrix is not skew-hermitian")
        if trace(m):
            raise ValueError("matrix is not traceless")

    @property
    def n(self):
        return len(self.matrix)

    def __add__(self, o):
        return AlgebraElement(madd(self.matrix, o.matrix))

    def __sub__(self, o):
        return AlgebraElement(madd(self.matrix, o.matrix, -1))

    def __neg__(self):
        return AlgebraElement(mscale(self.matrix, -1))

    def scale(self, q):
        return AlgebraElement(mscale(self.matrix, GQ(Fraction(q))))

    def is_zero(self):
        return not any(x for row in self.matrix for x in row)

    def coords(self):
        """Real coordinates in the reference basis."""
        m, n = self.matrix, self.n
        out = [m[i][i].im for i in range(n - 1)]
        for j, k in combinations(range(n), 2):
            out += [m[j][k].re, m[j][k].im]
        return out

    @classmethod
    def from_coords(cls, n, coords):
        coords = [Fraction(c) for c in coords]
        m = zeros(n)
        for i in range(n - 1):
            m[i][i] = GQ(0, coords[i])
        m[n - 1][n - 1] = GQ(0, -sum(coords[: n - 1], Fraction(0)))
        pos = n - 1
        for j, k in combinations(range(n), 2):
            a, b = coords[pos], coords[pos + 1]
            m[j][k] = GQ(a, b)
            m[k][j] = GQ(-a, b)
            pos += 2
        return cls(freeze(m))

    @classmethod
    def diag(cls, values):
        """``i * diag(values)`` for rational ``values`` summing to zero."""
        n = len(values)
        m = zeros(n)
        for idx, v in enumerate(values):
            m[idx][idx] = GQ(0, Fraction(v))
        return cls(freeze(m))

    def diagonal_values(self):
        """``(1/i) * diagonal`` as rationals, for diagonal elements."""
        return [self.matrix[i][i].im for i in range(self.n)]

    def __repr__(self):
        return f"AlgebraElement({self.matrix!r})"


def bracket(X, Y):
    return AlgebraElement(madd(mmul(X.matrix, Y.matrix), mmul(Y.matrix, X.matrix), -1))


def root_space(n, j, k):
    """Ordered basis (E_jk - E_kj, i(E_jk + E_kj)) of V_jk, 1-based, j < k."""
    a = madd(E(n, j, k), E(n, k, j), -1)
    b = mscale(madd(E(n, j, k), E(n, k, j)), I)
    return AlgebraElement(a), AlgebraElement(b)


def torus_vector(n, m):
    """i(E_mm - E_nn), 1-based m < n."""
    v = [0] * n
    v[m - 1] = 1
    v[n - 1] = -1
    return AlgebraElement.diag(v)


@dataclass(frozen=True)
class GroupElement:
    matrix: tuple
    generalized_permutation: bool = False

    def __post_init__(self):
        m = tuple(tuple(GQ.coerce(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        n = len(m)
        if mmul(dagger(m), m) != eye(n):
            raise ValueError("matrix is not unitary")
        if self.generalized_permutation:
            for row in m:
                nz = [x for x in row if x]
                if len(nz) != 1 or nz[0] not in UNIT_TAGS.values():
                    raise ValueError("not a generalized permutation matrix with entries in {±1, ±i}")
            for c in range(n):
                if sum(1 for r in range(n) if m[r][c]) != 1:
                    raise ValueError("not a generalized permutation matrix")
        if cdet(m) != ONE:
            raise ValueError("determinant is not 1")

    @property
    def n(self):
        return len(self.matrix)

    @classmethod
    def identity(cls, n):
        return cls(eye(n), True)

    @classmethod
    def from_triples(cls, n, triples):
        """Build a generalized permutation matrix from ``[row, col, tag]``
        triples (1-based, tag in {"1", "-1", "i", "-i"})."""
        m = zeros(n)
        for r, c, tag in triples:
            m[r - 1][c - 1] = UNIT_TAGS[str(tag)]
        return cls(freeze(m), True)

    def triples(self):
        out = []
        for r, row in enumerate(self.matrix):
            for c, x in enumerate(row):
                if x:
                    out.append([r + 1, c + 1, unit_tag(x)])
        return out

    def permutation(self):
        """0-based column of the nonzero entry in each row."""
        return tuple(next(c for c, x in enumerate(row) if x) for row in self.matrix)

    def inverse(self):
        return self._inverse

    @cached_property
    def _inverse(self):
        return GroupElement(dagger(self.matrix), self.generalized_permutation)

    @cached_property
    def _monomial(self):
        """(column, entry) of the nonzero entry in each row, if monomial."""
        if not self.generalized_permutation:
            return None
        return tuple(next((c, x) for c, x in enumerate(row) if x) for row in self.matrix)

    def __mul__(self, o):
        return GroupElement(mmul(self.matrix, o.matrix), self.generalized_permutation and o.generalized_permutation)

    def short(self):
        """Compact signed-permutation label, e.g. ``[+6,-1,+2]`` (row i -> column)."""
        parts = []
        for r, row in enumerate(self.matrix):
            c = next(c for c, x in enumerate(row) if x)
            tag = unit_tag(row[c])
            sign = "-" if tag.startswith("-") else "+"
            parts.append(f"{sign}{'i' if 'i' in tag else ''}{c + 1}")
        return "[" + ",".join(parts) + "]"


def adjoint(g, X):
    """Ad_g X = g X g^{-1}."""
    mono = g._monomial
    if mono is None:
        return AlgebraElement(mmul(mmul(g.matrix, X.matrix), dagger(g.matrix)))
    # (g X g^*)_rc = g_{r,s(r)} X_{s(r),s(c)} conj(g_{c,s(c)})
    x = X.matrix
    out = tuple(
        tuple(a * x[sr][sc] * b.conj() if x[sr][sc] else ZERO for sc, b in mono)
        for sr, a in mono
    )
    return AlgebraElement(out)


def frobenius(X, Y):
    """Re tr(X* Y)."""
    return sum(
        (x.re * y.re + x.im * y.im for rx, ry in zip(X.matrix, Y.matrix) for x, y in zip(rx, ry)),
        Fraction(0),
    )


# -- orientation conventions -------------------------------------------------

@dataclass(frozen=True)
class OrientationConvention:
    """Ordered basis of su(n): torus part, then root spaces V_jk (j < k).

    ``torus_order`` reorders the torus vectors i(E_mm - E_nn); ``torus_sign``
    multiplies the first one. Either changes the global orientation.
    """

    n: int
    torus_order: tuple = None
    torus_sign: int = 1

    @cached_property
    def torus_basis(self):
        order = self.torus_order or tuple(range(1, self.n))
        vecs = [torus_vector(self.n, m) for m in order]
        if self.torus_sign == -1 and vecs:
            vecs[0] = -vecs[0]
        return vecs

    @cached_property
    def rootspace_order(self):
        return [(j, k) for j, k in combinations(range(1, self.n + 1), 2)]

    @cached_property
    def basis(self):
        out = list(self.torus_basis)
        for j, k in self.rootspace_order:
            out.extend(root_space(self.n, j, k))
        return out

    def reversed(self):
        if self.n >= 3:
            order = list(self.torus_order or range(1, self.n))
            order[0], order[1] = order[1], order[0]
            return OrientationConvention(self.n, tuple(order), self.torus_sign)
        return OrientationConvention(self.n, self.torus_order, -self.torus_sign)


def standard_convention(n):
    return OrientationConvention(n)


# -- subspaces ---------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    basis: tuple
    n: int

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        if self.basis and rank([b.coords() for b in self.basis]) != len(self.basis):
            raise ValueError("basis is linearly dependent")

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, X):
        rows = [b.coords() for b in self.basis]
        return rank(rows + [X.coords()]) == len(rows)

    def same_span(self, other):
        if self.dim != other.dim:
            return False
        return all(self.contains(b) for b in other.basis)


def gram_matrix(n):
    """Frobenius Gram matrix of the reference basis."""
    t = n - 1
    size = n * n - 1
    g = [[Fraction(0)] * size for _ in range(size)]
    for i in range(t):
        for j in range(t):
            g[i][j] = Fraction(2 if i == j else 1)
    for i in range(t, size):
        g[i][i] = Fraction(2)
    return g


def orth_complement(S, n=None):
    """Frobenius orthogonal complement of ``S`` inside su(n)."""
    n = S.n if n is None else n
    size = n * n - 1
    if not S.basis:
        return Subspace(tuple(standard_convention(n).basis), n)
    t = n - 1
    rows = []
    for b in S.basis:
        # c times the Gram matrix: torus block is I + all-ones, root block 2I
        c = b.coords()
        tsum = sum(c[:t], Fraction(0))
        rows.append([c[i] + tsum for i in range(t)] + [2 * x for x in c[t:]])
    return Subspace(tuple(AlgebraElement.from_coords(n, v) for v in nullspace(rows, size)), n)


def change_of_basis(A, B):
    """Matrix C with B_k = sum_j C[j][k] A_j; raises NotSameSpan."""
    if len(A) != len(B):
        raise NotSameSpan("bases have different lengths")
    d = len(A)
    if d == 0:
        return []
    ca = [a.coords() for a in A]
    cb = [b.coords() for b in B]
    size = len(ca[0])
    aug = [[ca[j][i] for j in range(d)] + [cb[k][i] for k in range(d)] for i in range(size)]
    red, pivots = rref(aug)
    if pivots[:d] != list(range(d)) or any(p >= d for p in pivots):
        raise NotSameSpan("the two lists do not span the same space")
    return [red[j][d:] for j in range(d)]


def orientation_det(A, B):
    """Sign of the change-of-basis determinant from ordered basis A to B."""
    d = det(change_of_basis(A, B))
    if d == 0:
        raise NotSameSpan("second list is linearly dependent")
    return 1 if d > 0 else -1
