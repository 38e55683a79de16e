"""Signature of equal-rank biquotients SU(n)//H.

H sits in SU(n) x SU(n) and acts by ``(h1, h2) . g = h1 g h2^{-1}``. A torus
T~ inside T_max x T_max commuting with H acts on the quotient; at a fixed
point Hg with g in the normalizer of T_max the isotropy weights are roots of
SU(n) pulled back along the differential of the twist homomorphism
``psi_g(t1, t2) = s2^{-1} t2``, where ``(s1, s2)`` in H compensates
``(t1, t2)``:  ``t1 g t2^{-1} = s1 g s2^{-1}``.

Tangent spaces are identified with the Frobenius complement ("horizontal
space") of the orbit directions ``{Ad_{g^{-1}} X - Y : (X, Y) in h}``
("vertical space"). Orientations come from ordered bases: the reference basis
of su(n) and the factor-ordered basis of h. The per-point sign correction is
the orientation of ``horizontal (reference order) + vertical (h order)``
relative to su(n).

Everything is exact; only fixed points represented by generalized
permutation matrices with a horizontal space that is a sum of coordinate
root spaces V_jk are supported.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from itertools import combinations, permutations
from math import lcm, prod

from .errors import (
    DimensionCollapse,
    IncompleteEnumeration,
    NonSplitHorizontal,
    NotAHomomorphism,
    NotInMaxTorus,
    NotSolvable,
    SchemaError,
    ScopeError,
    ShortcutInvalid,
    ZeroWeight,
)
from .linalg import rank, smith_normal_form, solve
from .liealg import (
    GQ,
    AlgebraElement,
    GroupElement,
    OrientationConvention,
    Subspace,
    adjoint,
    bracket,
    dagger,
    freeze,
    is_diagonal,
    mmul,
    orientation_det,
    orth_complement,
    root_space,
    zeros,
)

# a point on the unit circle that is not a root of unity
UNIT_POINT = GQ(Fraction(3, 5), Fraction(4, 5))


# -- specifications ----------------------------------------------------------

@dataclass(frozen=True)
class Factor:
    """One factor of H: an SU(k) copied into index blocks on either side, or
    a circle ``s -> (diag(s^P), diag(s^Q))``."""

    kind: str
    k: int = 0
    left_blocks: tuple = ()
    right_blocks: tuple = ()
    left_weights: tuple = None
    right_weights: tuple = None

    @classmethod
    def su(cls, k, left_blocks=(), right_blocks=()):
        return cls("SU", k, tuple(map(tuple, left_blocks)), tuple(map(tuple, right_blocks)))

    @classmethod
    def torus(cls, left_weights, right_weights):
        return cls("torus", 1, (), (), tuple(left_weights), tuple(right_weights))

    @property
    def rank(self):
        return self.k - 1 if self.kind == "SU" else 1

    @property
    def weyl_order(self):
        return prod(range(1, self.k + 1)) if self.kind == "SU" else 1


@dataclass(frozen=True)
class EmbeddingSpec:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def rank(self):
        return sum(f.rank for f in self.factors)

    @property
    def weyl_order(self):
        return prod(f.weyl_order for f in self.factors)


@dataclass(frozen=True)
class BiquotientSpec:
    n: int
    embedding: EmbeddingSpec
    tilde_torus: tuple
    circle: tuple
    fixed_point_reps: tuple = None
    flipped_torus_mode: bool = False
    expected_chi: int = None

    def __post_init__(self):
        object.__setattr__(self, "tilde_torus", tuple((tuple(l), tuple(r)) for l, r in self.tilde_torus))
        object.__setattr__(self, "circle", tuple(self.circle))
        if self.fixed_point_reps is not None:
            object.__setattr__(self, "fixed_point_reps", tuple(self.fixed_point_reps))

    def with_circle(self, circle):
        return BiquotientSpec(
            self.n, self.embedding, self.tilde_torus, circle, self.fixed_point_reps,
            self.flipped_torus_mode, self.expected_chi,
        )

    def with_mode(self, flipped):
        return BiquotientSpec(
            self.n, self.embedding, self.tilde_torus, self.circle, self.fixed_point_reps,
            flipped, self.expected_chi,
        )


@dataclass(frozen=True)
class HBasisElement:
    label: str
    left: AlgebraElement
    right: AlgebraElement

    def coords(self):
        return self.left.coords() + self.right.coords()


# -- embedding of h ----------------------------------------------------------

def _place(n, small, blocks):
    m = zeros(n)
    for block in blocks:
        for r, gr in enumerate(block):
            for c, gc in enumerate(block):
                m[gr - 1][gc - 1] = m[gr - 1][gc - 1] + small[r][c]
    return AlgebraElement(freeze(m))


def _su_basis(k):
    """Ordered basis of su(k): torus part, then root-space pairs."""
    torus = []
    for m in range(1, k):
        v = [0] * k
        v[m - 1], v[k - 1] = 1, -1
        torus.append((f"t{m}", AlgebraElement.diag(v)))
    roots = []
    for j, l in combinations(range(1, k + 1), 2):
        a, b = root_space(k, j, l)
        roots += [(f"V{j}{l}a", a), (f"V{j}{l}b", b)]
    return torus, roots


def _su_generators(k):
    gens = []
    torus, _ = _su_basis(k)
    gens += [x for _, x in torus]
    for j in range(1, k):
        gens += list(root_space(k, j, j + 1))
    return gens


def _validate_factor(f, n, idx):
    where = f"factors[{idx}]"
    if f.kind == "SU":
        if f.k < 2:
            raise NotAHomomorphism(f"{where}: SU(k) needs k >= 2")
        if not f.left_blocks and not f.right_blocks:
            raise NotAHomomorphism(f"{where}: factor is embedded trivially")
        for side in (f.left_blocks, f.right_blocks):
            used = set()
            for block in side:
                if len(block) != f.k or len(set(block)) != f.k:
                    raise NotAHomomorphism(f"{where}: block {list(block)} must list {f.k} distinct indices")
                if any(not 1 <= x <= n for x in block):
                    raise NotAHomomorphism(f"{where}: block index out of range 1..{n}")
                if used & set(block):
                    raise NotAHomomorphism(f"{where}: blocks on one side overlap")
                used |= set(block)
    elif f.kind == "torus":
        for w in (f.left_weights, f.right_weights):
            if w is None or len(w) != n or sum(w) != 0:
                raise NotAHomomorphism(f"{where}: torus weights need {n} integers summing to 0")
        if not any(f.left_weights) and not any(f.right_weights):
            raise NotAHomomorphism(f"{where}: torus factor is trivial")
    else:
        raise NotAHomomorphism(f"{where}: unknown factor kind {f.kind!r}")


def _factor_parts(f, n):
    if f.kind == "torus":
        t = [("t", AlgebraElement.diag(f.left_weights), AlgebraElement.diag(f.right_weights))]
        return t, []
    torus, roots = _su_basis(f.k)
    emb = lambda x: (_place(n, x.matrix, f.left_blocks), _place(n, x.matrix, f.right_blocks))
    return [(lbl, *emb(x)) for lbl, x in torus], [(lbl, *emb(x)) for lbl, x in roots]


def _pair_bracket(p, q):
    return bracket(p[0], q[0]), bracket(p[1], q[1])


def _check_homomorphism(spec, n):
    embedded_gens = []
    for idx, f in enumerate(spec.factors):
        if f.kind == "torus":
            embedded_gens.append([(AlgebraElement.diag(f.left_weights), AlgebraElement.diag(f.right_weights))])
            continue
        gens = _su_generators(f.k)
        emb = lambda x: (_place(n, x.matrix, f.left_blocks), _place(n, x.matrix, f.right_blocks))
        for x, y in combinations(gens, 2):
            lhs = emb(bracket(x, y))
            rhs = _pair_bracket(emb(x), emb(y))
            if lhs != rhs:
                raise NotAHomomorphism(f"factors[{idx}]: embedding does not preserve brackets")
        embedded_gens.append([emb(x) for x in gens])
    for (i, gi), (j, gj) in combinations(enumerate(embedded_gens), 2):
        for p in gi:
            for q in gj:
                b = _pair_bracket(p, q)
                if not (b[0].is_zero() and b[1].is_zero()):
                    raise NotAHomomorphism(f"factors[{i}] and factors[{j}] do not commute")


def embed_h(spec, n):
    """Ordered oriented basis of h inside su(n) + su(n).

    Torus parts of all factors come first (factor order), then root-space
    pairs (factor order, j < k lexicographic inside each factor).
    """
    if isinstance(spec, BiquotientSpec):
        spec = spec.embedding
    return list(_embed_h(spec, n))


@lru_cache(maxsize=32)
def _embed_h(spec, n):
    for idx, f in enumerate(spec.factors):
        _validate_factor(f, n, idx)
    _check_homomorphism(spec, n)
    torus, roots = [], []
    for idx, f in enumerate(spec.factors):
        tag = f"SU({f.k})#{idx + 1}" if f.kind == "SU" else f"T#{idx + 1}"
        t, r = _factor_parts(f, n)
        torus += [HBasisElement(f"{tag} {lbl}", x, y) for lbl, x, y in t]
        roots += [HBasisElement(f"{tag} {lbl}", x, y) for lbl, x, y in r]
    basis = torus + roots
    if rank([b.coords() for b in basis]) != len(basis):
        raise NotAHomomorphism("embedding of h is not injective")
    return tuple(basis)


def h_torus(spec, n):
    """Torus part of h as integer weight columns (left, right)."""
    return [
        (tuple(int(v) for v in b.left.diagonal_values()), tuple(int(v) for v in b.right.diagonal_values()))
        for b in embed_h(spec, n)[: spec.embedding.rank if isinstance(spec, BiquotientSpec) else spec.rank]
    ]


# -- twisted maps ------------------------------------------------------------

def _ad_inv(g, X):
    return adjoint(g.inverse(), X)


def vertical_images(g, h_basis):
    """Ordered images ``Ad_{g^{-1}} X - Y`` of the h basis."""
    return [_ad_inv(g, b.left) - b.right for b in h_basis]


def vertical_space(g, h_basis):
    images = vertical_images(g, h_basis)
    if rank([v.coords() for v in images]) != len(images):
        raise DimensionCollapse(
            f"orbit map at {g.short()} is not injective: H does not act freely there"
        )
    return Subspace(tuple(images), g.n)


def torus_element(spec, coeffs):
    """``sum c_k (i diag(left_k), i diag(right_k))`` as a pair of algebra elements."""
    n = spec.n
    left = [Fraction(0)] * n
    right = [Fraction(0)] * n
    for c, (l, r) in zip(coeffs, spec.tilde_torus):
        for i in range(n):
            left[i] += Fraction(c) * l[i]
            right[i] += Fraction(c) * r[i]
    return AlgebraElement.diag(left), AlgebraElement.diag(right)


def circle_element(spec):
    return torus_element(spec, spec.circle)


def _compensator(g, h_basis, XY):
    """Coefficients of S in h with Ad_{g^-1} pi1(S) - pi2(S) = Ad_{g^-1} X1 - X2."""
    X1, X2 = XY
    images = vertical_images(g, h_basis)
    a = [list(col) for col in zip(*(v.coords() for v in images))]
    rhs = (_ad_inv(g, X1) - X2).coords()
    return solve(a, rhs)


def _combine(coeffs, elements, n):
    out = AlgebraElement(freeze(zeros(n)))
    for c, x in zip(coeffs, elements):
        if c:
            out = out + x.scale(c)
    return out


def dpsi_general(g, spec, XY, h_basis=None):
    h_basis = h_basis or embed_h(spec, spec.n)
    coeffs = _compensator(g, h_basis, XY)
    if coeffs is None:
        raise NotSolvable(f"no compensating element of h at {g.short()}")
    pi2 = _combine(coeffs, [b.right for b in h_basis], spec.n)
    return XY[1] - pi2


def dpsi_flipped(g, XY):
    return _ad_inv(g, XY[0]) + XY[1]


def dpsi(g, spec, XY, h_basis=None):
    """Differential of the twist homomorphism at g evaluated on (X, Y).

    In flipped-torus mode the shortcut ``Ad_{g^{-1}} X + Y`` is used as is;
    otherwise the compensating element is found by an exact linear solve.
    """
    Z = dpsi_flipped(g, XY) if spec.flipped_torus_mode else dpsi_general(g, spec, XY, h_basis)
    if not is_diagonal(Z.matrix):
        raise NotInMaxTorus(f"dpsi at {g.short()} leaves the maximal torus")
    return Z


def flipped_hypothesis_holds(spec, h_basis=None):
    """Whether every generator (X1, X2) of t~ has (X2, X1) in h."""
    h_basis = h_basis or embed_h(spec, spec.n)
    a = [list(col) for col in zip(*(b.coords() for b in h_basis))]
    for k in range(len(spec.tilde_torus)):
        coeffs = [0] * len(spec.tilde_torus)
        coeffs[k] = 1
        X1, X2 = torus_element(spec, coeffs)
        if solve(a, X2.coords() + X1.coords()) is None:
            return False
    return True


def flipped_matches_general_at(g, spec, XY, h_basis=None):
    """Whether the flipped-torus shortcut agrees with the exact solve at g."""
    try:
        return dpsi_general(g, spec, XY, h_basis) == dpsi_flipped(g, XY)
    except NotSolvable:
        return False


# -- fixed points ------------------------------------------------------------

def _diag_power(values, scale):
    n = len(values)
    m = zeros(n)
    for i, v in enumerate(values):
        e = v * scale
        if e.denominator != 1:
            raise ValueError("non-integral exponent")
        m[i][i] = UNIT_POINT ** int(e)
    return freeze(m)


def verify_fixed_point(g, spec, h_basis=None):
    """Whether Hg is fixed by T~.

    For every generator of t~ the infinitesimal compensation equation must be
    solvable in h, and the corresponding group identity
    ``t1 g t2^{-1} = s1 g s2^{-1}`` must hold exactly for a circle parameter
    that is not a root of unity.
    """
    h_basis = h_basis or embed_h(spec, spec.n)
    n = spec.n
    for k in range(len(spec.tilde_torus)):
        coeffs = [0] * len(spec.tilde_torus)
        coeffs[k] = 1
        X1, X2 = torus_element(spec, coeffs)
        S = _compensator(g, h_basis, (X1, X2))
        if S is None:
            return False
        s1 = _combine(S, [b.left for b in h_basis], n)
        s2 = _combine(S, [b.right for b in h_basis], n)
        if not (is_diagonal(s1.matrix) and is_diagonal(s2.matrix)):
            return False
        vals = [X1.diagonal_values(), X2.diagonal_values(), s1.diagonal_values(), s2.diagonal_values()]
        scale = lcm(*(v.denominator for row in vals for v in row))
        t1, t2, u1, u2 = (_diag_power(v, scale) for v in vals)
        lhs = mmul(mmul(t1, g.matrix), dagger(t2))
        rhs = mmul(mmul(u1, g.matrix), dagger(u2))
        if lhs != rhs:
            return False
    return True


@dataclass(frozen=True)
class Monomial:
    """Monomial matrix with entry exp(2 pi i phases[r]) at (r, perm[r])."""

    perm: tuple
    phases: tuple

    def __mul__(self, o):
        return Monomial(
            tuple(o.perm[c] for c in self.perm),
            tuple((self.phases[r] + o.phases[c]) % 1 for r, c in enumerate(self.perm)),
        )

    def inverse(self):
        perm = [0] * len(self.perm)
        phases = [Fraction(0)] * len(self.perm)
        for r, c in enumerate(self.perm):
            perm[c] = r
            phases[c] = (-self.phases[r]) % 1
        return Monomial(tuple(perm), tuple(phases))

    @classmethod
    def from_group(cls, g):
        quarter = {"1": Fraction(0), "i": Fraction(1, 4), "-1": Fraction(1, 2), "-i": Fraction(3, 4)}
        perm = g.permutation()
        tags = {(r, c): t for r, c, t in ((a - 1, b - 1, t) for a, b, t in g.triples())}
        return cls(perm, tuple(quarter[tags[(r, c)]] for r, c in enumerate(perm)))

    def to_group(self):
        tag = {Fraction(0): "1", Fraction(1, 4): "i", Fraction(1, 2): "-1", Fraction(3, 4): "-i"}
        n = len(self.perm)
        return GroupElement.from_triples(n, [[r + 1, c + 1, tag[self.phases[r]]] for r, c in enumerate(self.perm)])


def _weyl_moves(spec, n):
    """Monomial pairs (n1, n2) in H realizing the simple reflections of its factors."""
    moves = []
    ident = tuple(range(n))
    for f in spec.embedding.factors:
        if f.kind != "SU":
            continue
        for j in range(f.k - 1):
            sides = []
            for blocks in (f.left_blocks, f.right_blocks):
                perm = list(ident)
                phases = [Fraction(0)] * n
                for block in blocks:
                    a, b = block[j] - 1, block[j + 1] - 1
                    perm[a], perm[b] = b, a
                    phases[b] = Fraction(1, 2)
                sides.append(Monomial(tuple(perm), tuple(phases)))
            moves.append(tuple(sides))
    return moves


class _PhaseKeys:
    """Classes of monomial phases modulo the torus of H, per permutation."""

    def __init__(self, torus_cols, n):
        self.left = [c[0] for c in torus_cols]
        self.right = [c[1] for c in torus_cols]
        self.n = n
        self._cache = {}

    def _reduction(self, perm):
        if perm not in self._cache:
            rows = [[l[i] - r[perm[i]] for l, r in zip(self.left, self.right)] for i in range(self.n)]
            u, d, _ = smith_normal_form(rows)
            rk = sum(1 for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i])
            self._cache[perm] = (u, rk)
        return self._cache[perm]

    def key(self, m):
        u, rk = self._reduction(m.perm)
        psi = [sum(Fraction(x) * p for x, p in zip(row, m.phases)) % 1 for row in u[rk:]]
        return m.perm, tuple(psi)


def _candidate(perm):
    inversions = sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])
    phases = [Fraction(0)] * len(perm)
    if inversions % 2:
        phases[0] = Fraction(1, 2)
    return Monomial(tuple(perm), tuple(phases))


class OrbitIndex:
    """Assigns monomial matrices to H-orbits.

    Two monomials are identified when one is reached from the other by Weyl
    moves of H's factors followed by a torus element of H; the torus part is
    decided by an exact lattice computation on phases.
    """

    def __init__(self, spec):
        n = spec.n
        torus = embed_h(spec, n)[: spec.embedding.rank]
        cols = [
            (tuple(b.left.diagonal_values()), tuple(b.right.diagonal_values())) for b in torus
        ]
        self.keys = _PhaseKeys(cols, n)
        self.moves = _weyl_moves(spec, n)
        self.state_class = {}
        self.witness = {}
        self.count = 0

    def classify(self, m):
        """Orbit index of ``m``, exploring a new orbit if needed."""
        st = self.keys.key(m)
        if st in self.state_class:
            return self.state_class[st], False
        idx = self.count
        self.count += 1
        self.state_class[st] = idx
        self.witness[st] = (m, ())
        frontier = [m]
        while frontier:
            nxt = []
            for cur in frontier:
                for mi, (n1, n2) in enumerate(self.moves):
                    new = n1 * cur * n2.inverse()
                    s = self.keys.key(new)
                    if s not in self.state_class:
                        self.state_class[s] = idx
                        self.witness[s] = (new, self.witness[self.keys.key(cur)][1] + (mi,))
                        nxt.append(new)
            frontier = nxt
        return idx, True

    def same_orbit(self, g, h):
        return self.classify(Monomial.from_group(g))[0] == self.classify(Monomial.from_group(h))[0]


def enumerate_fixed_points(spec, h_basis=None):
    """Fixed points of T~ represented by generalized permutation matrices,
    one per H-orbit.

    Supplied representatives are verified and used instead of the scan.
    """
    n = spec.n
    h_basis = h_basis or embed_h(spec, n)
    index = OrbitIndex(spec)
    found = []
    if spec.fixed_point_reps is not None:
        seen = set()
        for pos, g in enumerate(spec.fixed_point_reps):
            if not verify_fixed_point(g, spec, h_basis):
                raise NotSolvable(f"supplied representative #{pos + 1} {g.short()} is not a fixed point")
            idx, _ = index.classify(Monomial.from_group(g))
            if idx in seen:
                raise IncompleteEnumeration(
                    f"supplied representative #{pos + 1} {g.short()} repeats an earlier H-orbit"
                )
            seen.add(idx)
            found.append(g)
    else:
        for perm in permutations(range(n)):
            m = _candidate(perm)
            _, new = index.classify(m)
            if new:
                g = m.to_group()
                if verify_fixed_point(g, spec, h_basis):
                    found.append(g)
    if spec.expected_chi is not None and len(found) != spec.expected_chi:
        raise IncompleteEnumeration(
            f"found {len(found)} fixed points, expected Euler characteristic {spec.expected_chi}"
        )
    return found


# -- weights, orientation, contributions ------------------------------------

def horizontal_root_spaces(horizontal, n):
    """The V_jk making up ``horizontal``; raises NonSplitHorizontal otherwise."""
    spaces = []
    for j, k in combinations(range(1, n + 1), 2):
        a, b = root_space(n, j, k)
        if horizontal.contains(a) and horizontal.contains(b):
            spaces.append((j, k))
    if 2 * len(spaces) != horizontal.dim:
        raise NonSplitHorizontal("horizontal space is not a sum of coordinate root spaces")
    return spaces


def weights_at(g, spec, h_basis=None, Z=None, spaces=None):
    """Pulled-back root values ``(1/i)(e_j - e_k)(Z)`` on each horizontal V_jk."""
    h_basis = h_basis or embed_h(spec, spec.n)
    if spaces is None:
        spaces = horizontal_root_spaces(orth_complement(vertical_space(g, h_basis)), spec.n)
    if Z is None:
        Z = dpsi(g, spec, circle_element(spec), h_basis)
    z = Z.diagonal_values()
    return [((j, k), z[j - 1] - z[k - 1]) for j, k in spaces]


def _reference_horizontal(spaces, n):
    out = []
    for j, k in spaces:
        out.extend(root_space(n, j, k))
    return out


def orientation_flip(g, spec, h_basis=None, convention=None, spaces=None, vertical=None):
    """+1 if the reference orientation of the horizontal space is the one
    induced on the quotient at g, -1 otherwise."""
    n = spec.n
    h_basis = h_basis or embed_h(spec, n)
    convention = convention or OrientationConvention(n)
    vertical = vertical or vertical_space(g, h_basis)
    if spaces is None:
        spaces = horizontal_root_spaces(orth_complement(vertical), n)
    return orientation_det(convention.basis, _reference_horizontal(spaces, n) + list(vertical.basis))


def contribution_rootsign(weights, flip):
    if any(v == 0 for _, v in weights):
        zero = [f"V{j}{k}" for (j, k), v in weights if v == 0]
        raise ZeroWeight(f"weight vanishes on {', '.join(zero)}; choose a generic circle")
    negatives = sum(1 for _, v in weights if v < 0)
    return (-1) ** negatives * flip


def rotation_number(Z, n, j, k):
    """Rotation of ad_Z on V_jk in the ordered basis (E_jk - E_kj, i(E_jk + E_kj))."""
    a, b = root_space(n, j, k)
    image = bracket(Z, a)
    # ad_Z a = w b on a root space
    return image.matrix[j - 1][k - 1].im


def contribution_orientdet(g, spec, Z, h_basis=None, convention=None, spaces=None, vertical=None):
    """Sign comparing the product orientation of positively rotating planes
    (then the oriented orbit) with the orientation of su(n)."""
    n = spec.n
    h_basis = h_basis or embed_h(spec, n)
    convention = convention or OrientationConvention(n)
    vertical = vertical or vertical_space(g, h_basis)
    if spaces is None:
        spaces = horizontal_root_spaces(orth_complement(vertical), n)
    planes = []
    for j, k in spaces:
        a, b = root_space(n, j, k)
        w = rotation_number(Z, n, j, k)
        if w == 0:
            raise ZeroWeight(f"ad_Z vanishes on V{j}{k}")
        planes.extend((a, b) if w > 0 else (b, a))
    return orientation_det(convention.basis, planes + list(vertical.basis))


@dataclass(frozen=True)
class Weight:
    root: tuple
    value: Fraction
    sign_convention: int

    @property
    def signed_value(self):
        return self.value * self.sign_convention


@dataclass(frozen=True)
class FixedPointDatum:
    rep: GroupElement
    vertical: Subspace
    horizontal: Subspace
    root_spaces: tuple
    Z: AlgebraElement
    weights: tuple
    orientation_flip: int
    contribution: int
    contribution_orientdet: int


@dataclass
class SignatureReport:
    mode: str
    fixed_points: list
    signature_up_to_sign: int
    cross_checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def contributions(self):
        return [fp.contribution for fp in self.fixed_points]


def fixed_point_datum(g, spec, h_basis=None, convention=None):
    n = spec.n
    h_basis = h_basis or embed_h(spec, n)
    vertical = vertical_space(g, h_basis)
    horizontal = orth_complement(vertical)
    spaces = horizontal_root_spaces(horizontal, n)
    Z = dpsi(g, spec, circle_element(spec), h_basis)
    raw = weights_at(g, spec, h_basis, Z=Z, spaces=spaces)
    flip = orientation_flip(g, spec, h_basis, convention, spaces, vertical)
    try:
        rootsign = contribution_rootsign(raw, flip)
    except ZeroWeight as exc:
        raise ZeroWeight(f"at {g.short()}: {exc}") from None
    orientdet = contribution_orientdet(g, spec, Z, h_basis, convention, spaces, vertical)
    # the sign fix is carried by the first weight
    weights = tuple(
        Weight(root, value, flip if pos == 0 else 1) for pos, (root, value) in enumerate(raw)
    )
    return FixedPointDatum(g, vertical, horizontal, tuple(spaces), Z, weights, flip, rootsign, orientdet)


def check_commutes(spec, h_basis):
    for k in range(len(spec.tilde_torus)):
        coeffs = [0] * len(spec.tilde_torus)
        coeffs[k] = 1
        X1, X2 = torus_element(spec, coeffs)
        for b in h_basis:
            if not (bracket(X1, b.left).is_zero() and bracket(X2, b.right).is_zero()):
                raise SchemaError("action.tilde_torus", f"generator {k + 1} does not commute with {b.label}")


def validate_spec(spec):
    n = spec.n
    if not spec.tilde_torus:
        raise SchemaError("action.tilde_torus", "at least one generator is required")
    for pos, (l, r) in enumerate(spec.tilde_torus):
        if len(l) != n or len(r) != n or sum(l) or sum(r):
            raise SchemaError(f"action.tilde_torus[{pos}]", f"rows need {n} integers summing to 0")
    if len(spec.circle) != len(spec.tilde_torus):
        raise SchemaError("action.circle", "one coefficient per tilde-torus generator")
    h_basis = embed_h(spec, n)
    check_commutes(spec, h_basis)
    if spec.flipped_torus_mode and not flipped_hypothesis_holds(spec, h_basis):
        raise ScopeError("flipped_torus_mode requested but t~ does not lie in the flipped torus of H")
    return h_basis


def torus_freeness_check(left_cols, right_cols, n=None):
    """Whether the torus with weight columns P (left) and Q (right) acts
    freely on SU(n).

    Free iff for every Weyl element w the map s -> P s - w(Q s) has the same
    solution lattice mod Z^n as s -> (P s, Q s); decided by ranks and
    products of elementary divisors.
    """
    r = len(left_cols)
    if r == 0:
        return True
    n = n or len(left_cols[0])
    P = [[left_cols[c][i] for c in range(r)] for i in range(n)]
    Q = [[right_cols[c][i] for c in range(r)] for i in range(n)]
    stacked = P + Q
    if rank(stacked) < r:
        return False
    base = prod(_divisors(stacked))
    # W(SU(n)) acts on diagonal weights by permuting coordinates
    for perm in permutations(range(n)):
        M = [[P[i][c] - Q[perm[i]][c] for c in range(r)] for i in range(n)]
        if rank(M) < r or prod(_divisors(M)) != base:
            return False
    return True


def _divisors(rows):
    _, d, _ = smith_normal_form(rows)
    return [d[i][i] for i in range(min(len(d), len(d[0]))) if d[i][i]]


def embedding_torus_cols(spec):
    basis = embed_h(spec, spec.n)[: spec.embedding.rank]
    left = [tuple(int(v) for v in b.left.diagonal_values()) for b in basis]
    right = [tuple(int(v) for v in b.right.diagonal_values()) for b in basis]
    return left, right


def biquotient_signature(spec, convention=None):
    """Signature of SU(n)//H, up to a global sign, with per-point data."""
    n = spec.n
    h_basis = validate_spec(spec)
    report = SignatureReport("biquotient", [], 0)
    report.info["dim"] = (n * n - 1) - len(h_basis)
    if spec.embedding.rank < n - 1:
        report.notes.append(
            "rank-deficient: rk H < rk G, all Pontryagin numbers vanish, signature is 0"
        )
        report.cross_checks["rank-deficient"] = True
        return report
    if spec.embedding.rank > n - 1:
        raise DimensionCollapse("rk H exceeds rk G: the action cannot be free")
    left, right = embedding_torus_cols(spec)
    if not torus_freeness_check(left, right, n):
        raise DimensionCollapse("the maximal torus of H does not act freely on SU(n)")
    reps = enumerate_fixed_points(spec, h_basis)
    if spec.flipped_torus_mode:
        check_flipped_shortcut(spec, reps, h_basis)
    for g in reps:
        report.fixed_points.append(fixed_point_datum(g, spec, h_basis, convention))
    report.signature_up_to_sign = sum(report.contributions)
    report.info["fixed_points"] = len(reps)
    report.info["euler_expected"] = _weyl_order_su(n) // spec.embedding.weyl_order
    report.cross_checks["engine-equivalence"] = all(
        fp.contribution == fp.contribution_orientdet for fp in report.fixed_points
    )
    report.cross_checks["abs-bound"] = abs(report.signature_up_to_sign) <= len(reps)
    if report.info["dim"] % 4:
        report.notes.append("dimension not divisible by 4: signature is 0 by definition")
        report.cross_checks["dimension-parity"] = report.signature_up_to_sign == 0
        report.signature_up_to_sign = 0
    if spec.flipped_torus_mode:
        report.cross_checks["flipped-consistency"] = True
    else:
        report.notes.append("general mode: weights from the exact compensation solve in h")
    return report


def flipped_mismatches(spec, reps, h_basis=None):
    """Representatives at which the flipped-torus formula and the exact
    compensation disagree on some generator of t~."""
    h_basis = h_basis or embed_h(spec, spec.n)
    bad = []
    for g in reps:
        for k in range(len(spec.tilde_torus)):
            coeffs = [0] * len(spec.tilde_torus)
            coeffs[k] = 1
            if not flipped_matches_general_at(g, spec, torus_element(spec, coeffs), h_basis):
                bad.append(g)
                break
    return bad


def check_flipped_shortcut(spec, reps, h_basis=None):
    bad = flipped_mismatches(spec, reps, h_basis)
    if bad:
        raise ShortcutInvalid(
            "flipped-torus formula Ad_{g^-1}X + Y disagrees with the exact compensation at "
            + ", ".join(g.short() for g in bad)
            + "; use general mode"
        )


def _weyl_order_su(n):
    return prod(range(1, n + 1))
