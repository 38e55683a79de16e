"""Root systems in ambient orthonormal coordinates.

A root is a tuple of ints. Conventions per family (``m`` is the ambient
dimension):

* ``A`` rank r, m = r+1: e_i - e_j
* ``B`` rank r: ±e_i, ±e_i ± e_j
* ``C`` rank r: ±2e_i, ±e_i ± e_j
* ``D`` rank r >= 2: ±e_i ± e_j
* ``G2``, m = 3: ±(e_i - e_j), ±(2e_i - e_j - e_k)
* ``F4``, m = 4, coordinates doubled to stay integral: ±2e_i, ±2e_i ± 2e_j,
  (±1, ±1, ±1, ±1)

A root is positive when its first nonzero coordinate is positive. For type A
this is exactly {e_i - e_j : i < j}.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product

from .errors import InvalidType, NotARoot, NotASubsystem
from .linalg import rref

CLASSICAL_COUNTS = {
    "A": lambda r: r * (r + 1),
    "B": lambda r: 2 * r * r,
    "C": lambda r: 2 * r * r,
    "D": lambda r: 2 * r * (r - 1),
    "G2": lambda r: 12,
    "F4": lambda r: 48,
}


def inner(u, v):
    return sum(a * b for a, b in zip(u, v))


def neg(r):
    return tuple(-x for x in r)


def reflect(v, r):
    """Reflection of ``v`` in the hyperplane orthogonal to ``r``."""
    k, rem = divmod(2 * inner(v, r), inner(r, r))
    if rem:
        raise ValueError(f"{v} is not integral against {r}")
    return tuple(a - k * b for a, b in zip(v, r))


def lex_positive(r):
    for x in r:
        if x:
            return x > 0
    raise ValueError("zero vector")


def unit(m, i, scale=1):
    v = [0] * m
    v[i] = scale
    return tuple(v)


def _vec(m, coeffs):
    v = [0] * m
    for i, c in coeffs:
        v[i] += c
    return tuple(v)


def _classical_roots(family, rank):
    if family == "A":
        m = rank + 1
        return m, [_vec(m, [(i, 1), (j, -1)]) for i in range(m) for j in range(m) if i != j]
    if family == "G2":
        m = 3
        short = [_vec(m, [(i, 1), (j, -1)]) for i in range(m) for j in range(m) if i != j]
        long_ = []
        for i in range(m):
            rest = [j for j in range(m) if j != i]
            v = _vec(m, [(i, 2), (rest[0], -1), (rest[1], -1)])
            long_ += [v, neg(v)]
        return m, short + long_
    m = rank
    pairs = []
    for i, j in combinations(range(m), 2):
        for si, sj in product((1, -1), repeat=2):
            pairs.append((i, j, si, sj))
    if family == "F4":
        roots = [unit(m, i, s * 2) for i in range(m) for s in (1, -1)]
        roots += [_vec(m, [(i, 2 * si), (j, 2 * sj)]) for i, j, si, sj in pairs]
        roots += [tuple(signs) for signs in product((1, -1), repeat=4)]
        return m, roots
    roots = [_vec(m, [(i, si), (j, sj)]) for i, j, si, sj in pairs]
    if family == "B":
        roots += [unit(m, i, s) for i in range(m) for s in (1, -1)]
    elif family == "C":
        roots += [unit(m, i, 2 * s) for i in range(m) for s in (1, -1)]
    return m, roots


def _simples(positives):
    pos = set(positives)
    decomposable = {tuple(a + b for a, b in zip(p, q)) for p, q in combinations(positives, 2)}
    return tuple(sorted((p for p in pos if p not in decomposable), reverse=True))


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    dim: int
    roots: tuple
    positives: tuple
    simples: tuple
    label: str = ""
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {r: k for k, r in enumerate(self.roots)})

    def __len__(self):
        return len(self.roots)

    def __contains__(self, r):
        return tuple(r) in self._index

    def index(self, r):
        try:
            return self._index[tuple(r)]
        except KeyError:
            raise NotARoot(f"{tuple(r)} is not a root of {self.name}") from None

    @property
    def name(self):
        return self.label or f"{self.family}{self.rank}"

    @cached_property
    def positive_set(self):
        return frozenset(self.positives)

    @cached_property
    def simple_coordinates(self):
        """Coordinates of every root in the basis of simple roots (ints)."""
        if not self.simples:
            return {}
        k = len(self.simples)
        out = {}
        for r in self.roots:
            # columns are the simple roots, augmented by r
            aug = [[s[i] for s in self.simples] + [r[i]] for i in range(self.dim)]
            red, pivots = rref(aug)
            if k in pivots:
                raise NotASubsystem(f"{r} not in the span of the simple roots")
            coeffs = [red[i][k] for i in range(k)]
            if any(c.denominator != 1 for c in coeffs):
                raise NotASubsystem(f"{r} has non-integral simple coordinates")
            out[r] = tuple(int(c) for c in coeffs)
        return out

    def reflection_closed(self):
        return all(reflect(s, r) in self for r in self.roots for s in self.roots)


def _make(family, rank, dim, roots, label=""):
    roots = tuple(sorted(set(roots), reverse=True))
    positives = tuple(r for r in roots if lex_positive(r))
    return RootSystem(family, rank, dim, roots, positives, _simples(positives), label)


def build_root_system(family, rank):
    """Full root system of the given type with the lexicographic positive choice."""
    family = str(family).upper()
    if family not in CLASSICAL_COUNTS:
        raise InvalidType(f"unsupported family {family!r}")
    if not isinstance(rank, int) or rank < 1:
        raise InvalidType(f"rank must be a positive integer, got {rank!r}")
    if (family == "G2" and rank != 2) or (family == "F4" and rank != 4) or (family == "D" and rank < 2):
        raise InvalidType(f"no root system {family}{rank}")
    dim, roots = _classical_roots(family, rank)
    return _make(family, rank, dim, roots)


def is_positive(sys, r):
    sys.index(r)
    return tuple(r) in sys.positive_set


def sub_root_system(sys, generators, label=""):
    """Smallest subset of ``sys.roots`` containing ``generators`` and closed
    under negation and mutual reflections. Positivity is inherited."""
    gens = [tuple(g) for g in generators]
    for g in gens:
        sys.index(g)
    closed = set(gens) | {neg(g) for g in gens}
    frontier = list(closed)
    while frontier:
        new = []
        for r in frontier:
            for s in list(closed):
                for img in (reflect(s, r), reflect(r, s)):
                    if img not in closed:
                        if img not in sys:
                            raise NotASubsystem(f"reflection image {img} is not a root")
                        closed.add(img)
                        new.append(img)
        frontier = new
    return _make(sys.family, sys.rank, sys.dim, closed, label or f"sub({sys.name})")
