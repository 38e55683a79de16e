"""Weyl groups as permutations of a root set.

An element is stored as the permutation it induces on the roots of a parent
system (``perm[k]`` is the index of ``w(roots[k])``) together with a reduced
word in the simple reflections of the system that generated it. The
permutation determines the linear map, since ``w`` fixes the orthogonal
complement of the root span, so hashing on it is hashing on the matrix.
"""
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import GroupTooLarge, NotASubgroup
from .linalg import nullspace, solve
from .rootsys import reflect

DEFAULT_CAP = 2_000_000


def weyl_cap():
    raw = os.environ.get("SIGCALC_WEYL_CAP")
    return int(raw) if raw else DEFAULT_CAP


@dataclass(frozen=True, eq=False)
class WeylElement:
    perm: tuple
    word: tuple
    system: object  # RootSystem whose roots ``perm`` indexes

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __len__(self):
        return len(self.word)

    def __call__(self, root):
        return act(self, root)

    def compose(self, other):
        """``self ∘ other`` (apply ``other`` first). The word is concatenated,
        hence not necessarily reduced."""
        return WeylElement(tuple(map(self.perm.__getitem__, other.perm)), self.word + other.word, self.system)

    @cached_property
    def inverse_perm(self):
        inv = [0] * len(self.perm)
        for k, img in enumerate(self.perm):
            inv[img] = k
        return tuple(inv)

    @cached_property
    def matrix(self):
        """Rational matrix of ``w`` on the ambient space.

        Integral for every supported family except F4, whose Weyl group has
        half-integer entries in orthonormal coordinates.
        """
        sys = self.system
        simples = [list(map(Fraction, s)) for s in sys.simples]
        images = [list(map(Fraction, sys.roots[self.perm[sys.index(s)]])) for s in sys.simples]
        # w fixes the orthogonal complement of the root span
        comp = nullspace(simples, sys.dim)
        basis = simples + comp
        targets = images + comp
        # M b_k = t_k for every k, solved one row of M at a time
        rows = [solve(basis, [t[i] for t in targets]) for i in range(sys.dim)]
        return tuple(tuple(x if x.denominator != 1 else int(x) for x in row) for row in rows)

    def determinant_sign(self):
        return -1 if len(self.word) % 2 else 1


class WeylGroup:
    """A finite set of Weyl elements sharing one parent root system."""

    def __init__(self, elements, system, generated_by=None):
        self.system = system
        self.generated_by = generated_by
        self._by_perm = {e.perm: e for e in elements}
        self._elements = list(elements)

    def __iter__(self):
        return iter(self._elements)

    def __len__(self):
        return len(self._elements)

    def __contains__(self, w):
        return w.perm in self._by_perm

    def lookup(self, perm):
        return self._by_perm.get(perm)

    @property
    def identity(self):
        return self._by_perm[tuple(range(len(self.system.roots)))]

    def longest(self):
        return max(self._elements, key=len)


def reflection_perm(parent, r):
    return tuple(parent.index(reflect(s, r)) for s in parent.roots)


def generate_weyl(sys, within=None, cap=None):
    """Breadth-first closure over simple reflections.

    With ``within`` (a root system containing ``sys``), elements are expressed
    as permutations of ``within.roots`` so the result can be compared with the
    Weyl group of the larger system.
    """
    parent = within or sys
    cap = weyl_cap() if cap is None else cap
    gens = [reflection_perm(parent, s) for s in sys.simples]
    ident = tuple(range(len(parent.roots)))
    words = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            w = words[p]
            for j, g in enumerate(gens):
                q = tuple(map(g.__getitem__, p))
                if q not in words:
                    words[q] = (j,) + w
                    nxt.append(q)
                    if len(words) > cap:
                        raise GroupTooLarge(f"Weyl group of {sys.name} exceeds cap {cap}")
        frontier = nxt
    elements = [WeylElement(p, w, parent) for p, w in words.items()]
    return WeylGroup(elements, parent, generated_by=sys)


def act(w, r):
    sys = w.system
    return sys.roots[w.perm[sys.index(r)]]


def act_inverse(w, r):
    sys = w.system
    return sys.roots[w.inverse_perm[sys.index(r)]]


@dataclass(frozen=True)
class CosetList:
    representatives: tuple
    subgroup_order: int

    def __len__(self):
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)


def _check_subgroup(W_G, W_H):
    members = {h.perm for h in W_H}
    for h in W_H:
        if h.perm not in W_G._by_perm:
            raise NotASubgroup("W_H contains an element outside W_G")
    ident = tuple(range(len(W_G.system.roots)))
    if ident not in members:
        raise NotASubgroup("W_H does not contain the identity")
    gens = [h for h in W_H if len(h.word) == 1]
    if not gens and len(members) > 1:
        gens = list(W_H)
    reached = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(map(p.__getitem__, g.perm))
                if q not in members:
                    raise NotASubgroup("W_H is not closed under composition")
                if q not in reached:
                    reached.add(q)
                    nxt.append(q)
        frontier = nxt
    if reached != members:
        raise NotASubgroup("W_H is not generated by its simple reflections")


def left_cosets(W_G, W_H):
    """One representative per left coset ``w W_H``: the shortest element,
    ties broken lexicographically on the reduced word."""
    _check_subgroup(W_G, W_H)
    h_perms = [h.perm for h in W_H]
    assigned = set()
    reps = []
    for w in sorted(W_G, key=lambda e: (len(e.word), e.word)):
        if w.perm in assigned:
            continue
        reps.append(w)
        get = w.perm.__getitem__
        for hp in h_perms:
            assigned.add(tuple(map(get, hp)))
    return CosetList(tuple(reps), len(W_H))


def inversion_count_outside(w, sys_G, sys_H):
    """Number of positive roots ``a`` of G outside H whose twisted functional
    ``a ∘ w^{-1}`` is negative.

    As a functional on the torus, ``a ∘ w^{-1}`` is ``w(a)`` in the standard
    action on roots; this is the form that is constant in parity on each left
    coset ``w W(H)``.
    """
    outside = [a for a in sys_G.positives if a not in sys_H]
    pos = sys_G.positive_set
    return sum(1 for a in outside if act(w, a) not in pos)


def weyl_order(family, rank):
    from math import factorial

    family = family.upper()
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {"G2": 12, "F4": 1152}[family]
