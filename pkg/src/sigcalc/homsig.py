"""Signature of equal-rank homogeneous spaces from root combinatorics.

The circle-action fixed-point formula reduces the signature of a compact
oriented manifold with isolated fixed points to a signed count: every fixed
point contributes ``(-1)^(number of negative rotation numbers)``. For G/H the
fixed points of the maximal torus are the cosets W(G)/W(H), and the rotation
numbers at ``wH`` are the roots of G outside H twisted by ``w``.
"""
from dataclasses import dataclass, field

from .weyl import generate_weyl, inversion_count_outside, left_cosets


@dataclass(frozen=True)
class WeightSignSummary:
    """Per fixed point: parity of the number of negative rotation numbers,
    optionally with the rotation numbers themselves."""

    parities: tuple
    m_lists: tuple = field(default=None)

    def __post_init__(self):
        if self.m_lists is not None:
            if len(self.m_lists) != len(self.parities):
                raise ValueError("one rotation-number list per fixed point")
            for ms, bit in zip(self.m_lists, self.parities):
                if any(m == 0 for m in ms):
                    raise ValueError("rotation numbers must be nonzero")
                if sum(1 for m in ms if m < 0) % 2 != bit % 2:
                    raise ValueError("parity bit disagrees with rotation numbers")

    @classmethod
    def from_rotation_numbers(cls, m_lists):
        m_lists = tuple(tuple(ms) for ms in m_lists)
        return cls(tuple(sum(1 for m in ms if m < 0) % 2 for ms in m_lists), m_lists)


def signature_kernel(summary):
    return sum(-1 if bit % 2 else 1 for bit in summary.parities)


def homogeneous_dimension(sys_G, sys_H):
    """Real dimension of G/H."""
    return 2 * sum(1 for a in sys_G.positives if a not in sys_H)


def coset_parities(sys_G, sys_H, W_G=None, W_H=None):
    W_G = W_G or generate_weyl(sys_G)
    W_H = W_H or generate_weyl(sys_H, within=sys_G)
    cosets = left_cosets(W_G, W_H)
    return cosets, WeightSignSummary(
        tuple(inversion_count_outside(w, sys_G, sys_H) % 2 for w in cosets)
    )


def homogeneous_signature(sys_G, sys_H):
    """Signature of G/H up to a global sign (0 unless 4 divides the dimension)."""
    if homogeneous_dimension(sys_G, sys_H) % 4:
        return 0
    _, summary = coset_parities(sys_G, sys_H)
    return signature_kernel(summary)


def euler_characteristic_equal_rank(sys_G, sys_H):
    W_G = generate_weyl(sys_G)
    W_H = generate_weyl(sys_H, within=sys_G)
    return len(W_G) // len(W_H)
