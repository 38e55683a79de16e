"""Cross-checks run by ``sigcalc --check``.

Each check returns ``(passed, detail)``; detail is a short human-readable
string that ends up in the report.
"""
from .biquot import BiquotientSpec, biquotient_signature
from .homsig import homogeneous_dimension, homogeneous_signature
from .liealg import OrientationConvention
from .rootsys import build_root_system, sub_root_system
from .weyl import generate_weyl, inversion_count_outside, left_cosets

HOMOGENEOUS_CHECKS = ("coset-parity", "euler-count")
BIQUOTIENT_CHECKS = (
    "engine-equivalence",
    "euler-count",
    "orientation-reversal",
    "scaling",
    "homogeneous-agreement",
)
ALL_CHECKS = tuple(dict.fromkeys(HOMOGENEOUS_CHECKS + BIQUOTIENT_CHECKS))


# -- homogeneous -------------------------------------------------------------

def coset_parity(sys_G, sys_H):
    """The parity of inversions outside H is constant on every left coset."""
    W_G = generate_weyl(sys_G)
    W_H = generate_weyl(sys_H, within=sys_G)
    cosets = left_cosets(W_G, W_H)
    for rep in cosets:
        bit = inversion_count_outside(rep, sys_G, sys_H) % 2
        for h in W_H:
            if inversion_count_outside(rep.compose(h), sys_G, sys_H) % 2 != bit:
                return False, f"parity changes inside the coset of word {rep.word}"
    return True, f"{len(cosets)} cosets, each of constant parity"


def brute_force_coset_count(W_G, W_H):
    """Number of left cosets by explicit orbit sweep, independent of the
    representative choice in ``left_cosets``."""
    unseen = {w.perm for w in W_G}
    h_perms = [h.perm for h in W_H]
    count = 0
    while unseen:
        p = unseen.pop()
        count += 1
        for hp in h_perms:
            unseen.discard(tuple(p[k] for k in hp))
    return count


def euler_count_homogeneous(sys_G, sys_H):
    W_G = generate_weyl(sys_G)
    W_H = generate_weyl(sys_H, within=sys_G)
    ratio = len(W_G) // len(W_H)
    brute = brute_force_coset_count(W_G, W_H)
    listed = len(left_cosets(W_G, W_H))
    ok = ratio == brute == listed and len(W_G) % len(W_H) == 0
    return ok, f"|W_G|/|W_H| = {ratio}, orbit sweep {brute}, coset list {listed}"


# -- biquotient --------------------------------------------------------------

def engine_equivalence(report):
    bad = [fp.rep.short() for fp in report.fixed_points if fp.contribution != fp.contribution_orientdet]
    if bad:
        return False, "root-sign and determinant routes differ at " + ", ".join(bad)
    return True, f"both routes agree at {len(report.fixed_points)} fixed points"


def euler_count_biquotient(report):
    if "euler_expected" not in report.info:
        return None, "no fixed-point count for a rank-deficient H"
    found = len(report.fixed_points)
    expected = report.info.get("euler_expected")
    return found == expected, f"{found} fixed points, |W_G|/|W_H| = {expected}"


def orientation_reversal(spec, report, convention=None):
    convention = convention or OrientationConvention(spec.n)
    flipped = biquotient_signature(spec, convention.reversed())
    ok = flipped.contributions == [-c for c in report.contributions]
    return ok, f"contributions {report.contributions} -> {flipped.contributions}"


def scaling(spec, report, factor=3):
    scaled = biquotient_signature(spec.with_circle(tuple(factor * c for c in spec.circle)))
    ok = scaled.contributions == report.contributions
    return ok, f"circle x{factor}: contributions {scaled.contributions}"


def homogeneous_subsystem(spec):
    """Root subsystem of A_{n-1} for a homogeneous encoding ``H in {e} x G``,
    or None if ``spec`` is not of that shape."""
    if not isinstance(spec, BiquotientSpec):
        return None
    n = spec.n
    gens = []
    for f in spec.embedding.factors:
        if f.kind == "SU":
            if f.left_blocks or len(f.right_blocks) != 1:
                return None
            block = f.right_blocks[0]
            for a, b in zip(block, block[1:]):
                r = [0] * n
                r[a - 1], r[b - 1] = 1, -1
                gens.append(tuple(r))
        elif any(f.left_weights):
            return None
    if any(any(r) for _, r in spec.tilde_torus):
        return None
    sys_G = build_root_system("A", n - 1)
    return sys_G, sub_root_system(sys_G, gens)


def homogeneous_agreement(spec, report):
    pair = homogeneous_subsystem(spec)
    if pair is None:
        return None, "not a homogeneous encoding"
    sys_G, sys_H = pair
    if homogeneous_dimension(sys_G, sys_H) != report.info.get("dim"):
        return False, "dimension of the encoding differs from G/H"
    hom = homogeneous_signature(sys_G, sys_H)
    ok = abs(hom) == abs(report.signature_up_to_sign)
    return ok, f"|homogeneous| = {abs(hom)}, |biquotient| = {abs(report.signature_up_to_sign)}"


def run_checks(config, report, names=None):
    """Run the named checks (default: all applicable to the mode)."""
    results = {}
    if config.mode == "homogeneous":
        names = names or HOMOGENEOUS_CHECKS
        sys_G, sys_H = config.root_systems()
        table = {"coset-parity": lambda: coset_parity(sys_G, sys_H),
                 "euler-count": lambda: euler_count_homogeneous(sys_G, sys_H)}
    else:
        names = names or BIQUOTIENT_CHECKS
        spec = config.spec
        table = {
            "engine-equivalence": lambda: engine_equivalence(report),
            "euler-count": lambda: euler_count_biquotient(report),
            "orientation-reversal": lambda: orientation_reversal(spec, report),
            "scaling": lambda: scaling(spec, report),
            "homogeneous-agreement": lambda: homogeneous_agreement(spec, report),
        }
        if not report.fixed_points:
            # rank-deficient H: sigma = 0 without any fixed-point data
            table = {name: (lambda: (None, "no fixed points (rank-deficient H)")) for name in table}
    for name in names:
        if name not in table:
            results[name] = (None, f"not applicable in {config.mode} mode")
            continue
        results[name] = table[name]()
    return results
