import pytest

from sigcalc.biquot import BiquotientSpec, EmbeddingSpec, Factor
from sigcalc.cli import parse_config, read_config_text
from sigcalc.liealg import GroupElement

G1 = [[1, 6, "1"], [2, 1, "-1"], [3, 2, "1"], [4, 3, "1"], [5, 4, "1"], [6, 5, "1"]]
G2 = [[1, 1, "1"], [2, 2, "-1"], [3, 6, "1"], [4, 3, "1"], [5, 4, "1"], [6, 5, "1"]]
G3 = [[1, 1, "1"], [2, 2, "-1"], [3, 3, "1"], [4, 4, "1"], [5, 6, "1"], [6, 5, "1"]]

HP2_EMBEDDING = EmbeddingSpec([
    Factor.su(2, left_blocks=[[1, 2], [3, 4], [5, 6]]),
    Factor.su(5, right_blocks=[[1, 2, 3, 4, 5]]),
])
Z6 = (0,) * 6


def hp2_reps():
    return tuple(GroupElement.from_triples(6, t) for t in (G1, G2, G3))


def hp2_spec(row=(1, 1, -1, -1, 0, 0), flipped=True, reps=True, circle=(1,)):
    return BiquotientSpec(6, HP2_EMBEDDING, [(row, Z6)], circle, hp2_reps() if reps else None, flipped)


def left_torus_rows(n):
    rows = []
    for m in range(n - 1):
        v = [0] * n
        v[m], v[m + 1] = 1, -1
        rows.append((tuple(v), (0,) * n))
    return rows


def bundled(name):
    return parse_config(read_config_text(name))


@pytest.fixture(scope="session")
def published_spec():
    return hp2_spec()


@pytest.fixture(scope="session")
def generic_spec():
    """The published's representatives with a generic circle, in general mode."""
    return hp2_spec(row=(3, 3, -1, -1, -2, -2), flipped=False)
