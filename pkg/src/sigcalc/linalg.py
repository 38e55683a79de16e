"""Exact linear algebra over Q and Z.

Matrices are plain lists of rows. Rational routines coerce entries to
:class:`fractions.Fraction`; integer routines keep Python ints.
"""
from fractions import Fraction


def to_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def transpose(rows, ncols=None):
    if not rows:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*rows)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def rref(rows):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``pivots`` lists the pivot column of each
    nonzero row of ``R``.
    """
    m = to_fractions(rows)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        # only the nonzero entries of the pivot row change other rows
        support = [(j, y) for j, y in enumerate(m[r]) if y]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                row = m[i]
                for j, y in support:
                    row[j] = row[j] - f * y
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of ``{x : A x = 0}``, one vector per free column, in column order."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    n = len(rows[0])
    r, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve(a, b):
    """One solution ``x`` of ``A x = b`` or ``None`` if inconsistent.

    Free variables are set to zero, so the answer is unique whenever ``A`` has
    full column rank.
    """
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    r, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        x[p] = r[i][n]
    return x


def det(rows):
    m = to_fractions(rows)
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(a):
    """Smith normal form of an integer matrix.

    Returns ``(U, D, V)`` with ``U * A * V == D``, ``U`` and ``V`` unimodular,
    and ``D`` diagonal with nonnegative entries each dividing the next.
    """
    m = [list(map(int, row)) for row in a]
    nr = len(m)
    nc = len(m[0]) if m else 0
    u = identity(nr)
    v = identity(nc)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for row in m:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    t = 0
    while t < min(nr, nc):
        nonzero = [(abs(m[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if m[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, nr):
                q = m[i][t] // m[t][t]
                if q:
                    add_row(i, t, -q)
                if m[i][t]:
                    done = False
            for j in range(t + 1, nc):
                q = m[t][j] // m[t][t]
                if q:
                    add_col(j, t, -q)
                if m[t][j]:
                    done = False
            if done:
                # divisibility: fold any offending row into row t and retry
                bad = next(
                    (i for i in range(t + 1, nr) for j in range(t + 1, nc) if m[i][j] % m[t][t]),
                    None,
                )
                if bad is None:
                    break
                add_row(t, bad, 1)
                continue
            _, pi, pj = min(
                (abs(m[i][j]), i, j)
                for i in range(t, nr)
                for j in range(t, nc)
                if m[i][j] and (i == t or j == t)
            )
            swap_rows(t, pi)
            swap_cols(t, pj)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, m, v


def elementary_divisors(a):
    _, d, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]
