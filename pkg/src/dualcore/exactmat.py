"""Exact linear algebra over the scalar fields.

Matrices are immutable tuples of row tuples; rectangular shapes are allowed.
Every function takes the scalar field as its first argument and performs no
floating-point arithmetic. The deterministic solver policy is: pivots follow
ascending column order and free variables are set to zero, so all outputs are
canonical for a given input.
"""


def mat(rows):
    """Freeze a nested sequence into a tuple-of-tuples matrix."""
    return tuple(tuple(r) for r in rows)


def shape(a):
    return (len(a), len(a[0]) if a else 0)


def zeros(F, m, n):
    z = F.zero
    return tuple(tuple(z for _ in range(n)) for _ in range(m))


def eye(F, n):
    return tuple(
        tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n)
    )


def add(F, a, b):
    return tuple(
        tuple(F.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def sub(F, a, b):
    return tuple(
        tuple(F.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def neg(F, a):
    return tuple(tuple(F.neg(x) for x in r) for r in a)


def smul(F, s, a):
    return tuple(tuple(F.mul(s, x) for x in r) for r in a)


def mul(F, a, b):
    """Matrix product; inner dimension zero yields the zero matrix."""
    m, k = shape(a)
    k2, n = shape(b)
    if k != k2:
        raise ValueError(f"shape mismatch {shape(a)} x {shape(b)}")
    out = []
    for i in range(m):
        row = []
        for j in range(n):
            acc = F.zero
            for t in range(k):
                acc = F.add(acc, F.mul(a[i][t], b[t][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def transpose(a):
    m, n = shape(a)
    return tuple(tuple(a[i][j] for i in range(m)) for j in range(n))


def conj_entries(F, a):
    return tuple(tuple(F.conj(x) for x in r) for r in a)


def is_zero_matrix(F, a) -> bool:
    return all(F.is_zero(x) for r in a for x in r)


def rref(F, m):
    """Reduced row echelon form.

    Returns (rref matrix, pivot column indices, rank). Unique for a given
    input, which makes every construction built on it canonical.
    """
    rows = [list(r) for r in m]
    nrows, ncols = shape(m)
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if not F.is_zero(rows[i][col]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = F.inv(rows[r][col])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and not F.is_zero(rows[i][col]):
                factor = rows[i][col]
                rows[i] = [
                    F.sub(x, F.mul(factor, y)) for x, y in zip(rows[i], rows[r])
                ]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return mat(rows), tuple(pivots), r


def rank(F, a) -> int:
    return rref(F, a)[2]


def solve_right(F, m, t):
    """Solve m.x = t; returns None when no solution exists.

    Free variables are zero, so the output is canonical.
    """
    nrows, ncols = shape(m)
    trows, tcols = shape(t)
    if trows != nrows:
        raise ValueError("target row count mismatch")
    aug = tuple(m[i] + t[i] for i in range(nrows))
    red, pivots, _ = rref(F, aug)
    # a pivot inside the target block means the system is inconsistent
    if any(p >= ncols for p in pivots):
        return None
    x = [[F.zero] * tcols for _ in range(ncols)]
    for row_idx, p in enumerate(pivots):
        for j in range(tcols):
            x[p][j] = red[row_idx][ncols + j]
    return mat(x)


def solve_left(F, m, t):
    """Solve x.m = t via the transposed right-hand solve."""
    xt = solve_right(F, transpose(m), transpose(t))
    if xt is None:
        return None
    return transpose(xt)


def rank_factorization(F, a):
    """Full-rank factorization a = Fm.G with Fm n x r and G r x n.

    G is the nonzero rows of rref(a), Fm the pivot columns of a. For the zero
    matrix r = 0 and both factors are empty.
    """
    red, pivots, r = rref(F, a)
    nrows, _ = shape(a)
    G = red[:r]
    Fm = tuple(tuple(a[i][p] for p in pivots) for i in range(nrows))
    return Fm, G, r


def inner_inverse(F, a):
    """Deterministic g with a.g.a = a, from a rank factorization.

    One-sided inverses of the factors are computed with the solver policy
    rather than via gram matrices, which can be singular over prime fields.
    """
    nrows, ncols = shape(a)
    Fm, G, r = rank_factorization(F, a)
    if r == 0:
        return zeros(F, ncols, nrows)
    g_right = solve_right(F, G, eye(F, r))  # ncols x r, G.g_right = I
    f_left = solve_left(F, Fm, eye(F, r))  # r x nrows, f_left.Fm = I
    return mul(F, g_right, f_left)


def row_space_basis(F, a):
    """Canonical basis of the row space (nonzero rows of the rref)."""
    red, _, r = rref(F, a)
    return red[:r]


def null_space_basis(F, a):
    """Canonical basis of {v : a.v = 0}, one column vector per free column."""
    red, pivots, r = rref(F, a)
    _, ncols = shape(a)
    pivot_set = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        v = [F.zero] * ncols
        v[j] = F.one
        for row_idx, p in enumerate(pivots):
            v[p] = F.neg(red[row_idx][j])
        basis.append(tuple(v))
    return tuple(basis)


def _stack_rank(F, top, bottom):
    return rref(F, top + bottom)[2]


def left_ideal_contains(F, x, c) -> bool:
    """Rx within Rc: row space containment."""
    return _stack_rank(F, c, x) == rank(F, c)


def right_ideal_contains(F, x, b) -> bool:
    """xR within bR: column space containment."""
    return left_ideal_contains(F, transpose(x), transpose(b))


def left_annihilator_contained(F, x, y) -> bool:
    """l(x) within l(y).

    A row vector kills x exactly when it is orthogonal to the column space
    of x, so the containment reduces to col(y) within col(x).
    """
    return right_ideal_contains(F, y, x)


def direct_sum_right_ideals(F, u, b):
    """Tests R = uR + r(b) as column spaces: col(u) + null(b) vs the full space.

    Returns (is_sum, is_direct); is_direct additionally requires the
    dimensions to add up with zero intersection.
    """
    n, _ = shape(u)
    u_cols = row_space_basis(F, transpose(u))
    b_null = null_space_basis(F, b)
    combined = u_cols + b_null
    total = rref(F, combined)[2] if combined else 0
    is_sum = total == n
    is_direct = is_sum and (len(u_cols) + len(b_null) == n)
    return is_sum, is_direct


def direct_sum_left_ideals(F, u, c):
    """Tests R = Ru + l(c); the mirror of the right-ideal test under transpose."""
    return direct_sum_right_ideals(F, transpose(u), transpose(c))
