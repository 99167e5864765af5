"""Brute-force ground truth and randomized matrix corpora.

brute_force evaluates the defining conditions of every inverse kind literally,
over every element of a finite ring, vectorized against the cached operation
tables. It shares no algebra with the constructive paths in ginverse; the
theorem battery certifies that both agree. random_matrix_corpus supplies the
deterministic exact-rational tuple stream used where exhaustion is impossible.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ParseError
from .finite import ElementSet, FiniteRing
from .ginverse import ALL_KINDS
from .rings import El, MatrixRing, RingDescriptor


@dataclass
class SolutionSet:
    """Every valid inverse of one kind for one input tuple, by exhaustion."""

    descriptor: RingDescriptor
    kind: str
    inputs: tuple
    witnesses: ElementSet

    def __contains__(self, item):
        return item in self.witnesses

    def __len__(self):
        return len(self.witnesses)

    def __bool__(self):
        return len(self.witnesses) > 0


def member_mask(ring: FiniteRing, ideal_set: ElementSet):
    mask = np.zeros(ring.order, dtype=bool)
    if len(ideal_set):
        idx = np.fromiter(ideal_set.encodings, dtype=np.int64, count=len(ideal_set))
        mask[idx] = True
    return mask


def brute_force(kind: str, inputs, ring: FiniteRing = None, k: int = None) -> SolutionSet:
    """Complete witness set for `kind` by scanning the whole ring.

    inputs follows the verify() convention: (a,) for unary kinds, (a,b,c) for
    (b,c)-parameterized kinds, (a,v) for the v-core. k names the power for the
    pseudo-core kind. Kinds constrained by an ideal equality (rather than a
    membership) prefilter on their equations and test the equalities on the
    survivors only.
    """
    if kind not in ALL_KINDS:
        raise ParseError(f"unknown inverse kind {kind!r}")
    a = inputs[0]
    ring = ring if ring is not None else a.ring
    if not ring.is_finite:
        raise ParseError("brute force needs an enumerated finite ring")
    gs = ring.all_encodings()
    aa = a.payload
    sym = lambda vec: ring.star_vec(vec) == vec

    if kind in ("inner", "13", "mp"):
        ag = ring.mul_rvec(aa, gs)
        mask = ring.mul_vec(ag, aa) == aa
        if kind != "inner":
            mask &= sym(ag)
        if kind == "mp":
            ga = ring.mul_vec(gs, aa)
            mask &= sym(ga)
            mask &= ring.mul_pairwise(ga, gs) == gs
    elif kind == "14":
        ga = ring.mul_vec(gs, aa)
        mask = (ring.mul_rvec(aa, ga) == aa) & sym(ga)
    elif kind == "left-bc":
        _, b, c = inputs
        ab = (a * b).payload
        mask = (ring.mul_vec(gs, ab) == b.payload) & member_mask(
            ring, ring.left_ideal_set(c)
        )
    elif kind == "right-bc":
        _, b, c = inputs
        caz = ring.mul_rvec((c * a).payload, gs)
        mask = (caz == c.payload) & member_mask(ring, ring.right_ideal_set(b))
    elif kind == "left-dual-bc-core":
        _, b, c = inputs
        xab = ring.mul_vec(gs, (a * b).payload)
        mask = (
            (ring.mul_rvec(b.payload, xab) == b.payload)
            & sym(xab)
            & member_mask(ring, ring.left_ideal_set(c))
        )
    elif kind == "left-dual-core":
        xa = ring.mul_vec(gs, aa)
        mask = (
            (ring.mul_rvec(aa, xa) == aa)
            & sym(xa)
            & (ring.mul_pairwise(gs, xa) == gs)
        )
    elif kind == "left-dual-pseudo-core":
        if k is None:
            raise ParseError("pseudo-core enumeration needs the index k")
        ak = (a**k).payload
        xa = ring.mul_vec(gs, aa)
        mask = (
            (ring.mul_rvec(ak, xa) == ak)
            & sym(xa)
            & (ring.mul_pairwise(gs, xa) == gs)
        )
    elif kind == "left-dual-v-core":
        _, v = inputs
        xva = ring.mul_vec(gs, (v * a).payload)
        mask = (
            (ring.mul_rvec(aa, xva) == aa)
            & sym(xva)
            & (ring.mul_pairwise(gs, xva) == gs)
        )
    elif kind == "left-invertible":
        mask = ring.mul_vec(gs, aa) == ring.one.payload
    elif kind == "right-bc-core":
        _, b, c = inputs
        cax = ring.mul_rvec((c * a).payload, gs)
        mask = (
            (ring.mul_vec(cax, c.payload) == c.payload)
            & sym(cax)
            & member_mask(ring, ring.right_ideal_set(b))
        )
    elif kind == "strongly-left-bc":
        _, b, c = inputs
        xa = ring.mul_vec(gs, aa)
        pre = (ring.mul_pairwise(xa, gs) == gs) & member_mask(
            ring, ring.left_ideal_set(c)
        )
        mask = pre.copy()
        for enc in np.flatnonzero(pre):
            mask[enc] = ring.right_ideal_equal(ring.el(int(enc)), b)
    elif kind == "dual-bc-core":
        _, b, c = inputs
        yab = ring.mul_vec(gs, (a * b).payload)
        pre = ring.mul_rvec(b.payload, yab) == b.payload
        bs = b.star
        mask = pre.copy()
        for enc in np.flatnonzero(pre):
            y = ring.el(int(enc))
            mask[enc] = ring.right_ideal_equal(y, bs) and ring.left_ideal_equal(y, c)
    elif kind == "bc-core":
        _, b, c = inputs
        cax = ring.mul_rvec((c * a).payload, gs)
        pre = ring.mul_vec(cax, c.payload) == c.payload
        cs = c.star
        mask = pre.copy()
        for enc in np.flatnonzero(pre):
            x = ring.el(int(enc))
            mask[enc] = ring.right_ideal_equal(x, b) and ring.left_ideal_equal(x, cs)
    else:
        raise ParseError(f"no exhaustive scan for kind {kind!r}")

    return SolutionSet(
        descriptor=ring.descriptor,
        kind=kind,
        inputs=tuple(inputs),
        witnesses=ElementSet(ring, gs[mask]),
    )


_RATIONAL_RINGS = {}


def rational_matrix_ring(n: int) -> MatrixRing:
    """Shared n x n rational matrix ring with the transpose involution."""
    if n not in _RATIONAL_RINGS:
        _RATIONAL_RINGS[n] = MatrixRing(
            RingDescriptor(
                kind="matrix-ring", n=n, field="rationals", involution="transpose"
            )
        )
    return _RATIONAL_RINGS[n]


def _random_matrix(rng: random.Random, ring: MatrixRing, bound: int):
    """Zero with probability 0.1, an engineered rank-deficient product with
    probability 0.4, dense otherwise; entries are exact integers in [-bound, bound]."""
    n = ring.n
    roll = rng.random()
    ent = lambda: Fraction(rng.randint(-bound, bound))
    if roll < 0.1:
        return ring.zero
    if roll < 0.5:
        r = rng.randrange(0, n)
        if r == 0:
            return ring.zero
        left = [[ent() for _ in range(r)] for _ in range(n)]
        right = [[ent() for _ in range(n)] for _ in range(r)]
        rows = [
            [sum((left[i][t] * right[t][j] for t in range(r)), Fraction(0)) for j in range(n)]
            for i in range(n)
        ]
        return ring.el(rows)
    return ring.el([[ent() for _ in range(n)] for _ in range(n)])


def random_matrix_corpus(
    dims, bound: int, count: int, seed: int, arity: int = 3, filter_fn=None
):
    """Deterministic list of `count` same-ring rational matrix tuples.

    All positions of a tuple share one dimension drawn from `dims`. With
    filter_fn given, generation continues until `count` accepted tuples exist
    (used to restrict a corpus to e.g. v-core-invertible pairs).
    """
    dims = sorted(set(int(d) for d in dims))
    if not dims or dims[0] < 1:
        raise ParseError("corpus dims must be positive")
    if count < 0 or bound < 1:
        raise ParseError("corpus needs count >= 0 and bound >= 1")
    rng = random.Random(seed)
    out = []
    attempts = 0
    limit = 1000 * (count + 10)
    while len(out) < count:
        attempts += 1
        if attempts > limit:
            raise ParseError("corpus filter accepted too few tuples")
        ring = rational_matrix_ring(rng.choice(dims))
        tup = tuple(_random_matrix(rng, ring, bound) for _ in range(arity))
        if filter_fn is None or filter_fn(tup):
            out.append(tup)
    return out
