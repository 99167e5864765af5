"""Enumerated finite *-rings: Z_n and M_k(Z_p) for k <= 2, p in {2, 3}.

Elements are canonical integer encodings in [0, |R|). Z_n uses the residue
itself; M_k(Z_p) uses base-p digits of the row-major entry list, most
significant digit first, so ascending encodings enumerate matrices in
row-major lexicographic order.

Operation tables are cached for rings of order <= 256 (which covers the whole
matrix catalogue); larger Z_n compute modularly on the fly. The vectorized
scans run on the selected kernel backend.
"""

import numpy as np

from ._backend import select_backend
from .errors import ParseError
from .rings import El, RingDescriptor

TABLE_CACHE_LIMIT = 256
ORDER_LIMIT = 6561


class ElementSet:
    """A sorted, duplicate-free set of element encodings within one ring."""

    __slots__ = ("ring", "encodings")

    def __init__(self, ring, encodings):
        self.ring = ring
        self.encodings = tuple(sorted(set(int(e) for e in encodings)))

    def __contains__(self, item):
        enc = item.payload if isinstance(item, El) else int(item)
        return enc in self._as_set()

    def _as_set(self):
        return set(self.encodings)

    def __len__(self):
        return len(self.encodings)

    def __iter__(self):
        return iter(self.encodings)

    def __eq__(self, other):
        return (
            isinstance(other, ElementSet)
            and self.ring.descriptor == other.ring.descriptor
            and self.encodings == other.encodings
        )

    def __hash__(self):
        return hash((self.ring.descriptor, self.encodings))

    def __repr__(self):
        return f"ElementSet({list(self.encodings)})"


class FiniteRing:
    is_finite = True

    def __init__(self, descriptor: RingDescriptor, validate: bool = False):
        descriptor.validate()
        if descriptor.kind == "Zn":
            self.order = descriptor.n
            self._modulus = descriptor.n
            self._mat = None
        elif descriptor.kind == "MatZp":
            self._modulus = None
            self._mat = (descriptor.p, descriptor.n)
            self.order = descriptor.p ** (descriptor.n * descriptor.n)
        else:
            raise ParseError("FiniteRing needs a Zn or MatZp descriptor")
        if self.order > ORDER_LIMIT:
            raise ParseError(f"ring order {self.order} exceeds the catalogue bound")
        self.descriptor = descriptor
        self.kernels = select_backend()
        self._build_tables()
        self.zero = El(self, self.encode_zero())
        self.one = El(self, self.encode_one())
        self._ideal_cache = {}
        if validate:
            self.validate_axioms()

    # encodings
    def _decode_mat(self, enc: int):
        p, k = self._mat
        digits = []
        for _ in range(k * k):
            digits.append(enc % p)
            enc //= p
        digits.reverse()
        return tuple(tuple(digits[i * k + j] for j in range(k)) for i in range(k))

    def _encode_mat(self, m) -> int:
        p, k = self._mat
        enc = 0
        for i in range(k):
            for j in range(k):
                enc = enc * p + (m[i][j] % p)
        return enc

    def encode_zero(self) -> int:
        return 0

    def encode_one(self) -> int:
        if self._modulus is not None:
            return 1 % self._modulus
        p, k = self._mat
        return self._encode_mat(
            tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
        )

    # scalar payload arithmetic
    def _mul_raw(self, x: int, y: int) -> int:
        if self._modulus is not None:
            return (x * y) % self._modulus
        p, k = self._mat
        a, b = self._decode_mat(x), self._decode_mat(y)
        return self._encode_mat(
            tuple(
                tuple(sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(k))
                for i in range(k)
            )
        )

    def _add_raw(self, x: int, y: int) -> int:
        if self._modulus is not None:
            return (x + y) % self._modulus
        p, k = self._mat
        a, b = self._decode_mat(x), self._decode_mat(y)
        return self._encode_mat(
            tuple(tuple((a[i][j] + b[i][j]) % p for j in range(k)) for i in range(k))
        )

    def _star_raw(self, x: int) -> int:
        if self._modulus is not None:
            return x
        p, k = self._mat
        a = self._decode_mat(x)
        return self._encode_mat(tuple(tuple(a[j][i] for j in range(k)) for i in range(k)))

    def _build_tables(self):
        n = self.order
        if self._modulus is not None:
            idx = np.arange(n, dtype=np.int64)
            self.star_table = idx.copy()
            if n <= TABLE_CACHE_LIMIT:
                self.mul_table = (idx[:, None] * idx[None, :]) % n
                self.add_table = (idx[:, None] + idx[None, :]) % n
            else:
                self.mul_table = None
                self.add_table = None
        else:
            self.mul_table = np.empty((n, n), dtype=np.int64)
            self.add_table = np.empty((n, n), dtype=np.int64)
            self.star_table = np.empty(n, dtype=np.int64)
            for i in range(n):
                self.star_table[i] = self._star_raw(i)
                for j in range(n):
                    self.mul_table[i, j] = self._mul_raw(i, j)
                    self.add_table[i, j] = self._add_raw(i, j)

    # El payload hooks
    def _mul(self, x, y):
        if self.mul_table is not None:
            return int(self.mul_table[x, y])
        return self._mul_raw(x, y)

    def _add(self, x, y):
        if self.add_table is not None:
            return int(self.add_table[x, y])
        return self._add_raw(x, y)

    def _sub(self, x, y):
        return self._add(x, self._neg(y))

    def _neg(self, x):
        if self._modulus is not None:
            return (-x) % self._modulus
        p, k = self._mat
        a = self._decode_mat(x)
        return self._encode_mat(
            tuple(tuple((-a[i][j]) % p for j in range(k)) for i in range(k))
        )

    def _star(self, x):
        return int(self.star_table[x])

    # element construction and formatting
    def el(self, enc: int) -> El:
        enc = int(enc)
        if not 0 <= enc < self.order:
            raise ParseError(f"encoding {enc} out of range [0, {self.order})")
        return El(self, enc)

    def parse_payload(self, payload) -> El:
        if not isinstance(payload, int):
            raise ParseError("finite-ring payload must be an integer encoding")
        return self.el(payload)

    def fmt_payload(self, a: El):
        return a.payload

    def elements(self):
        """Each element exactly once, in canonical encoding order."""
        for enc in range(self.order):
            yield El(self, enc)

    def all_encodings(self):
        return np.arange(self.order, dtype=np.int64)

    # vectorized primitives over encoding arrays
    def mul_vec(self, xs, y: int):
        if self.mul_table is not None:
            return self.kernels.mul_vec(self.mul_table, xs, y)
        return (xs * y) % self._modulus

    def mul_rvec(self, x: int, ys):
        if self.mul_table is not None:
            return self.kernels.mul_rvec(self.mul_table, x, ys)
        return (x * ys) % self._modulus

    def mul_pairwise(self, xs, ys):
        if self.mul_table is not None:
            return self.kernels.mul_pairwise(self.mul_table, xs, ys)
        return (xs * ys) % self._modulus

    def star_vec(self, xs):
        if self._modulus is not None:
            return xs
        return self.kernels.unary_map(self.star_table, xs)

    def outer_add(self, xs, ys):
        if self.add_table is not None:
            return self.kernels.outer_add(self.add_table, xs, ys)
        return (xs[:, None] + ys[None, :]) % self._modulus

    # ideals, annihilators and solving by exhaustion
    def left_ideal_set(self, c: El) -> ElementSet:
        """Rc as a literal element set."""
        key = ("Rc", c.payload)
        if key not in self._ideal_cache:
            prods = self.mul_vec(self.all_encodings(), c.payload)
            self._ideal_cache[key] = ElementSet(self, np.unique(prods))
        return self._ideal_cache[key]

    def right_ideal_set(self, b: El) -> ElementSet:
        key = ("bR", b.payload)
        if key not in self._ideal_cache:
            prods = self.mul_rvec(b.payload, self.all_encodings())
            self._ideal_cache[key] = ElementSet(self, np.unique(prods))
        return self._ideal_cache[key]

    def left_annihilator_set(self, x: El) -> ElementSet:
        """l(x) = {r : r.x = 0}."""
        key = ("l", x.payload)
        if key not in self._ideal_cache:
            xs = self.all_encodings()
            mask = self.mul_vec(xs, x.payload) == self.encode_zero()
            self._ideal_cache[key] = ElementSet(self, xs[mask])
        return self._ideal_cache[key]

    def right_annihilator_set(self, b: El) -> ElementSet:
        """r(b) = {x : b.x = 0}."""
        key = ("r", b.payload)
        if key not in self._ideal_cache:
            xs = self.all_encodings()
            mask = self.mul_rvec(b.payload, xs) == self.encode_zero()
            self._ideal_cache[key] = ElementSet(self, xs[mask])
        return self._ideal_cache[key]

    def in_left_ideal(self, x: El, c: El) -> bool:
        return x.payload in self.left_ideal_set(c)

    def in_right_ideal(self, x: El, b: El) -> bool:
        return x.payload in self.right_ideal_set(b)

    def left_annihilator_contained(self, x: El, y: El) -> bool:
        return self.left_annihilator_set(x)._as_set() <= self.left_annihilator_set(y)._as_set()

    def left_ideal_equal(self, x: El, c: El) -> bool:
        return self.left_ideal_set(x) == self.left_ideal_set(c)

    def right_ideal_equal(self, x: El, b: El) -> bool:
        return self.right_ideal_set(x) == self.right_ideal_set(b)

    def direct_sum_right(self, u: El, b: El):
        """R = uR + r(b), with directness."""
        return set_direct_sum(self.right_ideal_set(u), self.right_annihilator_set(b), self)

    def direct_sum_left(self, u: El, c: El):
        """R = Ru + l(c), with directness."""
        return set_direct_sum(self.left_ideal_set(u), self.left_annihilator_set(c), self)

    def solve_left_mul(self, m: El, t: El):
        """First x in canonical order with x.m = t, or None."""
        hits = np.flatnonzero(self.mul_vec(self.all_encodings(), m.payload) == t.payload)
        return El(self, int(hits[0])) if hits.size else None

    def solve_right_mul(self, m: El, t: El):
        hits = np.flatnonzero(self.mul_rvec(m.payload, self.all_encodings()) == t.payload)
        return El(self, int(hits[0])) if hits.size else None

    def _inner_mask(self, a: El):
        if self.mul_table is not None:
            return self.kernels.scan_inner(self.mul_table, a.payload)
        gs = self.all_encodings()
        ag = self.mul_rvec(a.payload, gs)
        return self.mul_vec(ag, a.payload) == a.payload

    def inner_inverse(self, a: El):
        """First g with a.g.a = a in canonical order; None when a is not regular."""
        hits = np.flatnonzero(self._inner_mask(a))
        return El(self, int(hits[0])) if hits.size else None

    def inner_inverses(self, a: El):
        return [El(self, int(g)) for g in np.flatnonzero(self._inner_mask(a))]

    def is_regular(self, a: El) -> bool:
        return self.inner_inverse(a) is not None

    def validate_axioms(self):
        """Exhaustively check the ring and involution laws; raises on failure."""
        els = [El(self, i) for i in range(self.order)]
        one, zero = self.one, self.zero
        for x in els:
            assert x + zero == x and x * one == x and one * x == x
            assert x + (-x) == zero
            assert x.star.star == x
        for x in els:
            for y in els:
                assert x + y == y + x
                assert (x * y).star == y.star * x.star
                assert (x + y).star == x.star + y.star
        if self.order <= 16:
            for x in els:
                for y in els:
                    for z in els:
                        assert (x * y) * z == x * (y * z)
                        assert x * (y + z) == x * y + x * z
                        assert (x + y) * z == x * z + y * z
        return True


def set_direct_sum(a_set: ElementSet, b_set: ElementSet, ring: FiniteRing):
    """Tests R = A + B for additive subgroups A, B; directness means A ∩ B = {0}."""
    xs = np.fromiter(a_set.encodings, dtype=np.int64, count=len(a_set))
    ys = np.fromiter(b_set.encodings, dtype=np.int64, count=len(b_set))
    sums = np.unique(ring.outer_add(xs, ys))
    is_sum = sums.size == ring.order
    zero = ring.encode_zero()
    inter = a_set._as_set() & b_set._as_set()
    is_direct = is_sum and inter == {zero}
    return is_sum, is_direct


def solve_all(ring: FiniteRing, predicate) -> ElementSet:
    """All x in the ring satisfying a pure predicate, in canonical order."""
    return ElementSet(ring, [x.payload for x in ring.elements() if predicate(x)])
