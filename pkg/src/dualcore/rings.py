"""Ring descriptors, wrapped elements and the *-ring operation contract.

A ring object exposes arithmetic on opaque payloads plus the solving and
ideal-membership hooks the inverse algorithms need. Elements are immutable
`El` values tied to one descriptor; elements of different descriptors never
interoperate.
"""

from dataclasses import dataclass

from . import exactmat
from .errors import DescriptorMismatch, NotIdempotent, ParseError
from .scalars import GaussianRationalField, field_from_tag


@dataclass(frozen=True)
class RingDescriptor:
    """Identifies one concrete *-ring instance.

    kind "matrix-ring": n x n matrices over `field` with involution
    "transpose" or "conjugate-transpose".
    kind "Zn": integers mod n with the identity involution.
    kind "MatZp": enumerated k x k matrices over Z_p (p in {2,3}, k in {1,2})
    with the transpose involution.
    """

    kind: str
    n: int = 0
    field: str = ""
    involution: str = ""
    p: int = 0

    def validate(self):
        if self.kind == "matrix-ring":
            if self.n < 1:
                raise ParseError("matrix dimension must be >= 1")
            if self.involution not in ("transpose", "conjugate-transpose"):
                raise ParseError(f"unknown involution {self.involution!r}")
            if (
                self.involution == "conjugate-transpose"
                and self.field != "gaussian-rationals"
            ):
                raise ParseError(
                    "conjugate-transpose only pairs with gaussian-rationals"
                )
            field_from_tag(self.field)
        elif self.kind == "Zn":
            if self.n < 2:
                raise ParseError("Zn modulus must be >= 2")
        elif self.kind == "MatZp":
            if self.p not in (2, 3):
                raise ParseError("MatZp characteristic must be 2 or 3")
            if self.n not in (1, 2):
                raise ParseError("MatZp dimension must be 1 or 2")
        else:
            raise ParseError(f"unknown ring kind {self.kind!r}")
        return self

    def to_json(self):
        if self.kind == "matrix-ring":
            return {
                "kind": "matrix-ring",
                "field": self.field,
                "n": self.n,
                "involution": self.involution,
            }
        if self.kind == "Zn":
            return {"kind": "Zn", "n": self.n}
        return {"kind": "MatZp", "p": self.p, "k": self.n}

    def short(self) -> str:
        if self.kind == "Zn":
            return f"Zn:{self.n}"
        if self.kind == "MatZp":
            return f"MatZp:{self.n}x{self.n}:p{self.p}"
        return f"matrix-ring:{self.field}:{self.n}:{self.involution}"


def descriptor_from_json(obj) -> RingDescriptor:
    """Build a descriptor from an inline JSON object or a short string form."""
    if isinstance(obj, str):
        return _descriptor_from_string(obj)
    if not isinstance(obj, dict):
        raise ParseError(f"bad ring descriptor {obj!r}")
    kind = obj.get("kind")
    if kind == "matrix-ring":
        d = RingDescriptor(
            kind="matrix-ring",
            n=int(obj.get("n", 0)),
            field=obj.get("field", ""),
            involution=obj.get("involution", "transpose"),
        )
    elif kind == "Zn":
        d = RingDescriptor(kind="Zn", n=int(obj.get("n", 0)))
    elif kind == "MatZp":
        d = RingDescriptor(
            kind="MatZp", n=int(obj.get("k", 0)), p=int(obj.get("p", 0))
        )
    else:
        raise ParseError(f"unknown ring kind {kind!r}")
    return d.validate()


def _descriptor_from_string(s: str) -> RingDescriptor:
    parts = s.strip().split(":")
    try:
        if parts[0] == "Zn" and len(parts) == 2:
            return RingDescriptor(kind="Zn", n=int(parts[1])).validate()
        if parts[0] == "MatZp" and len(parts) == 3:
            dims, pspec = parts[1], parts[2]
            k1, _, k2 = dims.partition("x")
            if k1 != k2 or not pspec.startswith("p"):
                raise ParseError(f"bad ring descriptor string {s!r}")
            return RingDescriptor(
                kind="MatZp", n=int(k1), p=int(pspec[1:])
            ).validate()
    except ValueError as exc:
        raise ParseError(f"bad ring descriptor string {s!r}") from exc
    raise ParseError(f"bad ring descriptor string {s!r}")


class El:
    """One element of a specific ring; arithmetic delegates to the ring."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring, payload):
        self.ring = ring
        self.payload = payload

    def _check(self, other):
        if self.ring.descriptor != other.ring.descriptor:
            raise DescriptorMismatch(
                f"{self.ring.descriptor.short()} vs {other.ring.descriptor.short()}"
            )

    def __add__(self, other):
        self._check(other)
        return El(self.ring, self.ring._add(self.payload, other.payload))

    def __sub__(self, other):
        self._check(other)
        return El(self.ring, self.ring._sub(self.payload, other.payload))

    def __mul__(self, other):
        self._check(other)
        return El(self.ring, self.ring._mul(self.payload, other.payload))

    def __neg__(self):
        return El(self.ring, self.ring._neg(self.payload))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined here")
        acc = self.ring.one
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    @property
    def star(self):
        return El(self.ring, self.ring._star(self.payload))

    def __eq__(self, other):
        if not isinstance(other, El):
            return NotImplemented
        return (
            self.ring.descriptor == other.ring.descriptor
            and self.payload == other.payload
        )

    def __hash__(self):
        return hash((self.ring.descriptor, self.payload))

    def __repr__(self):
        return f"El({self.ring.descriptor.short()}, {self.payload!r})"


@dataclass(frozen=True)
class PierceBlocks:
    """The four corner blocks of an element relative to an idempotent."""

    p: El
    a1: El
    a2: El
    a3: El
    a4: El


def is_idempotent(e: El) -> bool:
    return e * e == e


def is_projection(p: El) -> bool:
    return p * p == p and p.star == p


def pierce_blocks(a: El, p: El) -> PierceBlocks:
    """Split a into pap, pa(1-p), (1-p)ap, (1-p)a(1-p)."""
    if not is_idempotent(p):
        raise NotIdempotent("pierce decomposition needs an idempotent")
    q = a.ring.one - p
    return PierceBlocks(
        p=p, a1=p * a * p, a2=p * a * q, a3=q * a * p, a4=q * a * q
    )


class MatrixRing:
    """n x n matrices over an exact scalar field."""

    is_finite = False

    def __init__(self, descriptor: RingDescriptor):
        descriptor.validate()
        if descriptor.kind != "matrix-ring":
            raise ParseError("MatrixRing needs a matrix-ring descriptor")
        self.descriptor = descriptor
        self.F = field_from_tag(descriptor.field)
        self.n = descriptor.n
        self._conjugating = descriptor.involution == "conjugate-transpose"
        if self._conjugating and not isinstance(self.F, GaussianRationalField):
            raise ParseError("conjugate-transpose needs gaussian rationals")
        self.zero = El(self, exactmat.zeros(self.F, self.n, self.n))
        self.one = El(self, exactmat.eye(self.F, self.n))

    def el(self, rows) -> El:
        m = exactmat.mat(rows)
        if len(m) != self.n or any(len(r) != self.n for r in m):
            raise ParseError(f"payload is not a {self.n} x {self.n} grid")
        return El(self, m)

    def parse_payload(self, rows) -> El:
        """Build an element from a 2-D array of scalar strings."""
        if not isinstance(rows, list):
            raise ParseError("matrix payload must be a 2-D array of strings")
        parsed = []
        for r in rows:
            if not isinstance(r, list):
                raise ParseError("matrix payload must be a 2-D array of strings")
            parsed.append([self.F.parse(str(x)) for x in r])
        return self.el(parsed)

    def fmt_payload(self, a: El):
        return [[self.F.fmt(x) for x in row] for row in a.payload]

    # payload arithmetic
    def _add(self, x, y):
        return exactmat.add(self.F, x, y)

    def _sub(self, x, y):
        return exactmat.sub(self.F, x, y)

    def _mul(self, x, y):
        return exactmat.mul(self.F, x, y)

    def _neg(self, x):
        return exactmat.neg(self.F, x)

    def _star(self, x):
        t = exactmat.transpose(x)
        return exactmat.conj_entries(self.F, t) if self._conjugating else t

    # solving hooks
    def solve_left_mul(self, m: El, t: El):
        x = exactmat.solve_left(self.F, m.payload, t.payload)
        return None if x is None else El(self, x)

    def solve_right_mul(self, m: El, t: El):
        x = exactmat.solve_right(self.F, m.payload, t.payload)
        return None if x is None else El(self, x)

    def inner_inverse(self, a: El):
        return El(self, exactmat.inner_inverse(self.F, a.payload))

    def inner_inverses(self, a: El):
        # matrices over a field are always regular; only the canonical
        # representative is enumerable here
        yield self.inner_inverse(a)

    def is_regular(self, a: El) -> bool:
        return True

    # ideal and annihilator tests at subspace level
    def in_left_ideal(self, x: El, c: El) -> bool:
        return exactmat.left_ideal_contains(self.F, x.payload, c.payload)

    def in_right_ideal(self, x: El, b: El) -> bool:
        return exactmat.right_ideal_contains(self.F, x.payload, b.payload)

    def left_annihilator_contained(self, x: El, y: El) -> bool:
        return exactmat.left_annihilator_contained(self.F, x.payload, y.payload)

    def left_ideal_equal(self, x: El, c: El) -> bool:
        return self.in_left_ideal(x, c) and self.in_left_ideal(c, x)

    def right_ideal_equal(self, x: El, b: El) -> bool:
        return self.in_right_ideal(x, b) and self.in_right_ideal(b, x)

    def direct_sum_right(self, u: El, b: El):
        return exactmat.direct_sum_right_ideals(self.F, u.payload, b.payload)

    def direct_sum_left(self, u: El, c: El):
        return exactmat.direct_sum_left_ideals(self.F, u.payload, c.payload)

    def elements(self):
        raise ParseError("matrix rings over infinite fields are not enumerable")


def ring_from_descriptor(descriptor: RingDescriptor):
    descriptor.validate()
    if descriptor.kind == "matrix-ring":
        return MatrixRing(descriptor)
    from .finite import FiniteRing

    return FiniteRing(descriptor)
