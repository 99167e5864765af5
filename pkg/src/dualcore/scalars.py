"""Exact scalar fields: rationals, gaussian rationals and prime fields.

All arithmetic is routed through a field object so that matrices can hold
plain hashable payloads (Fraction, (Fraction, Fraction) pairs, small ints)
with no floating point anywhere.
"""

from fractions import Fraction

from .errors import ParseError


def _parse_fraction(s: str) -> Fraction:
    s = s.strip()
    if not s:
        raise ParseError("empty scalar string")
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            n = int(num)
            d = int(den)
        except ValueError as exc:
            raise ParseError(f"bad rational {s!r}") from exc
        if d == 0:
            raise ParseError(f"zero denominator in {s!r}")
        return Fraction(n, d)
    try:
        return Fraction(int(s))
    except ValueError as exc:
        raise ParseError(f"bad rational {s!r}") from exc


def _fmt_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class RationalField:
    """Exact rational numbers backed by fractions.Fraction."""

    tag = "rationals"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def conj(self, x):
        return x

    def is_zero(self, x) -> bool:
        return x == 0

    def parse(self, s: str):
        return _parse_fraction(s)

    def fmt(self, x) -> str:
        return _fmt_fraction(x)

    def __repr__(self):
        return "RationalField()"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.tag)


class GaussianRationalField:
    """Numbers a + bi with exact rational a, b; conjugation negates b."""

    tag = "gaussian-rationals"
    zero = (Fraction(0), Fraction(0))
    one = (Fraction(1), Fraction(0))

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def sub(self, x, y):
        return (x[0] - y[0], x[1] - y[1])

    def mul(self, x, y):
        return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def neg(self, x):
        return (-x[0], -x[1])

    def inv(self, x):
        n = x[0] * x[0] + x[1] * x[1]
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return (x[0] / n, -x[1] / n)

    def conj(self, x):
        return (x[0], -x[1])

    def is_zero(self, x) -> bool:
        return x[0] == 0 and x[1] == 0

    def parse(self, s: str):
        """Accepts "a+bi", "a-bi", "bi", "i", "-i" and plain rationals "a"."""
        t = s.strip().replace(" ", "")
        if not t:
            raise ParseError("empty scalar string")
        if not t.endswith("i"):
            return (_parse_fraction(t), Fraction(0))
        body = t[:-1]
        # find the sign splitting real from imaginary; skip a leading sign
        split = -1
        for i in range(len(body) - 1, 0, -1):
            if body[i] in "+-" and body[i - 1] != "/":
                split = i
                break
        if split == -1:
            re_part, im_part = "", body
        else:
            re_part, im_part = body[:split], body[split:]
        if im_part in ("", "+"):
            im = Fraction(1)
        elif im_part == "-":
            im = Fraction(-1)
        else:
            im = _parse_fraction(im_part)
        re = _parse_fraction(re_part) if re_part else Fraction(0)
        return (re, im)

    def fmt(self, x) -> str:
        re, im = x
        if im == 0:
            return _fmt_fraction(re)
        im_str = f"{_fmt_fraction(im)}i"
        if re == 0:
            return im_str
        if im > 0:
            return f"{_fmt_fraction(re)}+{im_str}"
        return f"{_fmt_fraction(re)}{im_str}"

    def __repr__(self):
        return "GaussianRationalField()"

    def __eq__(self, other):
        return isinstance(other, GaussianRationalField)

    def __hash__(self):
        return hash(self.tag)


class PrimeField:
    """Integers mod p for a prime p; elements are canonical ints in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ParseError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    @property
    def tag(self):
        return f"gf({self.p})"

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def conj(self, x):
        return x

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def parse(self, s: str):
        t = s.strip()
        try:
            v = int(t)
        except ValueError as exc:
            raise ParseError(f"bad prime-field element {s!r}") from exc
        return v % self.p

    def fmt(self, x) -> str:
        return str(x % self.p)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))


def field_from_tag(tag: str):
    """Resolve a scalar-field tag as used in ring descriptors."""
    if tag == "rationals":
        return RationalField()
    if tag == "gaussian-rationals":
        return GaussianRationalField()
    if tag.startswith("gf(") and tag.endswith(")"):
        return PrimeField(int(tag[3:-1]))
    raise ParseError(f"unknown scalar field {tag!r}")
