"""Exact ground fields: the rationals and prime fields F_p.

Elements of Q are ``gmpy2.mpq`` values (always in lowest terms with a
positive denominator).  Elements of F_p are instances of a small per-field
class holding a residue in ``[0, p)``.  Both support ``+ - * /``, unary minus,
equality with Python ints and truthiness, so matrix code stays generic.
"""
from __future__ import annotations

import random
from fractions import Fraction

import gmpy2
from gmpy2 import mpq


class Field:
    """Common interface: ``F(x)`` converts, ``F.zero``/``F.one`` are constants."""

    name: str
    char: int

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def is_finite(self) -> bool:
        return self.char != 0

    def random(self, rng: random.Random):
        raise NotImplementedError

    def to_str(self, x) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"
    char = 0

    def __init__(self):
        self._zero = mpq(0)
        self._one = mpq(1)

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def __call__(self, x):
        if isinstance(x, str):
            return mpq(x.strip())
        if isinstance(x, Fraction):
            return mpq(x.numerator, x.denominator)
        if isinstance(x, FpElem):
            raise TypeError("cannot coerce a prime-field residue into Q")
        return mpq(x)

    def random(self, rng):
        # small nonzero-heavy integers keep entries readable while still generic
        return mpq(rng.randint(-(1 << 20), 1 << 20))

    def to_str(self, x) -> str:
        x = mpq(x)
        if x.denominator == 1:
            return str(int(x.numerator))
        return f"{int(x.numerator)}/{int(x.denominator)}"


class FpElem:
    """Residue modulo the class attribute ``P``; created through :class:`PrimeField`."""

    __slots__ = ("v",)
    P = 2

    def __init__(self, v):
        self.v = v % self.P

    def _co(self, other):
        if isinstance(other, FpElem):
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, (Fraction, type(mpq(0)))):
            return int(other.numerator) * pow(int(other.denominator), -1, self.P)
        return NotImplemented

    def __add__(self, other):
        o = self._co(other)
        return NotImplemented if o is NotImplemented else self.__class__(self.v + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._co(other)
        return NotImplemented if o is NotImplemented else self.__class__(self.v - o)

    def __rsub__(self, other):
        o = self._co(other)
        return NotImplemented if o is NotImplemented else self.__class__(o - self.v)

    def __mul__(self, other):
        o = self._co(other)
        return NotImplemented if o is NotImplemented else self.__class__(self.v * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        if o % self.P == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.P)
        return self.__class__(self.v * pow(o, -1, self.P))

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.P)
        return self.__class__(o * pow(self.v, -1, self.P))

    def __neg__(self):
        return self.__class__(-self.v)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return False
        return self.v == o % self.P

    def __hash__(self):
        return hash((self.P, self.v))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return str(self.v)


_FP_CLASSES: dict[int, type] = {}


def _is_prime(p: int) -> bool:
    return p >= 2 and gmpy2.is_prime(p)


class PrimeField(Field):
    char: int

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"F_{p}: {p} is not prime")
        self.char = p
        self.name = f"F{p}"
        cls = _FP_CLASSES.get(p)
        if cls is None:
            cls = type(f"F{p}Elem", (FpElem,), {"__slots__": (), "P": p})
            _FP_CLASSES[p] = cls
        self._cls = cls
        self._zero = cls(0)
        self._one = cls(1)

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def __call__(self, x):
        if isinstance(x, FpElem):
            if x.P != self.char:
                raise TypeError("residue from a different prime field")
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, int):
            return self._cls(x)
        num, den = int(x.numerator), int(x.denominator)
        if den % self.char == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes in F_{self.char}")
        return self._cls(num * pow(den, -1, self.char))

    def random(self, rng):
        return self._cls(rng.randrange(self.char))

    def elements(self):
        return [self._cls(v) for v in range(self.char)]


QQ = RationalField()


def get_field(spec) -> Field:
    """``"Q"`` -> Q; ``"F5"``, ``"F 5"`` or ``5`` -> F_5."""
    if isinstance(spec, Field):
        return spec
    if isinstance(spec, int):
        return PrimeField(spec)
    s = str(spec).strip().replace(" ", "")
    if s in ("Q", "QQ"):
        return QQ
    if s[:1] == "F" and s[1:].isdigit():
        return PrimeField(int(s[1:]))
    raise ValueError(f"unknown field {spec!r}")
