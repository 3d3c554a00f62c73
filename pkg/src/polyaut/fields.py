"""Exact coefficient fields: the rationals and small Galois fields GF(p^m).

Rational scalars are plain :class:`fractions.Fraction` values.  Finite field
elements are :class:`FFElement` instances holding the coefficient vector of a
residue modulo a fixed irreducible polynomial over GF(p).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from numbers import Rational


class CoefficientError(ValueError):
    """A literal or value cannot be represented in the requested field."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


class Rationals:
    """The field of rational numbers, with Fraction elements."""

    characteristic = 0
    degree = 1
    is_finite = False

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, Rational):
            return Fraction(value.numerator, value.denominator)
        if isinstance(value, str):
            try:
                return Fraction(value)
            except ValueError:
                raise CoefficientError(f"not a rational literal: {value!r}") from None
        raise CoefficientError(f"{value!r} is not a rational number")

    def generator(self):
        raise CoefficientError("the rationals have no extension generator 't'")

    def format(self, value: Fraction) -> str:
        return str(value)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    __str__ = __repr__


QQ = Rationals()


def _poly_mod(coeffs: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    # modulus is monic, low degree first
    m = len(modulus) - 1
    coeffs = [c % p for c in coeffs]
    for top in range(len(coeffs) - 1, m - 1, -1):
        c = coeffs[top]
        if c:
            shift = top - m
            for k in range(m + 1):
                coeffs[shift + k] = (coeffs[shift + k] - c * modulus[k]) % p
    coeffs = coeffs[:m] + [0] * (m - len(coeffs))
    return coeffs


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2 over GF(p)."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            rem = list(modulus)
            for top in range(len(rem) - 1, d - 1, -1):
                c = rem[top] % p
                if c:
                    for k in range(d + 1):
                        rem[top - d + k] = (rem[top - d + k] - c * divisor[k]) % p
            if not any(r % p for r in rem[:d]):
                return False
    return True


class FiniteField:
    """GF(p^m) realised as GF(p)[t] / (modulus).

    ``modulus`` is given low-degree-first and must be monic of degree ``m``
    and irreducible over GF(p); both are checked here.
    """

    is_finite = True

    def __init__(self, p: int, modulus: tuple[int, ...] = (0, 1)):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.characteristic = p
        self.degree = len(modulus) - 1
        self.modulus = modulus
        self.order = p**self.degree

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and other.characteristic == self.characteristic
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash((self.characteristic, self.modulus))

    def __repr__(self):
        return f"GF({self.order})"

    __str__ = __repr__

    def element(self, coeffs) -> FFElement:
        coeffs = list(coeffs)
        if len(coeffs) > self.degree:
            coeffs = _poly_mod(coeffs, self.modulus, self.characteristic)
        coeffs = [c % self.characteristic for c in coeffs]
        coeffs += [0] * (self.degree - len(coeffs))
        return FFElement(self, tuple(coeffs))

    def zero(self) -> FFElement:
        return self.element(())

    def one(self) -> FFElement:
        return self.element((1,))

    def generator(self) -> FFElement:
        if self.degree == 1:
            raise CoefficientError(f"{self} is a prime field; 't' is undefined")
        return self.element((0, 1))

    def coerce(self, value) -> FFElement:
        if isinstance(value, FFElement):
            if value.field != self:
                raise CoefficientError(f"{value!r} belongs to {value.field}, not {self}")
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, int):
            return self.element((value,))
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Rational):
            den = value.denominator % self.characteristic
            if den == 0:
                raise CoefficientError(f"{value} is not defined in {self}")
            num = value.numerator * pow(den, -1, self.characteristic)
            return self.element((num,))
        raise CoefficientError(f"{value!r} is not an element of {self}")

    def elements(self) -> list[FFElement]:
        """All q elements in the fixed order of their integer codes."""
        return [self.from_code(code) for code in range(self.order)]

    def from_code(self, code: int) -> FFElement:
        p = self.characteristic
        digits = []
        for _ in range(self.degree):
            code, r = divmod(code, p)
            digits.append(r)
        return FFElement(self, tuple(digits))

    def format(self, value: FFElement) -> str:
        return str(value)


_FIXED_MODULI = {
    4: (2, (1, 1, 1)),  # t^2 + t + 1
    8: (2, (1, 1, 0, 1)),  # t^3 + t + 1
    9: (3, (1, 0, 1)),  # t^2 + 1
}


@lru_cache(maxsize=None)
def GF(q: int) -> FiniteField:
    """The field with q elements: a prime, or one of 4, 8, 9."""
    if q in _FIXED_MODULI:
        p, modulus = _FIXED_MODULI[q]
        return FiniteField(p, modulus)
    if _is_prime(q):
        return FiniteField(q)
    raise ValueError(f"no built-in representation of GF({q}); pass a modulus to FiniteField")


class FFElement:
    """An element of a :class:`FiniteField`; immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _other(self, other):
        if isinstance(other, FFElement):
            if other.field != self.field:
                raise CoefficientError(f"cannot combine {self.field} and {other.field}")
            return other
        return self.field.coerce(other)

    def __add__(self, other):
        other = self._other(other)
        p = self.field.characteristic
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.characteristic
        return FFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        other = self._other(other)
        return _ff_mul(self.field, self.coeffs, other.coeffs)

    __rmul__ = __mul__

    def inverse(self) -> FFElement:
        if not self:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def __rtruediv__(self, other):
        return self._other(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self == self.field.coerce(other)
            except CoefficientError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.characteristic, self.coeffs))

    @property
    def code(self) -> int:
        """Integer code: the coefficient vector read as base-p digits."""
        p = self.field.characteristic
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def __str__(self):
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                power = "t" if i == 1 else f"t^{i}"
                parts.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"{self.field}({self})"


def _ff_mul(field: FiniteField, a: tuple[int, ...], b: tuple[int, ...]) -> FFElement:
    p = field.characteristic
    if field.degree == 1:
        return FFElement(field, ((a[0] * b[0]) % p,))
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return FFElement(field, tuple(_poly_mod(prod, field.modulus, p)))


def parse_field(name: str):
    """Field from a short name: ``Q``/``QQ``, ``GF(9)``, ``GF9`` or ``9``."""
    text = name.strip().upper().replace(" ", "")
    if text in {"Q", "QQ"}:
        return QQ
    if text.startswith("GF"):
        text = text[2:].strip("()")
    try:
        return GF(int(text))
    except ValueError as exc:
        raise ValueError(f"unknown field {name!r}: {exc}") from None
