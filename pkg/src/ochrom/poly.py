"""Dense exact univariate polynomials over the integers.

Coefficients are arbitrary-precision ints, index i holding the coefficient
of x**i.  The zero polynomial is the empty coefficient tuple; trailing zeros
are always stripped, so equality is plain tuple equality.  Rational values
(endpoints, interpolation intermediates) use fractions.Fraction.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        for x in c:
            if not isinstance(x, int):
                raise TypeError(f"integer coefficients only, got {x!r}")
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-x for x in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return constant(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * x for x in self.coeffs])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if exp < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; exact for int and Fraction arguments."""
        acc = 0 if not isinstance(x, Fraction) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        """self(inner(x)), by Horner over polynomials."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + constant(c)
        return acc

    # -- text and JSON forms --------------------------------------------

    def to_text(self, var: str = "x") -> str:
        """Human-readable descending powers, e.g. 'x^4 - 4x^3 + 5x^2 - 2x'."""
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def to_coeff_strings(self):
        """JSON-friendly decimal coefficient strings, constant term first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_coeff_strings(cls, strings) -> "IntPolynomial":
        return cls([int(s) for s in strings])

    def __repr__(self):
        return f"IntPolynomial({self.to_text()})"


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def constant(c: int) -> IntPolynomial:
    return IntPolynomial((c,))


def falling_factorial(n: int) -> IntPolynomial:
    """Product (x - 0)(x - 1)...(x - n + 1); the empty product is 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = ONE
    for i in range(n):
        p = p * IntPolynomial((-i, 1))
    return p


def interpolate(points) -> IntPolynomial:
    """Unique degree < len(points) polynomial through integer points.

    Computed by Newton divided differences in exact rational arithmetic.
    Raises if abscissae repeat or if any final coefficient is non-integral
    (which signals a counting bug upstream, never a rounding issue).
    """
    pts = list(points)
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae")
    if not pts:
        return ZERO
    # divided-difference table, in place
    coef = [Fraction(y) for _, y in pts]
    for level in range(1, len(pts)):
        for i in range(len(pts) - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # Horner form: result = c0 + (x - x0)(c1 + (x - x1)(...))
    acc = [Fraction(0)]
    for i in range(len(pts) - 1, -1, -1):
        # acc = acc * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + acc
        for j, a in enumerate(acc):
            shifted[j] -= xs[i] * a
        shifted[0] += coef[i]
        acc = shifted
    for c in acc:
        if c.denominator != 1:
            raise ValueError(f"non-integer interpolation coefficient {c}")
    return IntPolynomial([int(c) for c in acc])


def divides_exactly(d: IntPolynomial, p: IntPolynomial):
    """(True, quotient) iff p = d*q for an integer-coefficient q."""
    if d.is_zero():
        raise ValueError("division by the zero polynomial")
    if p.is_zero():
        return True, ZERO
    if p.degree < d.degree:
        return False, None
    rem = [Fraction(c) for c in p.coeffs]
    quot = [Fraction(0)] * (p.degree - d.degree + 1)
    for i in range(p.degree - d.degree, -1, -1):
        q = rem[i + d.degree] / d.leading
        quot[i] = q
        if q:
            for j, c in enumerate(d.coeffs):
                rem[i + j] -= q * c
    if any(rem) or any(q.denominator != 1 for q in quot):
        return False, None
    return True, IntPolynomial([int(q) for q in quot])
