"""Exact real-root location for chromatic-type polynomials.

All arithmetic is exact: integer Sturm chains (pseudo-remainders stripped to
primitive parts with signs preserved), rational interval endpoints, and
bisection guided by sign-variation counts.  Root work happens on the
squarefree part so every isolating interval holds exactly one root and, when
it has positive width, a sign change at its endpoints.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import IntPolynomial, divides_exactly

DEFAULT_PRECISION = 30


@dataclass(frozen=True)
class RootInterval:
    lo: Fraction
    hi: Fraction
    exact: bool = False  # lo == hi, a rational root hit directly

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")
        if self.exact != (self.lo == self.hi):
            raise ValueError("exact flag inconsistent with endpoints")

    def width(self) -> Fraction:
        return self.hi - self.lo

    def to_dict(self):
        return {"lo": rational_str(self.lo), "hi": rational_str(self.hi),
                "exact": self.exact,
                "approx": (float(self.lo) + float(self.hi)) / 2}


def rational_str(x: Fraction) -> str:
    """Exact decimal string when the denominator is 2^a 5^b, else 'p/q'."""
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{x.numerator}/{x.denominator}"
    digits = max(twos, fives)
    scaled = x.numerator * 10**digits // x.denominator
    if digits == 0:
        return str(scaled)
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled)).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


# -- exact chain machinery -----------------------------------------------


def _content(p: IntPolynomial) -> int:
    c = 0
    for x in p.coeffs:
        c = math.gcd(c, x)
    return c or 1


def _primitive(p: IntPolynomial) -> IntPolynomial:
    if p.is_zero():
        return p
    c = _content(p)
    return IntPolynomial([x // c for x in p.coeffs])


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """lc(b)**(deg a - deg b + 1) * a mod b, sign-corrected to match a mod b."""
    delta = a.degree - b.degree
    factor = b.leading ** (delta + 1)
    rem = [factor * c for c in a.coeffs]
    for i in range(delta, -1, -1):
        q, r = divmod(rem[i + b.degree], b.leading)
        assert r == 0, "pseudo-remainder must divide exactly"
        if q:
            for j, c in enumerate(b.coeffs):
                rem[i + j] -= q * c
    result = IntPolynomial(rem[:b.degree])
    if factor < 0:
        result = -result
    return result


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    a, b = _primitive(p), _primitive(q)
    while not b.is_zero():
        if a.degree < b.degree:
            a, b = b, a
            continue
        a, b = b, _primitive(_pseudo_rem(a, b))
    if a.is_zero():
        return a
    return a if a.leading > 0 else -a


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p with repeated roots collapsed to multiplicity one."""
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    if p.degree == 0:
        return IntPolynomial((1,))
    g = poly_gcd(p, p.derivative())
    ok, q = divides_exactly(g, p)
    assert ok, "gcd must divide"
    return _primitive(q)


def sturm_sequence(p: IntPolynomial):
    """Canonical Sturm chain p, p', then negated (primitive) remainders."""
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [p]
    if p.degree >= 1:
        chain.append(p.derivative())
        while chain[-1].degree >= 1:
            rem = _pseudo_rem(chain[-2], chain[-1])
            if rem.is_zero():
                break
            chain.append(-_primitive(rem))
    return chain


def sign_variations(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = p(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: IntPolynomial, a, b) -> int:
    """Distinct real roots in (a, b] by Sturm variation difference."""
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise ValueError("empty interval")
    chain = sturm_sequence(p)
    if p(a) == 0 or p(b) == 0:
        raise ValueError("endpoints must not be roots; perturb and retry")
    return sign_variations(chain, a) - sign_variations(chain, b)


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound: every real root has absolute value strictly below this."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    lead = abs(p.leading)
    top = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + Fraction(top, lead)


def isolate_real_roots(p: IntPolynomial, precision: int = DEFAULT_PRECISION,
                       interval=None):
    """Disjoint intervals of width <= 2**-precision, one per distinct root.

    Works on the squarefree part, so exact rational hits are reported as
    zero-width intervals and every positive-width interval carries a sign
    change.  `interval` restricts the search window (open at both ends in
    effect, since window endpoints found to be roots would raise).
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if precision < 1:
        raise ValueError("precision must be >= 1")
    if p.degree == 0:
        return []
    q = squarefree_part(p)
    chain = sturm_sequence(q)
    if interval is None:
        bound = root_bound(q)
        lo, hi = -bound, bound
    else:
        lo, hi = Fraction(interval[0]), Fraction(interval[1])
        if q(lo) == 0 or q(hi) == 0:
            raise ValueError("search window endpoints must not be roots")
    width_cap = Fraction(1, 2**precision)
    found = []

    def var(x):
        return sign_variations(chain, x)

    def refine(a, b, va, vb):
        # exactly one root in (a, b], endpoints non-roots
        while b - a > width_cap:
            m = (a + b) / 2
            if q(m) == 0:
                found.append(RootInterval(m, m, exact=True))
                return
            vm = var(m)
            if va - vm == 1:
                b, vb = m, vm
            else:
                a, va = m, vm
        found.append(RootInterval(a, b))

    def split(a, b, va, vb):
        count = va - vb
        if count == 0:
            return
        if count == 1:
            refine(a, b, va, vb)
            return
        m = (a + b) / 2
        if q(m) == 0:
            found.append(RootInterval(m, m, exact=True))
            delta = Fraction(1, 2**(precision + 2))
            while True:
                lo_m, hi_m = m - delta, m + delta
                if q(lo_m) != 0 and q(hi_m) != 0:
                    v_lo, v_hi = var(lo_m), var(hi_m)
                    if v_lo - v_hi == 1:
                        break
                delta /= 2
            split(a, lo_m, va, v_lo)
            split(hi_m, b, v_hi, vb)
        else:
            vm = var(m)
            split(a, m, va, vm)
            split(m, b, vm, vb)

    split(lo, hi, var(lo), var(hi))
    found.sort(key=lambda r: r.lo)
    return found


# -- the leaf-augmented directed path family -----------------------------


def dn_closed_form(n: int) -> IntPolynomial:
    """x(x-1)(x-2)((x-2)**(n-4) + (x-3)(x-1)**(n-4)), expanded."""
    if n < 4:
        raise ValueError("family requires n >= 4")
    x = IntPolynomial((0, 1))
    inner = (x - 2) ** (n - 4) + (x - 3) * (x - 1) ** (n - 4)
    return x * (x - 1) * (x - 2) * inner


def ln_upper_bound(n: int, grain: int = 1000) -> Fraction:
    """Rational upper bound on ln(n): ceil to 1/grain plus one grain of slack.

    math.log is correct to about one ulp; the added 1/grain dwarfs that
    error, and callers re-certify every sign claim by exact evaluation.
    """
    if n < 1:
        raise ValueError("n must be positive")
    approx = math.log(n)
    return Fraction(math.ceil(approx * grain) + 1, grain)


def verify_negative_root(n: int, threshold, precision: int = DEFAULT_PRECISION):
    """Certify a real root of the leaf-family polynomial below threshold.

    Mirrors the intermediate-value argument: checks the sign at -n is
    positive, scans integer points up to the threshold for a sign change,
    then isolates to get a certified single-root interval with hi below the
    threshold.  Returns (True, RootInterval) or (False, None).
    """
    if n < 6 or n % 2:
        raise ValueError("the negative-root argument needs even n >= 6")
    threshold = Fraction(threshold)
    p = dn_closed_form(n)
    if p(-n) <= 0:
        return False, None
    if threshold <= -n:
        return False, None
    roots = isolate_real_roots(p, precision=precision,
                               interval=(Fraction(-n), threshold))
    for r in roots:
        if r.hi < threshold:
            return True, r
    return False, None


def roots_report(p: IntPolynomial, precision: int = DEFAULT_PRECISION) -> dict:
    roots = isolate_real_roots(p, precision=precision)
    return {"polynomial": p.to_text(),
            "coefficients": p.to_coeff_strings(),
            "precision_bits": precision,
            "real_roots": [r.to_dict() for r in roots]}


def roots_report_json(p: IntPolynomial, precision: int = DEFAULT_PRECISION) -> str:
    return json.dumps(roots_report(p, precision), indent=2)
