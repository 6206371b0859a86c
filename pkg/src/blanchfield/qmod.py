"""Canonical representatives for the quotient module Q(t) / Z[t, t^-1].

Blanchfield pairings take values here.  A class is stored as

  * a "fractional" Laurent polynomial whose rational coefficients all
    lie in [0, 1), and
  * a proper fraction r/q0 with deg r < deg q0, where q0 is a primitive
    integer polynomial with nonzero constant term and positive leading
    coefficient.

The splitting is unique: a proper fraction whose denominator has
nonzero constant term can only be a Laurent polynomial if it is zero,
so two rational functions differ by an integer Laurent polynomial
exactly when they canonicalize identically.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from . import _polyops
from .laurent import LaurentPoly
from .ratfunc import RationalFunction


@dataclasses.dataclass(frozen=True)
class QModLambda:
    """A class in Q(t)/Z[t,t^-1] in canonical form.

    >>> QModLambda.from_ratfunc(RationalFunction(5))
    QModLambda('0')
    >>> QModLambda.from_ratfunc(RationalFunction((0, 1), (2,)))
    QModLambda('(1/2)t')
    """

    frac_val: int
    frac_coeffs: tuple[Fraction, ...]
    prop_num: tuple[Fraction, ...]
    prop_den: tuple[int, ...]

    @classmethod
    def zero(cls) -> QModLambda:
        return cls(0, (), (), (1,))

    def is_zero(self) -> bool:
        return not self.frac_coeffs and not self.prop_num

    def __bool__(self) -> bool:
        return not self.is_zero()

    @classmethod
    def from_ratfunc(cls, x: RationalFunction) -> QModLambda:
        """Canonicalize x + Z[t,t^-1]."""
        num, den = x.num, x.den
        if not num:
            return cls.zero()
        # split den = t^m * q0 with q0(0) != 0
        m = 0
        while not den[m]:
            m += 1
        q0 = den[m:]
        # x = t^-m * (s + r/q0) with deg r < deg q0
        s, r = _polyops.divmod_frac(num, q0)
        frac: dict[int, Fraction] = {}
        for i, c in enumerate(s):
            frac[i - m] = Fraction(c)
        if r and m:
            # split r/(t^m q0) = a/t^m + b/q0 using coprimality of t^m and q0
            inv = _polyops.series_inverse(q0, m)
            a = _polyops.trim(_polyops.mul(r, inv)[:m])
            rest = _polyops.sub(r, _polyops.mul(a, q0))
            assert not any(rest[:m]), "partial fraction split failed"
            b = _polyops.trim(rest[m:])
            for i, c in enumerate(a):
                frac[i - m] = frac.get(i - m, Fraction(0)) + Fraction(c)
            r = b
        # reduce the Laurent coefficients into [0, 1)
        frac = {e: c - (c.numerator // c.denominator) for e, c in frac.items()}
        frac = {e: c for e, c in frac.items() if c}
        if frac:
            lo, hi = min(frac), max(frac)
            coeffs = tuple(frac.get(e, Fraction(0)) for e in range(lo, hi + 1))
            frac_val = lo
        else:
            coeffs = ()
            frac_val = 0
        if r:
            # scale so the denominator is primitive over Z
            c = _polyops.content(q0)
            prop_den = tuple(v // c for v in q0)
            prop_num = tuple(Fraction(v, c) for v in r)
        else:
            prop_num, prop_den = (), (1,)
        if not coeffs and not prop_num:
            return cls.zero()
        return cls(frac_val, coeffs, prop_num, prop_den)

    def representative(self) -> RationalFunction:
        """A rational function in this class (the canonical one)."""
        shift = max(0, -self.frac_val)
        num = [Fraction(0)] * (shift + self.frac_val + len(self.frac_coeffs))
        for i, c in enumerate(self.frac_coeffs):
            num[shift + self.frac_val + i] = c
        frac_part = RationalFunction.from_fraction_polys(
            _polyops.trim(num), _polyops.shift((1,), shift))
        if not self.prop_num:
            return frac_part
        dn, pnum = _polyops.clear_denominators(self.prop_num)
        prop = RationalFunction(pnum, _polyops.scale(self.prop_den, dn))
        return frac_part + prop

    def conjugate(self) -> QModLambda:
        """Involution t -> t^-1 on the quotient module."""
        return QModLambda.from_ratfunc(self.representative().conjugate())

    def __add__(self, other: QModLambda) -> QModLambda:
        if not isinstance(other, QModLambda):
            return NotImplemented
        return QModLambda.from_ratfunc(self.representative() + other.representative())

    def __neg__(self) -> QModLambda:
        return QModLambda.from_ratfunc(-self.representative())

    def __sub__(self, other: QModLambda) -> QModLambda:
        if not isinstance(other, QModLambda):
            return NotImplemented
        return self + (-other)

    def __mul__(self, p) -> QModLambda:
        """Scale by a ring element (Laurent polynomial, int or Q(t) element)."""
        if isinstance(p, (int, LaurentPoly, RationalFunction)):
            return QModLambda.from_ratfunc(self.representative() * p)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        if self.frac_coeffs:
            parts.append(_fmt_fraction_laurent(self.frac_val, self.frac_coeffs))
        if self.prop_num:
            num = _fmt_fraction_laurent(0, self.prop_num)
            parts.append(f"({num})/({LaurentPoly(0, self.prop_den)})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"QModLambda('{self}')"


def _fmt_fraction_laurent(val: int, coeffs: tuple[Fraction, ...]) -> str:
    """Render a rational-coefficient Laurent polynomial, exponents descending."""
    parts: list[str] = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        exp = val + i
        mag = abs(c)
        if exp == 0:
            body = str(mag) if mag.denominator == 1 else f"({mag})"
        else:
            mon = "t" if exp == 1 else f"t^{exp}"
            if mag == 1:
                body = mon
            elif mag.denominator == 1:
                body = f"{mag}{mon}"
            else:
                body = f"({mag}){mon}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def canonical_class(x: RationalFunction | LaurentPoly | int) -> QModLambda:
    """Canonical form of x + Z[t,t^-1]; the main entry point."""
    if not isinstance(x, RationalFunction):
        x = RationalFunction(x)
    return QModLambda.from_ratfunc(x)
