"""Multivariate rational functions over Q with a decidable normal form.

Thin wrapper around sympy: a value is stored as a pair of expanded
polynomials (numerator, denominator) with integer coefficients, content 1,
no common factor, and the denominator's leading coefficient positive under
lex order on the sorted symbol names.  Two rational functions are equal iff
their normal forms are identical, which the tests exercise through the
cross-multiplication criterion.

Half-integral powers of a residue size q are handled by working with a
symbol for sqrt(q) and writing q = sq**2 throughout (see `localzeta`).
"""

from __future__ import annotations

from fractions import Fraction

import sympy as sp


def _canonical_pair(num, den):
    num = sp.together(sp.sympify(num))
    den = sp.together(sp.sympify(den))
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    expr = sp.cancel(num / den)
    n, d = sp.fraction(expr)
    n = sp.expand(n)
    d = sp.expand(d)
    gens = sorted(n.free_symbols | d.free_symbols, key=lambda s: s.name)
    if not gens:
        q = sp.Rational(n) / sp.Rational(d)
        return sp.Integer(q.p), sp.Integer(q.q)
    pn = sp.Poly(n, *gens, domain="QQ")
    pd = sp.Poly(d, *gens, domain="QQ")
    # clear rational content, make both primitive over Z
    cn, pn = pn.clear_denoms()
    cd, pd = pd.clear_denoms()
    scale = sp.Rational(cd, cn)
    contn, pn = pn.primitive()
    contd, pd = pd.primitive()
    scale *= sp.Rational(contn, contd)
    if pd.LC() < 0:
        pn, pd = -pn, -pd
    n2 = sp.expand(pn.as_expr() * sp.Rational(scale.p))
    d2 = sp.expand(pd.as_expr() * sp.Rational(scale.q))
    # one more content pass after folding the rational scale back in
    g = sp.gcd(sp.Integer(scale.p), sp.Integer(scale.q))
    assert g == 1
    return n2, d2


class SymbolicRationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if isinstance(num, SymbolicRationalFunction):
            num, den = num.num, num.den * sp.sympify(den)
        if isinstance(den, SymbolicRationalFunction):
            num, den = sp.sympify(num) * den.den, den.num
        if isinstance(num, Fraction):
            num = sp.Rational(num.numerator, num.denominator)
        if isinstance(den, Fraction):
            den = sp.Rational(den.numerator, den.denominator)
        self.num, self.den = _canonical_pair(num, den)

    @classmethod
    def from_expr(cls, expr):
        return cls(expr, 1)

    def as_expr(self):
        return self.num / self.den

    def normal_form(self) -> "SymbolicRationalFunction":
        return self  # construction already canonicalizes

    def subs(self, mapping) -> "SymbolicRationalFunction":
        return SymbolicRationalFunction(self.num.subs(mapping), self.den.subs(mapping))

    def __add__(self, other):
        o = _as_srf(other)
        return SymbolicRationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return SymbolicRationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_srf(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _as_srf(other)
        return SymbolicRationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_srf(other)
        if o.num == 0:
            raise ZeroDivisionError
        return SymbolicRationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return _as_srf(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return SymbolicRationalFunction(self.den ** (-k), self.num ** (-k))
        return SymbolicRationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other):
        o = _as_srf(other)
        if self.num == o.num and self.den == o.den:
            return True
        # cross multiplication is the mathematical criterion; the normal
        # form is supposed to make it redundant, so check both agree
        return sp.expand(self.num * o.den - o.num * self.den) == 0

    def __hash__(self):
        return hash((sp.srepr(self.num), sp.srepr(self.den)))

    def is_zero(self):
        return self.num == 0

    def __repr__(self):
        if self.den == 1:
            return f"({self.num})"
        return f"({self.num})/({self.den})"


def _as_srf(x):
    if isinstance(x, SymbolicRationalFunction):
        return x
    return SymbolicRationalFunction(x, 1)


def ratfun_normal_form(r: SymbolicRationalFunction) -> SymbolicRationalFunction:
    return _as_srf(r).normal_form()


def symbols(names):
    return sp.symbols(names)
