"""Exact arithmetic in Q(q).

Scalars throughout the package are exact elements of the field Q(q),
represented at four levels that interoperate through the usual operators:

    int / Fraction          -- rational constants
    LaurentPoly             -- Laurent polynomials in q over Q
    RatFun                  -- reduced quotients of Laurent polynomials

The deformation parameter is Q = q - 1/q, and [k] denotes the q-integer
(q^k - q^-k)/(q - q^-1).  QPoly holds polynomials in Q; rewrite_in_Q
converts a Laurent polynomial to that form when possible.
"""

from __future__ import annotations

import re
from fractions import Fraction


class CoeffError(ValueError):
    pass


class NotAPolynomialInQ(CoeffError):
    """Raised when a Laurent polynomial does not lie in Q[Q]."""


class PoleError(CoeffError, ZeroDivisionError):
    """Raised when a rational function is evaluated at a pole."""


def _is_rat(x):
    return isinstance(x, (int, Fraction))


class LaurentPoly:
    """Laurent polynomial in q with exact rational coefficients.

    Values are immutable once constructed; zero coefficients are never
    stored, so the zero polynomial has an empty term map.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[k] = c
        self.terms = clean

    @staticmethod
    def const(c):
        return LaurentPoly({0: c}) if c else L_ZERO

    @staticmethod
    def monomial(c, k):
        return LaurentPoly({k: c}) if c else L_ZERO

    def __bool__(self):
        return bool(self.terms)

    def is_const(self):
        return not self.terms or self.terms.keys() == {0}

    def const_value(self):
        if not self.terms:
            return 0
        if self.terms.keys() != {0}:
            raise CoeffError("not a constant: %s" % self)
        return self.terms[0]

    def max_exp(self):
        return max(self.terms)

    def min_exp(self):
        return min(self.terms)

    def shift(self, k):
        """Multiply by q^k."""
        if k == 0:
            return self
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if _is_rat(other):
            return self.is_const() and self.const_value() == other
        if isinstance(other, RatFun):
            return other.__eq__(self)
        return NotImplemented

    def __hash__(self):
        if self.is_const():
            return hash(self.const_value())
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if _is_rat(other):
            other = LaurentPoly.const(other)
        if isinstance(other, LaurentPoly):
            if not self.terms:
                return other
            if not other.terms:
                return self
            t = dict(self.terms)
            for e, c in other.terms.items():
                s = t.get(e, 0) + c
                if s:
                    t[e] = s
                elif e in t:
                    del t[e]
            out = LaurentPoly.__new__(LaurentPoly)
            out.terms = t
            return out
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if _is_rat(other):
            other = LaurentPoly.const(other)
        if isinstance(other, LaurentPoly):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_rat(other):
            if not other:
                return L_ZERO
            if other == 1:
                return self
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        if isinstance(other, LaurentPoly):
            a, b = self.terms, other.terms
            if not a or not b:
                return L_ZERO
            if len(a) > len(b):
                a, b = b, a
            t = {}
            for e1, c1 in a.items():
                for e2, c2 in b.items():
                    e = e1 + e2
                    s = t.get(e, 0) + c1 * c2
                    if s:
                        t[e] = s
                    elif e in t:
                        del t[e]
            out = LaurentPoly.__new__(LaurentPoly)
            out.terms = t
            return out
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return RatFun(L_ONE, self) ** (-k)
        out = L_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        return as_ratfun(self) / other

    def __rtruediv__(self, other):
        return as_ratfun(other) / self

    def evaluate(self, q0):
        """Exact value at q = q0 (nonzero rational)."""
        if not q0:
            raise PoleError("q = 0 is not in the domain")
        q0 = Fraction(q0)
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * q0 ** e
        return int(total) if total.denominator == 1 else total

    def subs_neg_inv(self):
        """Apply the ring involution q -> -1/q."""
        return LaurentPoly({-e: (c if e % 2 == 0 else -c) for e, c in self.terms.items()})

    def __repr__(self):
        return "LaurentPoly(%s)" % scalar_str(self)

    def __str__(self):
        return scalar_str(self)


L_ZERO = LaurentPoly({})
L_ONE = LaurentPoly({0: 1})
GEN_Q = LaurentPoly({1: 1})
BIG_Q = LaurentPoly({1: 1, -1: -1})  # Q = q - 1/q


def qint(k):
    """The q-integer [k] = (q^k - q^-k)/(q - q^-1) as a Laurent polynomial."""
    if k == 0:
        return L_ZERO
    if k < 0:
        return -qint(-k)
    return LaurentPoly({k - 1 - 2 * i: 1 for i in range(k)})


def qint_product(ks):
    out = L_ONE
    for k in ks:
        out = out * qint(k)
    return out


# -- dense rational polynomial helpers (coefficient lists, low degree first) --

def _poly_trim(a):
    while a and not a[-1]:
        a.pop()
    return a

def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = Fraction(1) / Fraction(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        f = a[i + len(b) - 1] * inv
        if f:
            q[i] = f
            for j, bc in enumerate(b):
                a[i + j] -= f * bc
    return _poly_trim(q), _poly_trim(a)

def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _laurent_to_list(p):
    """Return (shift, coeffs) with coeffs[i] the coefficient of q^(shift+i)."""
    if not p.terms:
        return 0, []
    lo = p.min_exp()
    coeffs = [Fraction(0)] * (p.max_exp() - lo + 1)
    for e, c in p.terms.items():
        coeffs[e - lo] = Fraction(c)
    return lo, coeffs

def _list_to_laurent(shift, coeffs):
    return LaurentPoly({shift + i: (int(c) if c.denominator == 1 else c)
                        for i, c in enumerate(coeffs) if c})


def laurent_divmod(a, b):
    """Divide Laurent polynomials; returns (quotient, remainder) with the
    remainder supported strictly below deg(b) after q-power alignment."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    sa, la = _laurent_to_list(a)
    sb, lb = _laurent_to_list(b)
    q, r = _poly_divmod(la, lb)
    return _list_to_laurent(sa - sb, q), _list_to_laurent(sa, r)


def laurent_exact_div(a, b):
    """a / b as a LaurentPoly, or None when b does not divide a."""
    q, r = laurent_divmod(a, b)
    return q if not r else None


class RatFun:
    """Reduced fraction of Laurent polynomials; the generic field scalar.

    Canonical form: the denominator is an ordinary polynomial (minimal
    exponent 0) with coprime integer coefficients and positive leading
    coefficient; numerator and denominator share no polynomial factor.
    Equality of canonical forms is literal equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=L_ONE):
        num = as_laurent(num)
        den = as_laurent(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if den is L_ONE or den.terms == {0: 1}:
            self.num, self.den = num, L_ONE
            return
        if not num:
            self.num, self.den = L_ZERO, L_ONE
            return
        # pull q-powers out of the denominator, reduce, normalise over Z
        sn, ln = _laurent_to_list(num)
        sd, ld = _laurent_to_list(den)
        g = _poly_gcd(ln, ld)
        if len(g) > 1:
            ln = _poly_divmod(ln, g)[0]
            ld = _poly_divmod(ld, g)[0]
        mult = 1
        for c in ld:
            mult = mult * c.denominator // _gcd_int(mult, c.denominator)
        ld = [c * mult for c in ld]
        content = 0
        for c in ld:
            content = _gcd_int(content, c.numerator)
        if ld[-1] < 0:
            content = -content
        scale = Fraction(mult, content)
        self.num = _list_to_laurent(sn - sd, [c * scale for c in ln])
        den = _list_to_laurent(0, [c / content for c in ld])
        self.den = L_ONE if den.terms == {0: 1} else den

    def __bool__(self):
        return bool(self.num)

    def is_poly(self):
        return self.den is L_ONE or self.den.terms == {0: 1}

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.is_poly() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.is_poly():
            return hash(self.num)
        return hash((frozenset(self.num.terms.items()),
                     frozenset(self.den.terms.items())))

    def __neg__(self):
        out = RatFun.__new__(RatFun)
        out.num, out.den = -self.num, self.den
        return out

    def __add__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            if self.den is L_ONE:
                out = RatFun.__new__(RatFun)
                out.num, out.den = self.num + other, L_ONE
                return out
            return RatFun(self.num + self.den * other, self.den)
        if isinstance(other, RatFun):
            if self.den is L_ONE and other.den is L_ONE:
                out = RatFun.__new__(RatFun)
                out.num, out.den = self.num + other.num, L_ONE
                return out
            return RatFun(self.num * other.den + other.num * self.den,
                          self.den * other.den)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-as_ratfun(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            if self.den is L_ONE:
                out = RatFun.__new__(RatFun)
                out.num, out.den = self.num * other, L_ONE
                return out
            return RatFun(self.num * other, self.den)
        if isinstance(other, RatFun):
            if self.den is L_ONE and other.den is L_ONE:
                out = RatFun.__new__(RatFun)
                out.num, out.den = self.num * other.num, L_ONE
                return out
            return RatFun(self.num * other.num, self.den * other.den)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_ratfun(other)
        if not other.num:
            raise ZeroDivisionError("division by zero")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return as_ratfun(other) / self

    def __pow__(self, k):
        if k < 0:
            return (R_ONE / self) ** (-k)
        out = R_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def evaluate(self, q0):
        d = self.den.evaluate(q0)
        if not d:
            raise PoleError("pole at q = %s" % q0)
        v = Fraction(self.num.evaluate(q0)) / d
        return int(v) if v.denominator == 1 else v

    def subs_neg_inv(self):
        return RatFun(self.num.subs_neg_inv(), self.den.subs_neg_inv())

    def __repr__(self):
        return "RatFun(%s)" % scalar_str(self)

    def __str__(self):
        return scalar_str(self)


def _gcd_int(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if _is_rat(x):
        return LaurentPoly.const(x)
    if isinstance(x, RatFun):
        if x.is_poly():
            return x.num
        raise CoeffError("not a polynomial: %s" % x)
    raise TypeError("cannot interpret %r as a Laurent polynomial" % (x,))


def as_ratfun(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, LaurentPoly):
        out = RatFun.__new__(RatFun)
        out.num, out.den = x, L_ONE
        return out
    if _is_rat(x):
        out = RatFun.__new__(RatFun)
        out.num, out.den = LaurentPoly.const(x), L_ONE
        return out
    raise TypeError("cannot interpret %r as a scalar" % (x,))


R_ZERO = as_ratfun(0)
R_ONE = as_ratfun(1)


def simplify_scalar(x):
    """Smallest faithful representation of a scalar (for display and keys)."""
    if isinstance(x, RatFun):
        if not x.is_poly():
            return x
        x = x.num
    if isinstance(x, LaurentPoly):
        if not x.is_const():
            return x
        x = x.const_value()
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def evaluate(f, q0):
    """Exact value of a scalar at q = q0; raises PoleError at poles."""
    if _is_rat(f):
        return int(f) if isinstance(f, int) or f.denominator == 1 else f
    return f.evaluate(q0)


def subs_neg_inv(f):
    """Apply q -> -1/q to any scalar."""
    if _is_rat(f):
        return f
    return f.subs_neg_inv()


class QPoly:
    """Polynomial in Q = q - 1/q with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for k, c in coeffs.items():
                if c:
                    if k < 0:
                        raise CoeffError("negative Q-exponent")
                    clean[k] = c
        self.coeffs = clean

    def to_laurent(self):
        out = L_ZERO
        for k, c in self.coeffs.items():
            out = out + (BIG_Q ** k) * c
        return out

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        return "QPoly(%s)" % _poly_string(self.coeffs, "Q")

    def __str__(self):
        return _poly_string(self.coeffs, "Q")


def rewrite_in_Q(f):
    """Express a Laurent polynomial as a polynomial in Q = q - 1/q.

    Repeatedly eliminates the leading term by the matching power of Q.
    Raises NotAPolynomialInQ when f is not invariant under q -> -1/q.
    """
    f = as_laurent(f)
    out = {}
    while f:
        d = f.max_exp()
        if d < 0:
            raise NotAPolynomialInQ(scalar_str(f))
        c = f.terms[d]
        out[d] = c
        f = f - (BIG_Q ** d) * c
    return QPoly(out)


def is_Q_polynomial(f):
    try:
        rewrite_in_Q(f)
        return True
    except NotAPolynomialInQ:
        return False


# ---------------------------------------------------------------------------
# canonical strings
# ---------------------------------------------------------------------------

def _coef_str(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        c = c.numerator
    return str(c)


def _poly_string(terms, sym):
    """Render {exponent: coefficient} with exponents in decreasing order."""
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        neg = c < 0
        c = -c if neg else c
        if e == 0:
            body = _coef_str(c)
        else:
            var = sym if e == 1 else "%s^%d" % (sym, e)
            body = var if c == 1 else "%s*%s" % (_coef_str(c), var)
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts)


def scalar_str(x):
    """Canonical string of a scalar: unique, whitespace-free, parseable."""
    x = simplify_scalar(x)
    if _is_rat(x):
        return _coef_str(x)
    if isinstance(x, LaurentPoly):
        return _poly_string(x.terms, "q")
    return "(%s)/(%s)" % (_poly_string(x.num.terms, "q"),
                          _poly_string(x.den.terms, "q"))


def scalar_str_pretty(x):
    """Pretty string: Q-polynomial form when possible, else q-integer
    bracket products like q^6*[2.3.4] or [4]/[2], else canonical."""
    x = simplify_scalar(x)
    if _is_rat(x):
        return _coef_str(x)
    if isinstance(x, LaurentPoly):
        b = _bracket_form(x)
        if b is not None:
            return b
        try:
            return _poly_string(rewrite_in_Q(x).coeffs, "Q")
        except NotAPolynomialInQ:
            return _poly_string(x.terms, "q")
    sn = _bracket_split(x.num) if x.num else None
    sd = _bracket_split(x.den)
    if sn is not None and sd is not None:
        (c1, a1, j1, ks1), (c2, a2, j2, ks2) = sn, sd
        c = Fraction(c1) / Fraction(c2)
        num = _bracket_render(c, a1 - a2, j1 - j2, ks1)
        return "%s/[%s]" % (num, ".".join(str(k) for k in ks2)) if ks2 else num
    return scalar_str(x)


def _bracket_render(c, a, j, ks):
    parts = []
    neg = c < 0
    if neg:
        c = -c
    if c != 1 or (a == 0 and j == 0 and not ks):
        parts.append(_coef_str(c))
    if a:
        parts.append("q" if a == 1 else "q^%d" % a)
    if j:
        parts.append("Q" if j == 1 else "Q^%d" % j)
    if ks:
        parts.append("[%s]" % ".".join(str(k) for k in ks))
    return ("-" if neg else "") + "*".join(parts)


def _bracket_split(f):
    """Try f = c * q^a * Q^j * [k1][k2]...; return (c, a, j, ks) or None."""
    tot = f.max_exp() + f.min_exp()
    if tot % 2:
        return None
    a = tot // 2
    f = f.shift(-a)
    j = 0
    while True:
        g = laurent_exact_div(f, BIG_Q)
        if g is None or g.max_exp() + g.min_exp() != 0:
            break
        f, j = g, j + 1

    def peel(g):
        if g.is_const():
            return []
        for k in range(g.max_exp() + 1, 1, -1):
            q = laurent_exact_div(g, qint(k))
            if q is not None:
                rest = peel(q)
                if rest is not None:
                    return rest + [k]
        return None

    ks = peel(f)
    if ks is None:
        return None
    c = f
    for k in ks:
        c = laurent_exact_div(c, qint(k))
    return c.const_value(), a, j, sorted(ks)


def _bracket_form(f):
    if not f or f.is_const():
        return _coef_str(f.const_value()) if f else "0"
    split = _bracket_split(f)
    if split is None:
        return None
    return _bracket_render(*split)


# ---------------------------------------------------------------------------
# parsing (inverse of scalar_str / Q-polynomial pretty strings)
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?:(?P<coef>\d+(?:/\d+)?)(?:\*(?P<var1>[qQ])(?:\^(?P<exp1>-?\d+))?)?"
    r"|(?P<var2>[qQ])(?:\^(?P<exp2>-?\d+))?)"
)


def _parse_poly(s):
    pos = 0
    out = L_ZERO
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.start() != pos:
            raise CoeffError("cannot parse scalar %r at %d" % (s, pos))
        pos = m.end()
        sign = -1 if m.group("sign") == "-" else 1
        coef = m.group("coef")
        c = Fraction(coef) if coef else Fraction(1)
        c *= sign
        var = m.group("var1") or m.group("var2")
        exp = m.group("exp1") or m.group("exp2")
        if var is None:
            term = LaurentPoly.const(c)
        else:
            k = int(exp) if exp else 1
            base = GEN_Q if var == "q" else BIG_Q
            term = (base ** k if k >= 0 else None)
            if term is None:
                if var == "Q":
                    raise CoeffError("negative Q-exponent in %r" % s)
                term = LaurentPoly({k: 1})
            term = term * c
        out = out + term
    return out


_ATOM_RE = re.compile(
    r"(?:(?P<coef>\d+(?:/\d+)?)"
    r"|(?P<sym>[qQ])(?:\^(?P<exp>-?\d+))?"
    r"|\[(?P<bracket>\d+(?:\.\d+)*)\])")


def _parse_product(s):
    """Parse a bracket-pretty product like -3*q^2*[2.4] or 1/[2.2]."""
    den = L_ONE
    if "/[" in s:
        s, _, denpart = s.rpartition("/")
        m = re.fullmatch(r"\[(\d+(?:\.\d+)*)\]", denpart)
        if not m:
            raise CoeffError("cannot parse denominator %r" % denpart)
        den = qint_product(int(k) for k in m.group(1).split("."))
    neg = s.startswith("-")
    if neg or s.startswith("+"):
        s = s[1:]
    num = -L_ONE if neg else L_ONE
    for atom in s.split("*"):
        m = _ATOM_RE.fullmatch(atom)
        if not m:
            raise CoeffError("cannot parse factor %r" % atom)
        if m.group("coef"):
            num = num * Fraction(m.group("coef"))
        elif m.group("sym"):
            k = int(m.group("exp")) if m.group("exp") else 1
            base = LaurentPoly({1: 1}) if m.group("sym") == "q" else BIG_Q
            if k >= 0:
                num = num * base ** k
            elif m.group("sym") == "q":
                num = num * LaurentPoly({k: 1})
            else:
                raise CoeffError("negative Q-exponent in %r" % s)
        else:
            num = num * qint_product(int(k) for k in m.group("bracket").split("."))
    return simplify_scalar(RatFun(num, den))


def parse_scalar(s):
    """Parse a canonical or pretty scalar string back to a scalar."""
    s = s.strip()
    m = re.fullmatch(r"\((?P<num>[^()]*)\)/\((?P<den>[^()]*)\)", s)
    if m:
        return RatFun(_parse_poly(m.group("num")), _parse_poly(m.group("den")))
    if "[" in s:
        return _parse_product(s)
    try:
        return simplify_scalar(_parse_poly(s))
    except CoeffError:
        return _parse_product(s)
