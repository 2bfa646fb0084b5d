"""Exact coefficient arithmetic for the skein calculus.

Everything downstream works over the ring of Laurent polynomials in the
framing variable x, the loop variable v and the quantum parameter s, with
rational coefficients, together with its field of fractions.  A monomial
x^a v^b s^c is stored as the exponent triple (a, b, c), so a polynomial is
a dict mapping triples to nonzero rationals.  Coefficients stay plain ints
whenever possible and only become Fractions when a division forces it.

The quantum integer [i] is (s^i - s^-i)/(s - s^-1), a genuine polynomial,
and [i]! is the product [1][2]...[i].  delta() is the value of a single
0-framed loop in the plane, (v^-1 - v)/(s - s^-1).

specialize_sln() substitutes s = t^N, x = t^-1, v = t^(-N^2), collapsing a
Scalar to a one-variable Laurent fraction in t.  h_expand() then expands
that fraction around t = e^(h/2N) and returns the Taylor coefficients in h.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Triple = tuple[int, int, int]

_ZERO3 = (0, 0, 0)


def _ratio(c):
    """Normalise a coefficient: Fractions with denominator 1 become ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """A Laurent polynomial in x, v, s with exact rational coefficients.

    Immutable by convention: no method mutates self.terms after
    construction, so instances can be shared freely.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Triple, object] | None = None):
        clean: dict[Triple, object] = {}
        if terms:
            for e, c in terms.items():
                c = _ratio(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
                if c:
                    clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({_ZERO3: 1})

    @classmethod
    def monomial(cls, ex: int, ev: int, es: int, coeff=1) -> "LaurentPoly":
        coeff = _ratio(coeff)
        return cls._raw({(ex, ev, es): coeff}) if coeff else cls._raw({})

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        c = _ratio(c)
        return cls._raw({_ZERO3: c}) if c else cls._raw({})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {_ZERO3: 1}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == (LaurentPoly.const(other)).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e)
            if acc is None:
                out[e] = c
            else:
                acc = acc + c
                if acc:
                    out[e] = acc
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e)
            if acc is None:
                out[e] = -c
            else:
                acc = acc - c
                if acc:
                    out[e] = acc
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = _ratio(other)
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: _ratio(c * other) for e, c in self.terms.items()})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Triple, object] = {}
        for (e1, e2, e3), c1 in a.items():
            for (f1, f2, f3), c2 in b.items():
                e = (e1 + f1, e2 + f2, e3 + f3)
                acc = out.get(e)
                if acc is None:
                    out[e] = c1 * c2
                else:
                    acc = acc + c1 * c2
                    if acc:
                        out[e] = acc
                    else:
                        del out[e]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def mul_monomial(self, ex: int, ev: int, es: int, coeff=1) -> "LaurentPoly":
        """Fast multiply by coeff * x^ex v^ev s^es."""
        if not coeff:
            return LaurentPoly._raw({})
        return LaurentPoly._raw(
            {(a + ex, b + ev, c + es): _ratio(k * coeff) for (a, b, c), k in self.terms.items()}
        )

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a LaurentPoly; use Scalar")
        if len(self.terms) == 1:
            ((a, b, c), k), = self.terms.items()
            return LaurentPoly._raw({(a * n, b * n, c * n): _ratio(k**n)})
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def invert_variables(self) -> "LaurentPoly":
        """Substitute x -> x^-1, v -> v^-1, s -> s^-1."""
        return LaurentPoly._raw({(-a, -b, -c): k for (a, b, c), k in self.terms.items()})

    def sorted_terms(self):
        """Terms in the deterministic print order (descending exponent triples)."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def leading_coeff(self):
        if not self.terms:
            return 0
        return self.terms[max(self.terms)]

    def monomial_content(self) -> Triple:
        """Componentwise minimum exponent triple (for a nonzero polynomial)."""
        it = iter(self.terms)
        a, b, c = next(it)
        for (p, q, r) in it:
            if p < a:
                a = p
            if q < b:
                b = q
            if r < c:
                c = r
        return (a, b, c)

    def to_t(self, n: int) -> dict[int, object]:
        """Substitute s = t^n, x = t^-1, v = t^(-n^2); exponents may collide."""
        nn = n * n
        out: dict[int, object] = {}
        for (a, b, c), k in self.terms.items():
            e = -a - nn * b + n * c
            acc = out.get(e)
            if acc is None:
                out[e] = k
            else:
                acc = acc + k
                if acc:
                    out[e] = acc
                else:
                    del out[e]
        return out

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms!r})"


X = LaurentPoly.monomial(1, 0, 0)
V = LaurentPoly.monomial(0, 1, 0)
S = LaurentPoly.monomial(0, 0, 1)
ONE_LP = LaurentPoly.one()
Z_LP = LaurentPoly({(0, 0, 1): 1, (0, 0, -1): -1})  # s - s^-1


def quantum_int(i: int) -> LaurentPoly:
    """[i] = s^(i-1) + s^(i-3) + ... + s^(1-i); [0] = 0."""
    if i < 0:
        raise ValueError("quantum_int needs i >= 0")
    return LaurentPoly._raw({(0, 0, e): 1 for e in range(i - 1, -i - 1, -2)})


def quantum_factorial(i: int) -> LaurentPoly:
    """[i]! = [1][2]...[i]; [0]! = 1."""
    if i < 0:
        raise ValueError("quantum_factorial needs i >= 0")
    out = ONE_LP
    for j in range(2, i + 1):
        out = out * quantum_int(j)
    return out


class Scalar:
    """An element of the fraction field of LaurentPoly.

    Stored as num/den.  Construction folds any single-term denominator into
    the numerator and pulls monomial and rational content out of the rest,
    which keeps denominators small without attempting full gcd reduction.
    Equality is decided by cross multiplication, so unreduced
    representations of the same value compare equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, Scalar) or isinstance(den, Scalar):
            raise TypeError("Scalar components must be polynomials; divide Scalars instead")
        if isinstance(num, (int, Fraction)):
            num = LaurentPoly.const(num)
        if den is None:
            self.num = num
            self.den = ONE_LP
            return
        if isinstance(den, (int, Fraction)):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("Scalar with zero denominator")
        if num.is_zero():
            self.num = num
            self.den = ONE_LP
            return
        if den.is_one():
            self.num = num
            self.den = ONE_LP
            return
        if len(den.terms) == 1:
            ((a, b, c), k), = den.terms.items()
            inv = Fraction(1, 1) / k
            self.num = num.mul_monomial(-a, -b, -c, inv)
            self.den = ONE_LP
            return
        # multi-term denominator: strip its monomial content from both sides,
        # cancel any common s-polynomial factor, then scale so the denominator
        # has integer coefficients with positive leading coefficient, content 1
        a, b, c = den.monomial_content()
        if (a, b, c) != _ZERO3:
            den = den.mul_monomial(-a, -b, -c)
            num = num.mul_monomial(-a, -b, -c)
        num, den = _s_reduce(num, den)
        if den.is_one():
            self.num = num
            self.den = ONE_LP
            return
        if len(den.terms) == 1:
            ((a, b, c), k), = den.terms.items()
            inv = Fraction(1, 1) / k
            self.num = num.mul_monomial(-a, -b, -c, inv)
            self.den = ONE_LP
            return
        scale = _primitive_scale(den)
        if scale != 1:
            den = den * scale
            num = num * scale
        if den.terms[max(den.terms)] < 0:
            den = -den
            num = -num
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "Scalar":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def zero(cls) -> "Scalar":
        return cls._raw(LaurentPoly.zero(), ONE_LP)

    @classmethod
    def one(cls) -> "Scalar":
        return cls._raw(ONE_LP, ONE_LP)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "Scalar":
        return cls._raw(p, ONE_LP)

    @classmethod
    def monomial(cls, ex: int, ev: int, es: int, coeff=1) -> "Scalar":
        return cls._raw(LaurentPoly.monomial(ex, ev, es, coeff), ONE_LP)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den is other.den or self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("Scalar is not hashable (equality is by value, not form)")

    def __add__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den is other.den or self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return Scalar(other) - self

    def __neg__(self) -> "Scalar":
        return Scalar._raw(-self.num, self.den)

    def __mul__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            return Scalar._raw(self.num * other, self.den)
        if isinstance(other, LaurentPoly):
            return Scalar(self.num * other, self.den)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar._raw(self.num * other.num, ONE_LP)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def mul_poly(self, p: LaurentPoly) -> "Scalar":
        """Multiply by a polynomial without re-normalising the denominator."""
        return Scalar._raw(self.num * p, self.den)

    def mul_monomial(self, ex: int, ev: int, es: int, coeff=1) -> "Scalar":
        return Scalar._raw(self.num.mul_monomial(ex, ev, es, coeff), self.den)

    def __truediv__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division of Scalar by zero")
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar(other) / self

    def __pow__(self, n: int) -> "Scalar":
        if n == 0:
            return Scalar.one()
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero Scalar")
            return Scalar(self.den, self.num) ** (-n)
        return Scalar(self.num**n, self.den**n)

    def invert_variables(self) -> "Scalar":
        """Substitute x -> x^-1, v -> v^-1, s -> s^-1."""
        return Scalar(self.num.invert_variables(), self.den.invert_variables())

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({self.num.terms!r}, {self.den.terms!r})"


def _primitive_scale(p: LaurentPoly) -> Fraction:
    """Rational q > 0 such that q*p has integer coefficients with gcd 1."""
    num_gcd = 0
    den_lcm = 1
    for c in p.terms.values():
        if isinstance(c, Fraction):
            num_gcd = gcd(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        else:
            num_gcd = gcd(num_gcd, c)
    return _ratio(Fraction(den_lcm, num_gcd))


def _s_reduce(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Cancel the common s-polynomial factor of num and den.

    Denominators arise from quantum-integer products, so they only involve s;
    a factor divides the numerator exactly when it divides every (x, v)-slice,
    which reduces the cancellation to univariate gcds.
    """
    if any(e[0] or e[1] for e in den.terms):
        return num, den
    dcoe, dlo = _dense({c: k for (_, _, c), k in den.terms.items()})
    slices: dict[tuple[int, int], dict[int, object]] = {}
    for (a, b, c), k in num.terms.items():
        slices.setdefault((a, b), {})[c] = k
    g = dcoe
    packs = []
    for ab, sl in slices.items():
        coe, lo = _dense(sl)
        packs.append((ab, coe, lo))
        g = _poly_gcd(g, coe)
        if len(g) == 1:
            return num, den
    dq = _poly_quo(dcoe, g)
    terms = {}
    for ab, coe, lo in packs:
        q = _poly_quo(coe, g)
        for e, c in enumerate(q):
            if c:
                terms[(ab[0], ab[1], e + lo)] = _ratio(c)
    new_den = LaurentPoly({(0, 0, e + dlo): _ratio(c) for e, c in enumerate(dq) if c})
    return LaurentPoly(terms), new_den


def delta() -> Scalar:
    """Skein value of one 0-framed loop in the plane: (v^-1 - v)/(s - s^-1)."""
    return Scalar(LaurentPoly({(0, -1, 0): 1, (0, 1, 0): -1}), Z_LP)


Z = Scalar.from_poly(Z_LP)


# ---------------------------------------------------------------------------
# text formatting (the parsers in parsing.py read this format back)

_VARS = "xvs"


def _format_term(exps: Triple, coeff, lead: bool) -> str:
    pieces = []
    for name, e in zip(_VARS, exps):
        if e == 1:
            pieces.append(name)
        elif e != 0:
            pieces.append(f"{name}^{e}")
    sign = ""
    if coeff < 0:
        sign = "-" if lead else "- "
        coeff = -coeff
    elif not lead:
        sign = "+ "
    if not pieces:
        body = str(coeff)
    elif coeff == 1:
        body = "*".join(pieces)
    else:
        body = str(coeff) + "*" + "*".join(pieces)
    return sign + body


def format_poly(p: LaurentPoly) -> str:
    if not p.terms:
        return "0"
    out = []
    for i, (e, c) in enumerate(p.sorted_terms()):
        out.append(_format_term(e, c, lead=(i == 0)))
    return " ".join(out)


def _paren(s: str) -> str:
    if " " in s or s.startswith("-"):
        return f"({s})"
    return s


def format_scalar(sc: Scalar) -> str:
    if sc.den.is_one():
        return format_poly(sc.num)
    return f"{_paren(format_poly(sc.num))}/{_paren(format_poly(sc.den))}"


# ---------------------------------------------------------------------------
# sl(N) specialisation and the h-expansion


class SpecializationError(ValueError):
    """The denominator vanished identically under s = t^N, x = t^-1, v = t^(-N^2)."""


class PoleError(ValueError):
    """The specialised fraction has a genuine pole at h = 0."""

    def __init__(self, order: int):
        super().__init__(f"pole at h = 0: denominator vanishes to order {order}, numerator does not")
        self.order = order


def _dense(p: dict[int, object]) -> tuple[list[Fraction], int]:
    """Laurent dict -> (dense coefficient list from degree 0, minimum exponent)."""
    lo = min(p)
    hi = max(p)
    coeffs = [Fraction(0)] * (hi - lo + 1)
    for e, c in p.items():
        coeffs[e - lo] = Fraction(c)
    return coeffs, lo


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b) and any(a):
        while a and not a[-1]:
            a.pop()
        if len(a) < len(b):
            break
        q = a[-1] / b[-1]
        off = len(a) - len(b)
        for i, bc in enumerate(b):
            a[off + i] -= q * bc
        a.pop()
    while a and not a[-1]:
        a.pop()
    return a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _poly_rem(a, b)
    return [c / a[-1] for c in a]


def _poly_quo(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    a = a[:]
    while len(a) >= len(b):
        q = a[-1] / b[-1]
        out[len(a) - len(b)] = q
        off = len(a) - len(b)
        for i, bc in enumerate(b):
            a[off + i] -= q * bc
        a.pop()
        while a and not a[-1] and len(a) >= len(b):
            a.pop()
    return out


def _t_reduce(num: dict, den: dict) -> tuple[dict, dict]:
    """Bring num/den to lowest terms with an integer, positive-leading denominator."""
    if not num:
        return {}, {0: 1}
    ncoe, nlo = _dense(num)
    dcoe, dlo = _dense(den)
    shift = nlo - dlo
    if len(dcoe) > 1 and len(ncoe) > 1:
        g = _poly_gcd(ncoe, dcoe)
        if len(g) > 1:
            ncoe = _poly_quo(ncoe, g)
            dcoe = _poly_quo(dcoe, g)
    # den becomes primitive integer with positive leading coefficient
    den_lcm = 1
    for c in dcoe:
        if c:
            den_lcm = lcm(den_lcm, c.denominator)
    g = 0
    for c in dcoe:
        g = gcd(g, int(c * den_lcm))
    scale = Fraction(den_lcm, g or 1)
    if dcoe[-1] < 0:
        scale = -scale
    dcoe = [c * scale for c in dcoe]
    ncoe = [c * scale for c in ncoe]
    out_num = {e + shift: _ratio(c) for e, c in enumerate(ncoe) if c}
    out_den = {e: _ratio(c) for e, c in enumerate(dcoe) if c}
    return out_num, out_den


class TFraction:
    """A one-variable Laurent fraction in t, the image of a Scalar under sl(N)."""

    __slots__ = ("num", "den")

    def __init__(self, num: dict[int, object], den: dict[int, object] | None = None):
        num = {e: c for e, c in num.items() if c}
        den = {e: c for e, c in (den or {0: 1}).items() if c}
        if not den:
            raise ZeroDivisionError("TFraction with zero denominator")
        self.num, self.den = _t_reduce(num, den)

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other) -> bool:
        if not isinstance(other, TFraction):
            return NotImplemented
        return _t_mul(self.num, other.den) == _t_mul(other.num, self.den)

    def __hash__(self):
        raise TypeError("TFraction is not hashable")

    def __add__(self, other: "TFraction") -> "TFraction":
        return TFraction(
            _t_add(_t_mul(self.num, other.den), _t_mul(other.num, self.den)),
            _t_mul(self.den, other.den),
        )

    def __mul__(self, other: "TFraction") -> "TFraction":
        return TFraction(_t_mul(self.num, other.num), _t_mul(self.den, other.den))

    def __str__(self) -> str:
        if self.den == {0: 1}:
            return format_tpoly(self.num)
        return f"{_paren(format_tpoly(self.num))}/{_paren(format_tpoly(self.den))}"

    def __repr__(self) -> str:
        return f"TFraction({self.num!r}, {self.den!r})"


def _t_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        acc = out.get(e)
        if acc is None:
            out[e] = c
        else:
            acc = acc + c
            if acc:
                out[e] = acc
            else:
                del out[e]
    return out


def _t_mul(a: dict, b: dict) -> dict:
    out: dict[int, object] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            acc = out.get(e)
            if acc is None:
                out[e] = c1 * c2
            else:
                acc = acc + c1 * c2
                if acc:
                    out[e] = acc
                else:
                    del out[e]
    return out


def format_tpoly(p: dict[int, object]) -> str:
    if not p:
        return "0"
    out = []
    for i, (e, c) in enumerate(sorted(p.items(), reverse=True)):
        name = "t" if e == 1 else (f"t^{e}" if e else "")
        sign = ""
        if c < 0:
            sign = "-" if i == 0 else "- "
            c = -c
        elif i:
            sign = "+ "
        if not name:
            body = str(c)
        elif c == 1:
            body = name
        else:
            body = f"{c}*{name}"
        out.append(sign + body)
    return " ".join(out)


def specialize_sln(value, n: int) -> TFraction:
    """Specialise a Scalar (or LaurentPoly) at sl(N): s = t^N, x = t^-1, v = t^(-N^2).

    Distinct monomials can collide and cancel after substitution; if the
    whole denominator cancels the result is no longer defined and a
    SpecializationError is raised.
    """
    if n < 2:
        raise ValueError("specialize_sln needs N >= 2")
    if isinstance(value, LaurentPoly):
        value = Scalar.from_poly(value)
    num = value.num.to_t(n)
    den = value.den.to_t(n)
    if not den:
        raise SpecializationError(f"denominator vanishes identically at N = {n}")
    return TFraction(num, den)


def _h_series(tpoly: dict[int, object], n: int, order: int) -> list[Fraction]:
    """Taylor coefficients in h of sum c_k t^k at t = e^(h/2N), through h^order."""
    coeffs = []
    for j in range(order + 1):
        acc = Fraction(0)
        fact = 1
        for i in range(1, j + 1):
            fact *= i
        for k, c in tpoly.items():
            acc += Fraction(c) * Fraction(k, 2 * n) ** j
        coeffs.append(acc / fact)
    return coeffs


def h_expand(f, n: int, order: int) -> list:
    """Expand f(t = e^(h/2N)) as a series in h; return coefficients of h^0..h^order.

    The denominator may vanish at h = 0 provided the numerator vanishes to
    at least the same order (the singularity is then removable, as happens
    for delta at any N).  A genuine pole raises PoleError with the
    denominator's vanishing order.
    """
    if order < 0:
        raise ValueError("h_expand needs order >= 0")
    if isinstance(f, (Scalar, LaurentPoly)):
        raise TypeError("specialise first: h_expand takes the result of specialize_sln")
    if isinstance(f, dict):
        f = TFraction(f)
    # a nonzero finite sum of exponentials e^(k h/2N) vanishes at h = 0 to
    # order at most (number of distinct exponents - 1)
    probe = _h_series(f.den, n, len(f.den))
    van = next(i for i, c in enumerate(probe) if c)
    num_series = _h_series(f.num, n, order + van)
    den_series = _h_series(f.den, n, order + van)
    if any(num_series[i] for i in range(van)):
        raise PoleError(van)
    num_series = num_series[van:]
    den_series = den_series[van:]
    out: list[Fraction] = []
    for j in range(order + 1):
        acc = num_series[j]
        for i in range(j):
            acc -= out[i] * den_series[j - i]
        out.append(acc / den_series[0])
    return [_ratio(c) for c in out]
