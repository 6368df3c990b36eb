"""Homogeneous binary forms with exact coefficients.

A form of degree d in the variables s0, s1 is stored as a dense tuple of
d+1 coefficients, entry j holding the coefficient of s0^(d-j) * s1^j.
Forms are immutable; the formal degree is part of the value, so the zero
form of degree 2 and the zero form of degree 3 are distinct objects.
Coefficients may be ints, Fractions, or FpElements and are never mixed
across fields (the scalar layer enforces this).
"""

from __future__ import annotations

from .errors import BothZeroError, InexactDivisionError


class BinaryForm:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        coeffs = tuple(coeffs)
        if degree < 0 or len(coeffs) != degree + 1:
            raise ValueError(
                f"degree-{degree} form needs {degree + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    @classmethod
    def zero(cls, degree: int, field) -> "BinaryForm":
        return cls(degree, [field.zero] * (degree + 1))

    @classmethod
    def monomial(cls, degree: int, s1_power: int, scalar) -> "BinaryForm":
        """scalar * s0^(degree - s1_power) * s1^s1_power."""
        if not 0 <= s1_power <= degree:
            raise ValueError(f"s1 power {s1_power} out of range for degree {degree}")
        coeffs = [0 * scalar] * (degree + 1)
        coeffs[s1_power] = scalar
        return cls(degree, coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return BinaryForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return BinaryForm(self.degree, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm(self.degree, [-a for a in self.coeffs])

    def scale(self, scalar) -> "BinaryForm":
        return BinaryForm(self.degree, [scalar * a for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        d = self.degree + other.degree
        out = [None] * (d + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                term = a * b
                out[i + j] = term if out[i + j] is None else out[i + j] + term
        return BinaryForm(d, out)

    def power(self, e: int) -> "BinaryForm":
        if e < 0:
            raise ValueError("negative power of a form")
        result = BinaryForm(0, (1,))
        for _ in range(e):
            result = result * self
        return result

    def evaluate(self, s0, s1):
        """Value at the pair (s0, s1), exact in the coefficient field."""
        acc = None
        s0_pow = 1
        # walk j downward so s0_pow builds up as s1_pow is peeled off
        s1_pow = 1
        vals = []
        for j in range(self.degree, -1, -1):
            vals.append((j, s0_pow))
            s0_pow = s0_pow * s0
        for j, s0p in reversed(vals):
            term = self.coeffs[j] * s0p * s1_pow
            acc = term if acc is None else acc + term
            s1_pow = s1_pow * s1
        return acc

    def s1_valuation(self) -> int:
        """Multiplicity of the s1 factor (degree+1 for the zero form)."""
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        return self.degree + 1

    def s0_valuation(self) -> int:
        for j in range(self.degree, -1, -1):
            if self.coeffs[j]:
                return self.degree - j
        return self.degree + 1

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            a, b = self.degree - j, j
            mono = "".join(
                [f"s0^{a}" if a > 1 else "s0" if a == 1 else "",
                 f"s1^{b}" if b > 1 else "s1" if b == 1 else ""]
            ) or "1"
            terms.append(f"{c}*{mono}")
        return f"BinaryForm(deg={self.degree}: {' + '.join(terms) if terms else '0'})"


def linear_form(c0, c1) -> BinaryForm:
    """c0*s0 + c1*s1."""
    return BinaryForm(1, (c0, c1))


def vanishing_at(value) -> BinaryForm:
    """The linear form s0 - value*s1, zero at the point (value : 1)."""
    return BinaryForm(1, (1 + 0 * value, -value))


def product_of_linears(values, field) -> BinaryForm:
    """prod_i (s0 - value_i * s1); the empty product is the constant 1."""
    result = BinaryForm(0, (field.one,))
    for v in values:
        result = result * vanishing_at(v)
    return result


def _as_t_poly(f: BinaryForm):
    """Strip the s1 factor; return (s1 valuation, coefficients by t-power).

    Writing f = s1^v * F with s1 not dividing F, F corresponds to a
    polynomial in t = s0/s1 whose leading coefficient is nonzero.  The
    returned list is indexed by t-power, length = degree(F) + 1.
    """
    v = f.s1_valuation()
    if v > f.degree:
        raise ValueError("zero form has no t-polynomial")
    return v, [f.coeffs[f.degree - m] for m in range(f.degree - v + 1)]


def _from_t_poly(s1_power: int, phi) -> BinaryForm:
    """Inverse of _as_t_poly; phi must have a nonzero leading coefficient."""
    dphi = len(phi) - 1
    degree = s1_power + dphi
    coeffs = [0 * phi[0]] * (degree + 1)
    for m, c in enumerate(phi):
        coeffs[degree - m] = c
    return BinaryForm(degree, coeffs)


def _poly_trim(p):
    while len(p) > 1 and not p[-1]:
        p = p[:-1]
    return p


def _poly_divmod(num, den):
    """Univariate division with remainder over a field, lists by power."""
    num = list(num)
    q = [0 * den[-1]] * max(len(num) - len(den) + 1, 1)
    inv_lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / inv_lead
        q[k] = c
        for i, d in enumerate(den):
            num[k + i] = num[k + i] - c * d
    return _poly_trim(q), _poly_trim(num)


def divide_exact(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Quotient f/g when g divides f exactly, else InexactDivisionError."""
    if g.is_zero():
        raise ZeroDivisionError("division of a form by the zero form")
    if f.is_zero():
        deg_q = max(f.degree - g.degree, 0)
        zero = 0 * g.coeffs[g.s1_valuation()]
        return BinaryForm(deg_q, [zero] * (deg_q + 1))
    if f.degree < g.degree:
        raise InexactDivisionError(
            f"degree {f.degree} form not divisible by degree {g.degree} form",
            remainder=f,
        )
    vf, pf = _as_t_poly(f)
    vg, pg = _as_t_poly(g)
    if vf < vg or len(pf) < len(pg):
        raise InexactDivisionError("divisor has a factor the dividend lacks", remainder=f)
    q_poly, r_poly = _poly_divmod(pf, pg)
    if any(r_poly):
        raise InexactDivisionError(
            "nonzero remainder", remainder=f - g * _from_t_poly(vf - vg, q_poly)
        )
    # q picks up the leftover s1 power and must be padded to full degree
    q = _from_t_poly(vf - vg, _poly_trim(q_poly))
    if q.degree != f.degree - g.degree:
        pad = [0 * q.coeffs[0]] * (f.degree - g.degree - q.degree)
        q = BinaryForm(f.degree - g.degree, pad + list(q.coeffs))
    check = f - g * q
    if not check.is_zero():
        raise InexactDivisionError("division self-check failed", remainder=check)
    return q


def form_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic gcd of two forms (leading s0-coefficient 1).

    The zero form is absorbing: gcd(0, g) is g made monic.  Raises
    BothZeroError when both arguments vanish identically.
    """
    if f.is_zero() and g.is_zero():
        raise BothZeroError("gcd of two zero forms is undefined")
    if f.is_zero():
        v, p = _as_t_poly(g)
        return _from_t_poly(v, [c / p[-1] for c in p])
    if g.is_zero():
        v, p = _as_t_poly(f)
        return _from_t_poly(v, [c / p[-1] for c in p])
    vf, pf = _as_t_poly(f)
    vg, pg = _as_t_poly(g)
    a, b = pf, pg
    while len(b) > 1 or b[0]:
        _, r = _poly_divmod(a, b)
        a, b = b, r
        if len(b) == 1 and not b[0]:
            break
    monic = [c / a[-1] for c in a]
    return _from_t_poly(min(vf, vg), monic)


def gcd_many(forms) -> BinaryForm:
    forms = list(forms)
    if not forms:
        raise ValueError("gcd of an empty list")
    acc = forms[0]
    for nxt in forms[1:]:
        if acc.is_zero() and nxt.is_zero():
            continue
        acc = form_gcd(acc, nxt)
        if acc.degree == 0:
            return acc
    if acc.is_zero():
        raise BothZeroError("gcd of all-zero forms is undefined")
    if acc.degree > 0 or acc.coeffs[0] != 1:
        v, p = _as_t_poly(acc)
        acc = _from_t_poly(v, [c / p[-1] for c in p])
    return acc


def compose_form(outer: BinaryForm, f0: BinaryForm, f1: BinaryForm) -> BinaryForm:
    """Substitute s0 -> f0 and s1 -> f1 into outer; f0, f1 of equal degree."""
    if f0.degree != f1.degree:
        raise ValueError("substituted forms must share a degree")
    d = outer.degree
    # powers of f0 ascending, powers of f1 descending, paired by index
    pow0 = [BinaryForm(0, (1,))]
    pow1 = [BinaryForm(0, (1,))]
    for _ in range(d):
        pow0.append(pow0[-1] * f0)
        pow1.append(pow1[-1] * f1)
    acc = BinaryForm.zero(d * f0.degree, _field_like(outer))
    for j, c in enumerate(outer.coeffs):
        if not c:
            continue
        acc = acc + (pow0[d - j] * pow1[j]).scale(c)
    return acc


def _field_like(f: BinaryForm):
    from .fields import field_of

    for c in f.coeffs:
        if not isinstance(c, int):
            return field_of(c)
    return field_of(f.coeffs[0])


def random_form(degree: int, field, rng, nonzero: bool = False) -> BinaryForm:
    while True:
        f = BinaryForm(degree, [field.random_scalar(rng) for _ in range(degree + 1)])
        if not nonzero or not f.is_zero():
            return f
