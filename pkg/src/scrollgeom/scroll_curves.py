"""Curves inside rational normal scrolls and their pushforwards.

A scroll point is a pair ((y_1, ..., y_d), (t_0, t_1)) of fiber and base
coordinates, subject to (y, t) ~ (lam^{-a_i} mu y_i, lam t).  A curve of
fiber-class degree k is given by base forms t_0, t_1 of degree k and
fiber forms y_i of degree n - k*a_i; composing with the monomial system
t_0^b t_1^c y_i (b + c = a_i) lands the curve in P^n with coordinates of
degree n.  The module also carries section interpolation through point
frames, sampled incidence-dimension measurements, and the one-parameter
scroll degeneration family.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DependentConditionsError
from .fields import DEFAULT_PRIME, PrimeField, field_of, random_distinct
from .forms import BinaryForm, compose_form, form_gcd, gcd_many, random_form
from .linalg import rank_kernel, rank_of
from .rngstream import as_stream
from .scrolls import EMPTY, ScrollType, dim_curves_in_scroll


class CurveInScroll:
    """Curve of class kL-degree k inside the scroll of the given type."""

    __slots__ = ("scroll", "k", "t0", "t1", "ys", "field")

    def __init__(self, scroll: ScrollType, k: int, t0: BinaryForm, t1: BinaryForm, ys):
        if not isinstance(scroll, ScrollType):
            scroll = ScrollType(scroll)
        ys = tuple(ys)
        n, d = scroll.n, scroll.d
        if k < 1:
            raise ValueError(f"fiber degree k must be positive, got {k}")
        if k > d:
            raise ValueError(f"k={k} exceeds the scroll dimension d={d}")
        if t0.degree != k or t1.degree != k:
            raise ValueError(f"base forms must have degree {k}")
        if t0.is_zero() and t1.is_zero():
            raise ValueError("base forms must not both vanish")
        if len(ys) != d:
            raise ValueError(f"need {d} fiber forms, got {len(ys)}")
        for i, (a_i, y) in enumerate(zip(scroll.degrees, ys)):
            want = n - k * a_i
            if want < 0:
                raise ValueError(
                    f"no curve with k={k} exists: n - k*a_{i + 1} = {want} < 0"
                )
            if y.degree != want:
                raise ValueError(f"fiber form {i + 1} must have degree {want}")
        if all(y.is_zero() for y in ys):
            raise ValueError("fiber forms must not all vanish")
        base_gcd = form_gcd(t0, t1)
        if base_gcd.degree != 0:
            raise ValueError("base forms must be coprime (k is the true degree)")
        fiber_gcd = gcd_many([y for y in ys if not y.is_zero()])
        if fiber_gcd.degree != 0:
            raise ValueError(
                "fiber forms share a zero; the curve misses a fiber point there"
            )
        object.__setattr__(self, "scroll", scroll)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "t0", t0)
        object.__setattr__(self, "t1", t1)
        object.__setattr__(self, "ys", ys)
        object.__setattr__(self, "field", field_of(t0.coeffs[0]))

    def __setattr__(self, name, value):
        raise AttributeError("CurveInScroll is immutable")

    def point_at(self, s0, s1):
        """Scroll point at parameter (s0 : s1)."""
        y = tuple(f.evaluate(s0, s1) for f in self.ys)
        t = (self.t0.evaluate(s0, s1), self.t1.evaluate(s0, s1))
        return (y, t)

    def __repr__(self):
        return f"CurveInScroll({self.scroll!r}, k={self.k})"


@dataclass(frozen=True)
class PushedCurve:
    """Pushforward of a scroll curve to P^n."""

    forms: tuple
    slots: tuple  # (fiber index i, b, c) per coordinate, b + c = a_i
    rank: int
    degenerate: bool


def monomial_slots(scroll: ScrollType):
    """Coordinate layout of the scroll's hyperplane system.

    Slot order: fiber blocks in order, each block listing exponent b of
    t_0 from a_i down to 0.
    """
    out = []
    for i, a_i in enumerate(scroll.degrees):
        for b in range(a_i, -1, -1):
            out.append((i, b, a_i - b))
    return tuple(out)


def push_forward(curve: CurveInScroll) -> PushedCurve:
    scroll = curve.scroll
    n = scroll.n
    slots = monomial_slots(scroll)
    t0_pows = [BinaryForm(0, (curve.field.one,))]
    t1_pows = [BinaryForm(0, (curve.field.one,))]
    for _ in range(max(scroll.degrees) if scroll.degrees else 0):
        t0_pows.append(t0_pows[-1] * curve.t0)
        t1_pows.append(t1_pows[-1] * curve.t1)
    forms = []
    for (i, b, c) in slots:
        forms.append(t0_pows[b] * t1_pows[c] * curve.ys[i])
    rank = rank_of([list(f.coeffs) for f in forms], n + 1, curve.field)
    return PushedCurve(tuple(forms), slots, rank, rank < n + 1)


class ScrollSection:
    """Divisor-class section mL + M on a scroll, held componentwise.

    The degree sequence is kept in the order given (the degeneration
    family needs unsorted auxiliary scrolls), so this accepts either a
    ScrollType or a raw tuple of nonnegative degrees.
    """

    __slots__ = ("degrees", "m", "comps", "field")

    def __init__(self, degrees, m: int, comps, field=None):
        if isinstance(degrees, ScrollType):
            degrees = degrees.degrees
        degrees = tuple(int(a) for a in degrees)
        comps = tuple(comps)
        if any(a < 0 for a in degrees):
            raise ValueError("scroll degrees must be nonnegative")
        if len(comps) != len(degrees):
            raise ValueError(f"need {len(degrees)} components, got {len(comps)}")
        for i, (a_i, comp) in enumerate(zip(degrees, comps)):
            if a_i + m < 0:
                raise ValueError(f"class degree a_{i + 1} + m = {a_i + m} < 0")
            if comp.degree != a_i + m:
                raise ValueError(f"component {i + 1} must have degree {a_i + m}")
        if field is None:
            field = field_of(comps[0].coeffs[0])
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "comps", comps)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("ScrollSection is immutable")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def __eq__(self, other):
        if not isinstance(other, ScrollSection):
            return NotImplemented
        return (
            self.degrees == other.degrees
            and self.m == other.m
            and self.comps == other.comps
        )

    def __hash__(self):
        return hash((self.degrees, self.m, self.comps))

    def __repr__(self):
        return f"ScrollSection(degrees={self.degrees}, m={self.m})"


def section_evaluate(section: ScrollSection, point):
    """Value sum_i comp_i(t) * y_i at a scroll point (y, t)."""
    y, t = point
    if len(y) != len(section.degrees):
        raise ValueError(f"point has {len(y)} fiber coordinates, need {len(section.degrees)}")
    if not (t[0] or t[1]):
        raise ValueError("invalid scroll point: base coordinates both zero")
    if not any(y):
        raise ValueError("invalid scroll point: fiber coordinates all zero")
    acc = None
    for comp, y_i in zip(section.comps, y):
        term = comp.evaluate(t[0], t[1]) * y_i
        acc = term if acc is None else acc + term
    return acc


def section_on_curve(section: ScrollSection, curve: CurveInScroll) -> BinaryForm:
    """Pullback of the section along the curve, degree k*m + n."""
    if section.degrees != curve.scroll.degrees:
        raise ValueError("section and curve live on different scrolls")
    n, k = curve.scroll.n, curve.k
    total = BinaryForm.zero(k * section.m + n, curve.field)
    for comp, y in zip(section.comps, curve.ys):
        if comp.is_zero() or y.is_zero():
            continue
        total = total + compose_form(comp, curve.t0, curve.t1) * y
    return total


def random_curve_in_scroll(scroll: ScrollType, k: int, field, rng) -> CurveInScroll:
    if dim_curves_in_scroll(scroll, k) is EMPTY:
        raise ValueError(f"no curves with k={k} in {scroll!r}")
    n = scroll.n
    while True:
        t0 = random_form(k, field, rng)
        t1 = random_form(k, field, rng)
        ys = [random_form(n - k * a_i, field, rng) for a_i in scroll.degrees]
        try:
            return CurveInScroll(scroll, k, t0, t1, ys)
        except ValueError:
            continue


def random_lifted_frame(scroll: ScrollType, field, rng):
    """n+2 scroll points with pairwise distinct base values."""
    n, d = scroll.n, scroll.d
    ts = random_distinct(field, rng, n + 2)
    points = []
    for t_val in ts:
        while True:
            y = tuple(field.random_scalar(rng) for _ in range(d))
            if any(y):
                break
        points.append((y, (t_val, field.one)))
    return points


@dataclass(frozen=True)
class UnisecantResult:
    status: str  # UNIQUE, NONE, or POSITIVE_FAMILY
    curve: object  # CurveInScroll for UNIQUE (and a sample if a family exists)
    kernel_dim: int


def _t_values_injective(points, field):
    for i in range(len(points)):
        u = points[i][1]
        for j in range(i + 1, len(points)):
            v = points[j][1]
            if not (u[0] * v[1] - u[1] * v[0]):
                return False
    return True


def _hyperplane_conditions_rank(scroll, points, field):
    slots = monomial_slots(scroll)
    rows = []
    for (y, t) in points:
        row = []
        for (i, b, c) in slots:
            row.append(_pow(t[0], b) * _pow(t[1], c) * y[i])
        rows.append(row)
    return rank_of(rows, scroll.n + 1, field)


def _pow(x, e: int):
    if e == 0:
        return 1
    acc = x
    for _ in range(e - 1):
        acc = acc * x
    return acc


def interpolate_unisecant(scroll: ScrollType, lifted_frame, field=None) -> UnisecantResult:
    """Solve for the k=1 curve through n+2 marked scroll points.

    The base map of a k=1 curve is an isomorphism, normalized here to the
    identity, so only the fiber forms y_i (degree n - a_i) are unknown.
    Passing through a point means y(t_j) is proportional to the marked
    fiber vector, encoded by cross-multiplication against a nonzero pivot
    coordinate.  Kernel dimension 1 is the unique curve, 0 means none,
    and 2 or more is a positive-dimensional family.
    """
    if not isinstance(scroll, ScrollType):
        scroll = ScrollType(scroll)
    n, d = scroll.n, scroll.d
    points = [(tuple(y), tuple(t)) for (y, t) in lifted_frame]
    if len(points) != n + 2:
        raise ValueError(f"need n+2 = {n + 2} points, got {len(points)}")
    if field is None:
        field = field_of(points[0][1][0])
    for (y, t) in points:
        if not (t[0] or t[1]):
            raise ValueError("invalid scroll point: base coordinates both zero")
        if not any(y):
            raise ValueError("invalid scroll point: fiber coordinates all zero")
    if _hyperplane_conditions_rank(scroll, points, field) < n + 1:
        raise DependentConditionsError(
            "the marked points impose dependent conditions on the hyperplane system"
        )
    if not _t_values_injective(points, field):
        return UnisecantResult("NONE", None, 0)

    y_degs = [n - a_i for a_i in scroll.degrees]
    offsets = [0]
    for deg in y_degs:
        offsets.append(offsets[-1] + deg + 1)
    total = offsets[-1]

    rows = []
    for (y, t) in points:
        pivot = next(i for i in range(d) if y[i])
        mono = []
        for deg in y_degs:
            mono.append([_pow(t[0], deg - r) * _pow(t[1], r) for r in range(deg + 1)])
        for i in range(d):
            if i == pivot:
                continue
            # y_i(t_j) * y_pivot_marked - y_pivot(t_j) * y_i_marked = 0
            row = [field.zero] * total
            for r, v in enumerate(mono[i]):
                row[offsets[i] + r] = field(v * y[pivot])
            for r, v in enumerate(mono[pivot]):
                row[offsets[pivot] + r] = row[offsets[pivot] + r] - field(v * y[i])
            rows.append(row)

    if not rows:
        # d = 1: the scroll is a single block and the curve is forced
        kernel = [tuple(field.one for _ in range(total))]
        rank = 0
    else:
        rank, kernel = rank_kernel(rows, total, field)
    kernel_dim = total - rank if rows else 1
    if kernel_dim == 0:
        return UnisecantResult("NONE", None, 0)

    curve = _curve_from_fiber_vector(scroll, kernel[0], offsets, y_degs, points, field)
    if kernel_dim == 1:
        if curve is None:
            return UnisecantResult("NONE", None, 1)
        return UnisecantResult("UNIQUE", curve, 1)
    return UnisecantResult("POSITIVE_FAMILY", curve, kernel_dim)


def _curve_from_fiber_vector(scroll, vec, offsets, y_degs, points, field):
    """Build the curve from a solution vector, or None if it is spurious.

    Cross-multiplication admits vectors whose fiber forms all vanish at
    some marked base value; those do not pass through the marked point.
    """
    ys = []
    for i, deg in enumerate(y_degs):
        coeffs = vec[offsets[i] : offsets[i] + deg + 1]
        ys.append(BinaryForm(deg, coeffs))
    for (y, t) in points:
        if not any(f.evaluate(t[0], t[1]) for f in ys):
            return None
    one = field.one
    t0 = BinaryForm(1, (one, field.zero))
    t1 = BinaryForm(1, (field.zero, one))
    try:
        return CurveInScroll(scroll, 1, t0, t1, ys)
    except ValueError:
        return None


def sections_through_points(scroll: ScrollType, m: int, points, field=None):
    """Basis of sections of mL + M vanishing at all the given points."""
    if not isinstance(scroll, ScrollType):
        scroll = ScrollType(scroll)
    degrees = scroll.degrees
    if field is None:
        field = field_of(points[0][1][0])
    comp_degs = [a_i + m for a_i in degrees]
    offsets = [0]
    for deg in comp_degs:
        offsets.append(offsets[-1] + deg + 1)
    total = offsets[-1]
    rows = []
    for (y, t) in points:
        row = []
        for i, deg in enumerate(comp_degs):
            for r in range(deg + 1):
                row.append(field(_pow(t[0], deg - r) * _pow(t[1], r) * y[i]))
        rows.append(row)
    _, kernel = rank_kernel(rows, total, field)
    out = []
    for vec in kernel:
        comps = []
        for i, deg in enumerate(comp_degs):
            comps.append(BinaryForm(deg, vec[offsets[i] : offsets[i] + deg + 1]))
        out.append(ScrollSection(degrees, m, comps, field))
    return out


# ---------------------------------------------------------------------------
# incidence-dimension sampling


@dataclass(frozen=True)
class DimensionReport:
    family: str
    params: dict
    predicted: object  # int, or EMPTY sentinel repr upstream
    measured_ranks: list
    group_correction: dict
    seed: int
    field: str
    fiber_dims: list

    def to_dict(self):
        return {
            "family": self.family,
            "params": self.params,
            "predicted": self.predicted,
            "measured_ranks": self.measured_ranks,
            "group_correction": self.group_correction,
            "seed": self.seed,
            "field": self.field,
            "fiber_dims": self.fiber_dims,
        }


def _ds0_value(form: BinaryForm, s0, s1):
    """Value of the formal s0-partial of the form at (s0, s1)."""
    d = form.degree
    acc = None
    for j, c in enumerate(form.coeffs):
        e = d - j
        if e == 0 or not c:
            continue
        term = c * e * _pow(s0, e - 1) * _pow(s1, j)
        acc = term if acc is None else acc + term
    if acc is None:
        return form.coeffs[0] * 0
    return acc


def _coefficient_jacobian(curve, sigma, field):
    """Partial derivatives of the n+2 image points in the curve coefficients.

    Returns (rows of [J_c | J_s | gauge], N) where rows are stacked per
    point (n+1 coordinates each), J_s holds the motion of each marked
    parameter, and the gauge block holds one rescaling column per point.
    """
    scroll = curve.scroll
    n, k = scroll.n, curve.k
    slots = monomial_slots(scroll)
    y_degs = [n - k * a_i for a_i in scroll.degrees]
    n_coeffs = 2 * (k + 1) + sum(deg + 1 for deg in y_degs)
    n_pts = len(sigma)
    width = n_coeffs + n_pts + n_pts
    rows = [[field.zero] * width for _ in range(n_pts * (n + 1))]
    one = field.one
    for j, s in enumerate(sigma):
        t0v = curve.t0.evaluate(s, one)
        t1v = curve.t1.evaluate(s, one)
        t0d = _ds0_value(curve.t0, s, one)
        t1d = _ds0_value(curve.t1, s, one)
        yv = [f.evaluate(s, one) for f in curve.ys]
        yd = [_ds0_value(f, s, one) for f in curve.ys]
        t_mono = [_pow(s, k - r) for r in range(k + 1)]
        y_mono = [[_pow(s, deg - r) for r in range(deg + 1)] for deg in y_degs]
        for c_idx, (i, b, c) in enumerate(slots):
            row = rows[j * (n + 1) + c_idx]
            tb = _pow(t0v, b)
            tc = _pow(t1v, c)
            tb1 = _pow(t0v, b - 1) if b >= 1 else field.zero
            tc1 = _pow(t1v, c - 1) if c >= 1 else field.zero
            value = tb * tc * yv[i]
            # t0 and t1 coefficient blocks
            if b >= 1:
                base = tb1 * tc * yv[i] * b
                for r in range(k + 1):
                    row[r] = field(base * t_mono[r])
            if c >= 1:
                base = tb * tc1 * yv[i] * c
                for r in range(k + 1):
                    row[k + 1 + r] = field(base * t_mono[r])
            # y_i coefficient block
            off = 2 * (k + 1) + sum(deg + 1 for deg in y_degs[:i])
            base = tb * tc
            for r in range(y_degs[i] + 1):
                row[off + r] = field(base * y_mono[i][r])
            # marked-parameter motion
            ds = tb * tc * yd[i]
            if b >= 1:
                ds = ds + tb1 * tc * yv[i] * b * t0d
            if c >= 1:
                ds = ds + tb * tc1 * yv[i] * c * t1d
            row[n_coeffs + j] = field(ds)
            # projective rescale of image point j
            row[n_coeffs + n_pts + j] = field(value)
    return rows, n_coeffs


def incidence_dimension_estimate(
    scroll: ScrollType, k: int, trials: int, seed: int, field=None
) -> DimensionReport:
    """Sampled dimension of the family of k-curves in scrolls of this type.

    Each trial draws a random curve and n+2 marked parameters, then takes
    the rank of the differential of (coefficients) -> (marked image
    points in P^n).  Modding out per-point rescalings leaves the
    curves-as-maps dimension up to the 2-dimensional torus; subtracting
    the 3 reparametrizations gives the family dimension to compare with
    the closed formula.  Appending the parameter motions measures the
    incidence variety and hence the 5-dimensional fibers.
    """
    if not isinstance(scroll, ScrollType):
        scroll = ScrollType(scroll)
    predicted = dim_curves_in_scroll(scroll, k)
    if predicted is EMPTY:
        raise ValueError(f"the family of k={k} curves in {scroll!r} is empty")
    if trials < 1:
        raise ValueError("trials must be positive")
    if field is None:
        field = PrimeField(DEFAULT_PRIME)
    n = scroll.n
    stream = as_stream(seed)
    measured = []
    fiber_dims = []
    for t_idx in range(trials):
        rng = stream.child(f"trial{t_idx}")
        # coprime base forms and zero-free fiber gcd rule out an
        # indeterminate image, so one draw per trial suffices
        curve = random_curve_in_scroll(scroll, k, field, rng)
        sigma = random_distinct(field, rng, n + 2)
        rows, n_coeffs = _coefficient_jacobian(curve, sigma, field)
        n_pts = n + 2
        width = n_coeffs + 2 * n_pts
        config_rows = [row[:n_coeffs] + row[n_coeffs + n_pts :] for row in rows]
        rank_config = rank_of(config_rows, n_coeffs + n_pts, field)
        measured.append(rank_config - n_pts - 3)
        rank_aug = rank_of(rows, width, field)
        incidence_rank = rank_aug - n_pts
        fiber_dims.append(n_coeffs + n_pts - incidence_rank)
    return DimensionReport(
        family=repr(scroll),
        params={"n": n, "d": scroll.d, "a": list(scroll.degrees), "k": k, "trials": trials},
        predicted=predicted,
        measured_ranks=measured,
        group_correction={"reparametrization": 3, "torus": 2},
        seed=seed,
        field=field.name,
        fiber_dims=fiber_dims,
    )


# ---------------------------------------------------------------------------
# the degeneration family


@dataclass(frozen=True)
class ScrollEmbedding:
    """Coordinate embedding of a d-dimensional scroll into a (d+1)-dim one.

    slots[j] = (source fiber index, base-form factor): auxiliary fiber
    coordinate j pulls back to factor(t) * x_{source index}.
    """

    source_degrees: tuple
    aux_degrees: tuple
    slots: tuple


def _resolve_degeneration_indices(degrees, donor, recipient):
    d = len(degrees)
    if d < 2:
        raise ValueError("the degeneration needs at least two fiber blocks")
    if donor is None:
        donor = next((i for i, a in enumerate(degrees) if a >= 1), None)
        if donor is None:
            raise ValueError("no block of positive degree to degenerate")
    if not 0 <= donor < d:
        raise ValueError(f"donor index {donor} out of range")
    if degrees[donor] < 1:
        raise ValueError(f"donor block has degree {degrees[donor]}, needs >= 1")
    if recipient is None:
        recipient = next(i for i in range(d - 1, -1, -1) if i != donor)
    if not 0 <= recipient < d:
        raise ValueError(f"recipient index {recipient} out of range")
    if recipient == donor:
        raise ValueError("donor and recipient must differ")
    return donor, recipient


def degeneration_member(degrees, lam, donor=None, recipient=None, field=None) -> ScrollSection:
    """Hyperplane-class section cutting the lam-member of the family.

    The auxiliary scroll keeps the given block order, lowers the donor
    degree by one and appends a new degree-1 block; the member is
    t0*y_new - lam*t1^(a_donor - 1)*y_donor - t1^(a_recipient)*y_recipient.
    At lam=0 this cuts the degenerate scroll, at lam != 0 a scroll of the
    original type.
    """
    if isinstance(degrees, ScrollType):
        degrees = degrees.degrees
    degrees = tuple(int(a) for a in degrees)
    donor, recipient = _resolve_degeneration_indices(degrees, donor, recipient)
    if field is None:
        field = field_of(lam)
    lam = field(lam)
    aux = list(degrees)
    aux[donor] -= 1
    aux.append(1)
    comps = [BinaryForm.zero(a, field) for a in aux]
    comps[donor] = BinaryForm.monomial(degrees[donor] - 1, degrees[donor] - 1, -lam)
    comps[recipient] = comps[recipient] + BinaryForm.monomial(
        degrees[recipient], degrees[recipient], -field.one
    )
    comps[-1] = BinaryForm.monomial(1, 0, field.one)
    return ScrollSection(tuple(aux), 0, comps, field)


def degeneration_embeddings(degrees, donor=None, recipient=None, field=None):
    """The two scroll embeddings bracketing the degeneration family.

    The first embeds the original scroll as the lam-free locus
    t0*y_new = t1^(a_donor-1)*y_donor; the second embeds the degenerate
    scroll (donor degree down one, recipient degree up one) as the lam=0
    member.
    """
    if isinstance(degrees, ScrollType):
        degrees = degrees.degrees
    degrees = tuple(int(a) for a in degrees)
    donor, recipient = _resolve_degeneration_indices(degrees, donor, recipient)
    if field is None:
        raise ValueError("field is required to build embedding factors")
    one = field.one
    aux = list(degrees)
    aux[donor] -= 1
    aux.append(1)
    aux = tuple(aux)
    d = len(degrees)

    unit = BinaryForm(0, (one,))
    t0 = BinaryForm.monomial(1, 0, one)

    slots1 = []
    for i in range(d):
        slots1.append((i, t0 if i == donor else unit))
    slots1.append((donor, BinaryForm.monomial(degrees[donor] - 1, degrees[donor] - 1, one)))
    phi1 = ScrollEmbedding(degrees, aux, tuple(slots1))

    degenerate = list(degrees)
    degenerate[donor] -= 1
    degenerate[recipient] += 1
    slots2 = []
    for i in range(d):
        slots2.append((i, t0 if i == recipient else unit))
    slots2.append((recipient, BinaryForm.monomial(degrees[recipient], degrees[recipient], one)))
    phi2 = ScrollEmbedding(tuple(degenerate), aux, tuple(slots2))
    return phi1, phi2


def compose_section_with_embedding(section: ScrollSection, emb: ScrollEmbedding):
    """Pull a section on the auxiliary scroll back along the embedding.

    The result is linear in the source fiber coordinates, returned as one
    base form per source block (the coefficient of x_i).
    """
    if section.degrees != emb.aux_degrees:
        raise ValueError("section does not live on the embedding target")
    d = len(emb.source_degrees)
    out = [
        BinaryForm.zero(emb.source_degrees[i] + section.m, section.field)
        for i in range(d)
    ]
    for comp, (src, factor) in zip(section.comps, emb.slots):
        if comp.is_zero():
            continue
        out[src] = out[src] + comp * factor
    return out


def verify_degeneration_embeddings(degrees, donor=None, recipient=None, field=None) -> bool:
    """Check both scroll embeddings land inside their family members.

    The original scroll must satisfy the lam-free relation of its image
    and the degenerate scroll must satisfy the lam=0 member identically.
    """
    if field is None:
        raise ValueError("field is required")
    if isinstance(degrees, ScrollType):
        degrees = degrees.degrees
    degrees = tuple(int(a) for a in degrees)
    donor, recipient = _resolve_degeneration_indices(degrees, donor, recipient)
    phi1, phi2 = degeneration_embeddings(degrees, donor, recipient, field)

    aux = phi1.aux_degrees
    one = field.one
    # lam-free relation t0*y_new - t1^(a_donor-1)*y_donor for the first image
    comps1 = [BinaryForm.zero(a, field) for a in aux]
    comps1[donor] = BinaryForm.monomial(degrees[donor] - 1, degrees[donor] - 1, -one)
    comps1[-1] = BinaryForm.monomial(1, 0, one)
    relation1 = ScrollSection(aux, 0, comps1, field)
    pulled1 = compose_section_with_embedding(relation1, phi1)
    if not all(f.is_zero() for f in pulled1):
        return False

    member0 = degeneration_member(degrees, field.zero, donor, recipient, field)
    pulled2 = compose_section_with_embedding(member0, phi2)
    return all(f.is_zero() for f in pulled2)


def degeneration_equivalence_check(degrees, lam, donor=None, recipient=None, field=None) -> bool:
    """Exact equivalence of the lam-member with the lam=1 member.

    Rescaling the donor fiber coordinate by lam carries the lam=1 section
    to the lam-section; checked as equality of component forms.
    """
    if field is None:
        field = field_of(lam)
    lam = field(lam)
    if not lam:
        raise ValueError("lam must be nonzero; the lam=0 member is the degenerate scroll")
    if isinstance(degrees, ScrollType):
        degrees = degrees.degrees
    degrees = tuple(int(a) for a in degrees)
    donor, recipient = _resolve_degeneration_indices(degrees, donor, recipient)
    member_one = degeneration_member(degrees, field.one, donor, recipient, field)
    member_lam = degeneration_member(degrees, lam, donor, recipient, field)
    rescaled = list(member_one.comps)
    rescaled[donor] = rescaled[donor].scale(lam)
    substituted = ScrollSection(member_one.degrees, 0, rescaled, field)
    return substituted == member_lam
