"""Exact truncated power series in t and the closed-form generating functions.

Only the length variable t stays symbolic.  The marker variables x, q, u, z, w
are specialized to exact rationals before any series arithmetic happens, so
every identity in this package is checked by exact coefficient comparison.
No floating point anywhere.

Marker conventions, used consistently by every function here:
    x -> rep,  q -> max,  u -> asc,  z -> zero,  w -> ealm (or an ealm-like
    pairing marker when a table tracks mpair or zpair instead).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from .decomp import classify
from .errors import DomainError, ResourceLimitError, UsageError
from .seqcore import ClassId, enumerate_class
from .stats import ealm, scalar_stats

DEFAULT_ORDER = 9
MAX_ORDER = 12


def _as_fraction(value) -> Fraction:
    # strings like "2/3" come straight from CLI flags
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"cannot parse {value!r} as an exact rational")
    raise UsageError(f"expected an exact rational, got {type(value).__name__}")


def _check_order(order) -> int:
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise UsageError(f"series order must be a positive integer, got {order!r}")
    if order > MAX_ORDER:
        raise ResourceLimitError(
            f"series order {order} exceeds the cap of {MAX_ORDER}")
    return order


class TruncSeries:
    """A power series in t truncated at a fixed order, with Fraction coefficients.

    Instances are immutable.  Arithmetic is exact and closed at the common
    order; mixing two different orders is refused rather than silently
    truncating.  Division requires the divisor to have a nonzero constant
    term, otherwise a DomainError is raised.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs=(), order=None):
        vals = [_as_fraction(c) for c in coeffs]
        if order is None:
            order = len(vals) - 1
        _check_order(order)
        del vals[order + 1:]
        vals.extend([Fraction(0)] * (order + 1 - len(vals)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls((1,), order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries":
        return cls((c,), order)

    @classmethod
    def monomial(cls, c, power: int, order: int) -> "TruncSeries":
        if power < 0:
            raise UsageError("monomial power must be nonnegative")
        return cls([0] * power + [c], order)

    def _match(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise UsageError(
                f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._match(other)
        return TruncSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._match(other)
        return TruncSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs], self.order)

    def scale(self, c) -> "TruncSeries":
        c = _as_fraction(c)
        return TruncSeries([a * c for a in self.coeffs], self.order)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        self._match(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncSeries(out, self.order)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise UsageError("series exponent must be a nonnegative integer")
        result = TruncSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse, defined only for a unit constant term."""
        lead = self.coeffs[0]
        if lead == 0:
            raise DomainError(
                "cannot invert a series whose constant term is zero")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = Fraction(1) / lead
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    acc += self.coeffs[j] * out[k - j]
            out[k] = -acc / lead
        return TruncSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        c = _as_fraction(other)
        if c == 0:
            raise DomainError("division of a series by zero")
        return self.scale(Fraction(1) / c)

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise UsageError(f"coefficient index {k} outside 0..{self.order}")
        return self.coeffs[k]

    def vanishes_below(self, k: int) -> bool:
        """True when every coefficient of t^0..t^(k-1) is zero."""
        return not any(self.coeffs[: min(k, self.order + 1)])

    def as_integers(self) -> list:
        """Coefficients as ints; refuses if any coefficient is fractional."""
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise UsageError(f"coefficient of t^{i} is not an integer: {c}")
            out.append(c.numerator)
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncSeries(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"


@dataclass(frozen=True)
class SpecPoint:
    """An exact rational value for each marker variable."""

    x: Fraction = Fraction(1)
    q: Fraction = Fraction(1)
    u: Fraction = Fraction(1)
    z: Fraction = Fraction(1)
    w: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("x", "q", "u", "z", "w"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name)))

    def as_dict(self) -> dict:
        return {"x": str(self.x), "q": str(self.q), "u": str(self.u),
                "z": str(self.z), "w": str(self.w)}


def admissible_for_length_series(point: SpecPoint) -> bool:
    """Whether the closed-form length series can be evaluated at the point.

    Every denominator in the sum has constant term x + u - x*u (the three
    written forms x+u-xu, x(1-u)+u and x+u(1-x) are the same polynomial),
    so this single condition covers all of them.
    """
    return point.x + point.u - point.x * point.u != 0


def admissible_for_case_identity(point: SpecPoint) -> bool:
    # the identities carry 1/(1-w) and 1/q prefactors
    return point.w != 1 and point.q != 0


def random_point(rng, constraint=None) -> SpecPoint:
    """Draw a small-height positive rational for each marker variable.

    Numerators and denominators are uniform in 1..10; the draw is repeated
    until the optional constraint predicate accepts the point.  Draw order
    is x, q, u, z, w, so a fixed seed reproduces the same point.
    """
    while True:
        vals = [Fraction(rng.randint(1, 10), rng.randint(1, 10))
                for _ in range(5)]
        point = SpecPoint(*vals)
        if constraint is None or constraint(point):
            return point


def fishburn_series(order: int = DEFAULT_ORDER) -> TruncSeries:
    """Series whose t^n coefficient is the common size of all five classes.

    Computes sum over m >= 1 of prod_{i=1..m} (1 - (1-t)^i).  The m-th
    summand has no terms below t^m, so the sum stops at m = order.
    """
    order = _check_order(order)
    one = TruncSeries.one(order)
    t = TruncSeries.monomial(1, 1, order)
    shrink = one - t
    shrink_pow = shrink          # (1-t)^m
    partial = one                # running product over i <= m
    total = TruncSeries.zero(order)
    for m in range(1, order + 1):
        partial = partial * (one - shrink_pow)
        assert partial.vanishes_below(m), "summand order bound violated"
        total = total + partial
        shrink_pow = shrink_pow * shrink
    return total


def series_G(order: int = DEFAULT_ORDER, point: SpecPoint | None = None) -> TruncSeries:
    """Length series of ascent sequences with all four scalar markers.

    The t^n coefficient equals the sum over ascent sequences of length n of
    x^rep q^max u^asc z^zero, evaluated at the point (w is ignored).
    Implements the closed form

        sum_{m>=0} zqr x^m a_m (x+u-xu)
                   / ([x(1-u) + u a_m] [x + u(1-x) a_m])
                   * prod_{i<m} [1 + (zr-1) a_i] / [x + u(1-x) a_i]

    with r = t (x+u-xu) and a_m = (1-qr)(1-r)^m.  The m-th summand has no
    terms below t^(m+1), so the sum stops at m = order - 1.
    """
    order = _check_order(order)
    if point is None:
        point = SpecPoint()
    x, q, u, z = point.x, point.q, point.u, point.z
    mix = x + u - x * u
    if mix == 0:
        raise DomainError(
            "inadmissible point: x + u - x*u = 0, which is the constant "
            "term of every denominator in the sum")
    one = TruncSeries.one(order)
    r = TruncSeries.monomial(mix, 1, order)
    shrink = one - r
    zr_less_one = r.scale(z) - one
    lead = r.scale(z * q * mix)      # zq r (x+u-xu)
    a = one - r.scale(q)             # a_0
    running = one                    # product over i < m
    xpow = Fraction(1)
    total = TruncSeries.zero(order)
    for m in range(order):
        den_left = TruncSeries.constant(x * (1 - u), order) + a.scale(u)
        den_right = TruncSeries.constant(x, order) + a.scale(u * (1 - x))
        term = lead.scale(xpow) * a * running / (den_left * den_right)
        assert term.vanishes_below(m + 1), "summand order bound violated"
        total = total + term
        running = running * (one + zr_less_one * a) / den_right
        a = a * shrink
        xpow *= x
    return total


def series_zeromax(order: int = DEFAULT_ORDER, q=1, z=1) -> TruncSeries:
    """Joint length series of (zero, max) on ascent sequences.

    Computes sum over m >= 0 of qzt prod_{i<m} [1 - (1-zt)(1-qt)(1-t)^i].
    The formula is literally symmetric in q and z.
    """
    order = _check_order(order)
    q, z = _as_fraction(q), _as_fraction(z)
    one = TruncSeries.one(order)
    t = TruncSeries.monomial(1, 1, order)
    drop = (one - t.scale(z)) * (one - t.scale(q))   # (1-zt)(1-qt)
    shrink = one - t
    shrink_pow = one                                 # (1-t)^m
    lead = t.scale(q * z)
    running = one
    total = TruncSeries.zero(order)
    for m in range(order):
        term = lead * running
        assert term.vanishes_below(m + 1), "summand order bound violated"
        total = total + term
        running = running * (one - drop * shrink_pow)
        shrink_pow = shrink_pow * shrink
    return total


ASCZERO_VARIANTS = ("primitive", "alternative")


def series_asczero(order: int = DEFAULT_ORDER, u=1, z=1,
                   variant: str = "primitive") -> TruncSeries:
    """Joint length series of (asc, zero) on ascent sequences, two ways.

    variant "primitive":
        sum_{m>=0} u^m prod_{i=0..m} [1-(1-zt)(1-t)^i] / [u+(1-u)(1-zt)(1-t)^i]
    variant "alternative":
        sum_{m>=0} zt(1-t)^(m+1) / [1-u+u(1-t)^(m+1)]
                   * prod_{i<m} [1-(1-zt)(1-t)^(i+1)]

    Both denominators have constant term 1 regardless of u and z, so every
    point is admissible.  Each m-th summand starts at t^(m+1).
    """
    order = _check_order(order)
    u, z = _as_fraction(u), _as_fraction(z)
    one = TruncSeries.one(order)
    t = TruncSeries.monomial(1, 1, order)
    shrink = one - t
    fading = one - t.scale(z)        # (1-zt)
    total = TruncSeries.zero(order)
    if variant == "primitive":
        shrink_pow = one             # (1-t)^i
        running = one                # product over i <= m
        upow = Fraction(1)
        for m in range(order):
            piece = fading * shrink_pow
            running = (running * (one - piece)
                       / (TruncSeries.constant(u, order) + piece.scale(1 - u)))
            term = running.scale(upow)
            assert term.vanishes_below(m + 1), "summand order bound violated"
            total = total + term
            upow *= u
            shrink_pow = shrink_pow * shrink
        return total
    if variant == "alternative":
        shrink_pow = shrink          # (1-t)^(m+1)
        running = one                # product over i < m
        lead = t.scale(z)
        for m in range(order):
            den = TruncSeries.constant(1 - u, order) + shrink_pow.scale(u)
            term = lead * shrink_pow * running / den
            assert term.vanishes_below(m + 1), "summand order bound violated"
            total = total + term
            running = running * (one - fading * shrink_pow)
            shrink_pow = shrink_pow * shrink
        return total
    raise UsageError(
        f"unknown variant {variant!r}; expected one of: {', '.join(ASCZERO_VARIANTS)}")


# Which marker variable tracks which statistic when evaluating a table.
MARKER_VARS = {
    "rep": "x",
    "max": "q",
    "asc": "u",
    "zero": "z",
    "ealm": "w",
    "mpair": "w",
    "zpair": "w",
}


@dataclass(frozen=True)
class DistTable:
    """Joint distribution of some statistics over one class at one length.

    counts maps a tuple of statistic values (aligned with stats) to the
    number of class members realizing it.  The total over all tuples equals
    the class cardinality at length n.
    """

    class_id: ClassId
    n: int
    stats: tuple
    counts: dict

    def total(self) -> int:
        return sum(self.counts.values())


def _eval_table(table: DistTable, point: SpecPoint) -> Fraction:
    values = []
    for name in table.stats:
        var = MARKER_VARS.get(name)
        if var is None:
            raise UsageError(
                f"statistic {name!r} has no marker variable; "
                f"usable: {', '.join(sorted(MARKER_VARS))}")
        values.append(getattr(point, var))
    total = Fraction(0)
    for key, count in table.counts.items():
        prod = Fraction(count)
        for base, exponent in zip(values, key):
            prod *= base ** exponent
        total += prod
    return total


def eval_gf(table, point: SpecPoint):
    """Evaluate a distribution table (or several) at a rational point.

    A single DistTable yields one Fraction.  An iterable of tables yields a
    list indexed by length n, with a zero entry for any length not covered.
    """
    if isinstance(table, DistTable):
        return _eval_table(table, point)
    tables = list(table)
    top = max((tbl.n for tbl in tables), default=0)
    out = [Fraction(0)] * (top + 1)
    for tbl in tables:
        out[tbl.n] += _eval_table(tbl, point)
    return out


@lru_cache(maxsize=4)
def _case_profiles(order: int):
    """Five-marker profiles of all non-identity-run ascent sequences.

    Returns (whole, parts): Counters keyed by (n, rep, max, ealm, asc, zero),
    whole covering every sequence with length > max, parts splitting the same
    population by suffix case S1..S4.
    """
    whole = Counter()
    parts = {label: Counter() for label in ("S1", "S2", "S3", "S4")}
    for n in range(1, order + 1):
        for s in enumerate_class(ClassId.ASC, n):
            st = scalar_stats(s)
            if st.max == n:
                continue
            key = (n, st.rep, st.max, ealm(s), st.asc, st.zero)
            whole[key] += 1
            parts[classify(s, "ASC_S")][key] += 1
    return whole, parts


def _profile_series(profile, order: int, point: SpecPoint) -> TruncSeries:
    pows = {}
    for var in ("x", "q", "w", "u", "z"):
        base = getattr(point, var)
        table = [Fraction(1)] * (order + 1)
        for k in range(1, order + 1):
            table[k] = table[k - 1] * base
        pows[var] = table
    coeffs = [Fraction(0)] * (order + 1)
    for (n, rep, mx, el, asc, zero), count in profile.items():
        coeffs[n] += (count * pows["x"][rep] * pows["q"][mx] * pows["w"][el]
                      * pows["u"][asc] * pows["z"][zero])
    return TruncSeries(coeffs, order)


@dataclass(frozen=True)
class IdentityReport:
    case: int
    order: int
    point: SpecPoint
    ok: bool
    lhs: TruncSeries
    rhs: TruncSeries

    def __bool__(self) -> bool:
        return self.ok


def check_case_identity(case: int, order: int = DEFAULT_ORDER,
                        point: SpecPoint | None = None) -> IdentityReport:
    """Compare one suffix-case identity against brute enumeration.

    The left side is the five-marker series of the case subset, summed from
    the actual sequences.  The right side is the closed form, whose inner
    series values are themselves taken from the enumerated population at
    modified points.  Requires w != 1 and q != 0.
    """
    order = _check_order(order)
    if case not in (1, 2, 3, 4):
        raise UsageError(f"case must be 1..4, got {case!r}")
    if point is None:
        raise UsageError("a point with all five marker values is required")
    if point.w == 1:
        raise DomainError(
            "inadmissible point: w = 1 (the identities carry 1/(1-w))")
    if point.q == 0:
        raise DomainError(
            "inadmissible point: q = 0 (case 4 carries a 1/q factor)")
    x, q, u, z, w = point.x, point.q, point.u, point.z, point.w
    whole, parts = _case_profiles(order)
    lhs = _profile_series(parts[f"S{case}"], order, point)

    def inner(**changes) -> TruncSeries:
        return _profile_series(whole, order, replace(point, **changes))

    one = TruncSeries.one(order)
    t = TruncSeries.monomial(1, 1, order)
    if case == 1:
        numer = TruncSeries.constant(z, order) + t.scale(q * u * w * (1 - z))
        rhs = ((t * t).scale(q * x * z) * numer
               / ((one - t.scale(q * u)) * (one - t.scale(q * u * w))))
    elif case == 2:
        rhs = (t * (inner() - inner(q=q * w, w=Fraction(1))).scale(x / (1 - w))
               + t * inner(w=Fraction(0)).scale(x * (z - 1)))
    elif case == 3:
        rhs = (t * (inner(w=Fraction(1)).scale((w + z - w * z) / (1 - w))
                    - inner().scale(Fraction(1) / (1 - w))
                    - inner(w=Fraction(0)).scale(z - 1)).scale(u * x))
    else:
        head = one - t.scale(q * u)
        tail = TruncSeries.constant(Fraction(1) / q, order) - t.scale(u)
        rhs = (head * (inner(w=Fraction(1)).scale((w + z - w * z) / (q * (1 - w)))
                       - inner().scale(Fraction(1) / (q * (1 - w))))
               - tail * inner(w=Fraction(0)).scale(z - 1))
    return IdentityReport(case, order, point, lhs == rhs, lhs, rhs)
