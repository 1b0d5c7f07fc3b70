"""Exact arithmetic for event times.

Every time value the engine produces is either a rational number or an
element (p + q*sqrt(d))/r of a real quadratic field, held in a canonical
integer form. Equality is a structural comparison of canonical forms.
Ordering is decided symbolically when the values can be equal and by
arbitrary-precision interval refinement otherwise, so comparisons never
touch floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

RationalLike = Union[int, str, Fraction]

# Trial division bound used when splitting square factors out of a radicand.
SQUAREFREE_TRIAL_BOUND = 10_000

_INTERVAL_START_BITS = 64
_INTERVAL_BIT_CEILING = 1 << 20


def rational_str(value: RationalLike) -> str:
    """Canonical "num/den" form with positive denominator, e.g. "-3/4", "7/1"."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse a "num/den" string (plain integers and decimals also accepted)."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational literal {text!r}") from exc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@lru_cache(maxsize=8)
def _primes_up_to(bound: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def square_reduce(n: int, trial_bound: int = SQUAREFREE_TRIAL_BOUND) -> tuple[int, int]:
    """Write n > 0 as m*m*d, pulling every found square factor into m.

    Trial division covers primes up to trial_bound, then the remaining
    cofactor is tested for being a perfect square. The result is certified
    squarefree when the cofactor ends up 1, prime, or a product of at most
    two distinct primes above the bound. A square factor built entirely
    from primes above the bound stays inside d; the reduction is still a
    deterministic function of n, so equal inputs always map to equal
    (m, d) pairs, which is what canonical forms need.
    """
    if n <= 0:
        raise ValueError("square_reduce needs a positive integer")
    m, d, rest = 1, 1, n
    for p in _primes_up_to(trial_bound):
        if p * p > rest:
            break
        if rest % p == 0:
            exp = 0
            while rest % p == 0:
                rest //= p
                exp += 1
            if exp >= 2:
                m *= p ** (exp // 2)
            if exp % 2:
                d *= p
    if rest > 1:
        root = math.isqrt(rest)
        if root * root == rest:
            m *= root
        else:
            d *= rest
    return m, d


@dataclass(frozen=True)
class AlgebraicTime:
    """A real number (p + q*sqrt(d))/r with integer entries.

    Rational values are stored with q == 0 and d == 0. Canonical form:
    r > 0, the stored integers share no common factor, square factors
    found in d are folded into q, and a zero q forces d == 0. Values
    built through `make`, `from_rational`, or `solve_quadratic` compare
    equal exactly when they are the same real number, because the
    reduction path is a function of the value itself.
    """

    p: int
    q: int
    d: int
    r: int

    def __post_init__(self):
        if self.r <= 0:
            raise ValueError("denominator r must be positive")
        if (self.q == 0) != (self.d == 0):
            raise ValueError("q and d must be zero together")
        if self.q != 0:
            if self.d < 2:
                raise ValueError("radicand must be at least 2")
            root = math.isqrt(self.d)
            if root * root == self.d:
                raise ValueError("radicand must not be a perfect square")
            if math.gcd(math.gcd(abs(self.p), abs(self.q)), self.r) != 1:
                raise ValueError("p, q, r must be coprime")
        elif math.gcd(abs(self.p), self.r) != 1:
            raise ValueError("p and r must be coprime")

    @classmethod
    def from_rational(cls, value: RationalLike) -> "AlgebraicTime":
        f = Fraction(value)
        return cls(f.numerator, 0, 0, f.denominator)

    @classmethod
    def make(
        cls,
        p: int,
        q: int,
        d: int,
        r: int,
        trial_bound: int = SQUAREFREE_TRIAL_BOUND,
    ) -> "AlgebraicTime":
        """Canonicalize (p + q*sqrt(d))/r; collapses to a rational when possible."""
        if r == 0:
            raise ValueError("denominator r must be nonzero")
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        if q == 0 or d == 0:
            return cls.from_rational(Fraction(p, r))
        m, dd = square_reduce(d, trial_bound)
        q = q * m
        if dd == 1:
            return cls.from_rational(Fraction(p + q, r))
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(abs(p), abs(q)), r)
        return cls(p // g, q // g, dd, r // g)

    @property
    def kind(self) -> str:
        return "rational" if self.q == 0 else "quadratic"

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.p, self.r)

    def _bounds(self, bits: int) -> tuple[int, int]:
        """Integer lo, hi with lo <= value * 2**bits <= hi."""
        scale = 1 << bits
        if self.q == 0:
            num = self.p * scale
            return num // self.r, -((-num) // self.r)
        root = math.isqrt(self.d << (2 * bits))
        if self.q > 0:
            lo = self.p * scale + self.q * root
            hi = self.p * scale + self.q * (root + 1)
        else:
            lo = self.p * scale + self.q * (root + 1)
            hi = self.p * scale + self.q * root
        return lo // self.r, -((-hi) // self.r)

    def approx(self) -> float:
        """Float approximation; a display hint, never used for decisions."""
        lo, hi = self._bounds(64)
        return float(Fraction(lo + hi, 1 << 65))

    def __float__(self) -> float:
        return self.approx()

    def compare(self, other: "AlgebraicTime") -> int:
        return compare_times(self, other)

    def __lt__(self, other):
        return compare_times(self, other) < 0

    def __le__(self, other):
        return compare_times(self, other) <= 0

    def __gt__(self, other):
        return compare_times(self, other) > 0

    def __ge__(self, other):
        return compare_times(self, other) >= 0

    def __str__(self) -> str:
        if self.q == 0:
            return rational_str(Fraction(self.p, self.r))
        return f"({self.p}{self.q:+d}*sqrt({self.d}))/{self.r}"

    def to_json(self) -> dict:
        if self.q == 0:
            return {"kind": "rational", "value": rational_str(Fraction(self.p, self.r))}
        return {
            "kind": "quadratic",
            "p": str(self.p),
            "q": str(self.q),
            "d": self.d,
            "r": str(self.r),
            "approx": self.approx(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AlgebraicTime":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ValueError("time value must be an object with a 'kind' field")
        if obj["kind"] == "rational":
            return cls.from_rational(parse_rational(obj["value"]))
        if obj["kind"] == "quadratic":
            try:
                return cls.make(int(obj["p"]), int(obj["q"]), int(obj["d"]), int(obj["r"]))
            except (KeyError, TypeError) as exc:
                raise ValueError(f"malformed quadratic time: {obj!r}") from exc
        raise ValueError(f"unknown time kind {obj['kind']!r}")


def _equal_symbolically(x: AlgebraicTime, y: AlgebraicTime) -> bool:
    """Exact equality test by isolating and squaring the radical parts.

    Sound for any radicands the canonical form admits: stored d values are
    never perfect squares, so a nonzero rational-plus-radical combination
    can only equal a pure radical when the rational offset vanishes.
    """
    a = Fraction(x.p, x.r) - Fraction(y.p, y.r)
    b = Fraction(x.q, x.r)
    c = Fraction(y.q, y.r)
    if b == 0 and c == 0:
        return a == 0
    if b == 0:
        # a == c*sqrt(d_y)
        return _sign(a) == _sign(c) and a * a == c * c * y.d
    if c == 0:
        # a + b*sqrt(d_x) == 0
        return _sign(a) == -_sign(b) and a * a == b * b * x.d
    if x.d == y.d:
        return a == 0 and b == c
    if a != 0:
        # squaring a + b*sqrt(d_x) would leave an irrational cross term
        return False
    return _sign(b) == _sign(c) and b * b * x.d == c * c * y.d


def compare_times(x: AlgebraicTime, y: AlgebraicTime) -> int:
    """Total order on exact times: -1, 0, or 1 as x <, ==, > y.

    Equality is settled symbolically; strict order falls back to interval
    refinement that starts at 64 fractional bits and doubles each round,
    which terminates because unequal reals eventually separate.
    """
    if x.q == 0 and y.q == 0:
        return _sign(Fraction(x.p, x.r) - Fraction(y.p, y.r))
    if x == y or _equal_symbolically(x, y):
        return 0
    bits = _INTERVAL_START_BITS
    while bits <= _INTERVAL_BIT_CEILING:
        xlo, xhi = x._bounds(bits)
        ylo, yhi = y._bounds(bits)
        if xhi < ylo:
            return -1
        if yhi < xlo:
            return 1
        bits *= 2
    raise RuntimeError(f"interval refinement failed to separate {x} and {y}")


def _radical_sign(a: Fraction, b: Fraction, d: int) -> int:
    """Exact sign of a + b*sqrt(d) for a nonsquare d >= 2 (or b == 0)."""
    if b == 0:
        return _sign(a)
    sa, sb = _sign(a), _sign(b)
    if sa == 0 or sa == sb:
        return sb if sa == 0 else sa
    lhs = a * a
    rhs = b * b * d
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


@dataclass(frozen=True)
class QuadValue:
    """Exact value a + b*sqrt(d); rational values carry b == 0 and d == 0.

    Arithmetic stays inside one quadratic field: operands must share the
    radicand or be rational. Zero tests and signs are exact because the
    stored radicand is never a perfect square.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        if self.b == 0:
            if self.d != 0:
                object.__setattr__(self, "d", 0)
        elif self.d < 2:
            raise ValueError("nonzero radical part needs a radicand of at least 2")

    @classmethod
    def rational(cls, value: RationalLike) -> "QuadValue":
        return cls(Fraction(value), Fraction(0), 0)

    @classmethod
    def of_time(cls, t: AlgebraicTime) -> "QuadValue":
        return cls(Fraction(t.p, t.r), Fraction(t.q, t.r), t.d)

    def _coerced(self, other):
        if isinstance(other, QuadValue):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadValue.rational(other)
        return None

    def _shared_radicand(self, other: "QuadValue") -> int:
        if self.d == 0:
            return other.d
        if other.d in (0, self.d):
            return self.d
        raise ValueError(f"mixed quadratic fields: sqrt({self.d}) vs sqrt({other.d})")

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return QuadValue(self.a + other.a, self.b + other.b, self._shared_radicand(other))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return QuadValue(self.a - other.a, self.b - other.b, self._shared_radicand(other))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return QuadValue(-self.a, -self.b, self.d)

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        d = self._shared_radicand(other)
        return QuadValue(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def sign(self) -> int:
        return _radical_sign(self.a, self.b, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is not rational")
        return self.a

    def approx(self) -> float:
        if self.b == 0:
            return float(self.a)
        root = Fraction(math.isqrt(self.d << 128), 1 << 64)
        return float(self.a + self.b * root)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*sqrt({self.d})"


@dataclass(frozen=True)
class QuadraticRootReport:
    """Real roots of c2*t^2 + c1*t + c0 plus degeneracy flags."""

    roots: tuple[AlgebraicTime, ...]
    identically_zero: bool
    double_root: bool


def solve_quadratic(
    c2: RationalLike,
    c1: RationalLike,
    c0: RationalLike,
    trial_bound: int = SQUAREFREE_TRIAL_BOUND,
) -> QuadraticRootReport:
    """Exact real roots of c2*t^2 + c1*t + c0, ascending, each reported once.

    Rational-versus-irrational status of the roots is decided exactly: the
    monic discriminant is a perfect square iff the roots are rational, and
    perfect squares are always detected. For irrational roots the radicand
    is derived from the monic discriminant alone, so proportional
    polynomials (and hence any polynomials sharing a root pair) produce
    identical canonical forms.
    """
    c2, c1, c0 = Fraction(c2), Fraction(c1), Fraction(c0)
    if c2 == 0:
        if c1 == 0:
            return QuadraticRootReport((), c0 == 0, False)
        return QuadraticRootReport((AlgebraicTime.from_rational(-c0 / c1),), False, False)
    beta = c1 / c2
    gamma = c0 / c2
    delta = beta * beta - 4 * gamma
    center = -beta / 2
    if delta < 0:
        return QuadraticRootReport((), False, False)
    if delta == 0:
        return QuadraticRootReport((AlgebraicTime.from_rational(center),), False, True)
    m, d = square_reduce(delta.numerator * delta.denominator, trial_bound)
    if d == 1:
        offset = Fraction(m, 2 * delta.denominator)
        return QuadraticRootReport(
            (
                AlgebraicTime.from_rational(center - offset),
                AlgebraicTime.from_rational(center + offset),
            ),
            False,
            False,
        )
    offset = Fraction(m, 2 * delta.denominator)
    return QuadraticRootReport(
        (_combine_parts(center, -offset, d), _combine_parts(center, offset, d)),
        False,
        False,
    )


def _combine_parts(a: Fraction, b: Fraction, d: int) -> AlgebraicTime:
    """Assemble canonical (p + q*sqrt(d))/r from a + b*sqrt(d); d pre-reduced."""
    r = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
    p = a.numerator * (r // a.denominator)
    q = b.numerator * (r // b.denominator)
    g = math.gcd(math.gcd(abs(p), abs(q)), r)
    return AlgebraicTime(p // g, q // g, d, r // g)


def evaluate_at_time(
    poly: Sequence[RationalLike], t: AlgebraicTime
) -> tuple[int, QuadValue]:
    """Exact (sign, value) of a polynomial at t.

    Coefficients run highest power first, matching solve_quadratic's
    (c2, c1, c0) argument order.
    """
    tv = QuadValue.of_time(t)
    acc = QuadValue.rational(0)
    for coeff in poly:
        acc = acc * tv + Fraction(coeff)
    return acc.sign(), acc
