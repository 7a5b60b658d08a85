"""Exact univariate integer polynomials and real-root analysis.

Coefficients are Python ints (index k is the coefficient of x^k) and all
root counting goes through Sturm chains evaluated in exact rationals, so
every verdict about real roots is a decision, not an approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = tuple(int(a) for a in self.coeffs)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", c[:end])

    @classmethod
    def of(cls, *coeffs: int) -> IntPolynomial:
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(size)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-a for a in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(a * other for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        result = IntPolynomial.of(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, v: Number) -> Fraction:
        return eval_at(self, v)

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(k * a for k, a in enumerate(self.coeffs))[1:])

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> IntPolynomial:
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(tuple(a // g for a in self.coeffs))

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> IntPolynomial:
        return cls(tuple(int(a) for a in data))


def render(p: IntPolynomial) -> str:
    """Human form ``1 + 5*x + 7*x^2``; zero terms omitted."""
    terms = []
    for k, a in enumerate(p.coeffs):
        if a == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        mag = abs(a)
        body = str(mag) if not mono else f"{mag}*{mono}"
        if not terms:
            terms.append(body if a > 0 else f"-{body}")
        else:
            terms.append(("+ " if a > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def binomial_power(i: int) -> IntPolynomial:
    """(x + 1)^i."""
    if i < 0:
        raise ValueError("binomial_power needs i >= 0")
    return IntPolynomial(tuple(math.comb(i, k) for k in range(i + 1)))


X_PLUS_ONE = IntPolynomial.of(1, 1)


def eval_at(p: IntPolynomial, v: Number) -> Fraction:
    v = Fraction(v)
    acc = Fraction(0)
    for a in reversed(p.coeffs):
        acc = acc * v + a
    return acc


def divide_out_root(p: IntPolynomial, r: int) -> tuple[IntPolynomial, int]:
    """Strip every factor (x - r); return (quotient, multiplicity)."""
    if p.is_zero:
        raise ValueError("cannot divide the zero polynomial")
    mult = 0
    q = p
    while q.degree >= 1:
        # synthetic division from the top
        c = q.coeffs
        out = [0] * (len(c) - 1)
        carry = 0
        for k in range(len(c) - 1, 0, -1):
            carry = c[k] + carry * r
            out[k - 1] = carry
        if c[0] + carry * r != 0:
            break
        q = IntPolynomial(tuple(out))
        mult += 1
    return q, mult


# --- rational-coefficient helpers (internal) ------------------------------

def _frac_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, y in enumerate(b):
            a[i + shift] -= f * y
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _to_primitive(c: Sequence[Fraction]) -> IntPolynomial:
    """Scale a rational polynomial by a positive constant to a primitive int one.

    Keeps the sign of the leading coefficient, which Sturm chains need.
    """
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    if not c:
        return IntPolynomial()
    den = 1
    for a in c:
        den = den * a.denominator // math.gcd(den, a.denominator)
    ints = [int(a * den) for a in c]
    g = math.gcd(*ints)
    return IntPolynomial(tuple(x // g for x in ints))


def _fr(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(a) for a in p.coeffs]


def poly_rem(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Remainder of p by q, scaled to a primitive integer polynomial (sign kept)."""
    if q.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    _, r = _frac_divmod(_fr(p), _fr(q))
    return _to_primitive(r)


def poly_exact_div(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """p / q when q divides p over the rationals, scaled to primitive."""
    quo, r = _frac_divmod(_fr(p), _fr(q))
    if any(r):
        raise ValueError("division is not exact")
    return _to_primitive(quo)


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    a, b = p.primitive(), q.primitive()
    while not b.is_zero:
        a, b = b, poly_rem(a, b).primitive()
    return a.primitive()


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree part")
    if p.degree < 1:
        return IntPolynomial.of(1)
    g = poly_gcd(p, p.derivative())
    return poly_exact_div(p, g)


@lru_cache(maxsize=4096)
def sturm_chain(p: IntPolynomial) -> tuple[IntPolynomial, ...]:
    """Sturm chain of the squarefree part of p, each term primitive.

    Terms are rescaled by positive constants only, which leaves every sign
    pattern (and thus every variation count) unchanged.
    """
    s = squarefree_part(p)
    if s.leading < 0:
        s = -s
    chain = [s]
    if s.degree < 1:
        return tuple(chain)
    chain.append(s.derivative().primitive())
    while chain[-1].degree > 0:
        r = poly_rem(chain[-2], chain[-1])
        if r.is_zero:
            break
        chain.append(-r)
    return tuple(chain)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_at(p: IntPolynomial, v) -> int:
    if v == math.inf:
        return _sign(p.leading)
    if v == -math.inf:
        return _sign(p.leading) * (-1 if p.degree % 2 else 1)
    # sign of p(a/b), b > 0, equals the sign of sum c_k a^k b^(d-k)
    a, b = v.numerator, v.denominator
    coeffs = p.coeffs
    if not coeffs:
        return 0
    acc = coeffs[-1]
    scale = 1
    for c in reversed(coeffs[:-1]):
        scale *= b
        acc = acc * a + c * scale
    return _sign(acc)


def _variations(chain: Sequence[IntPolynomial], v) -> int:
    signs = [s for s in (_sign_at(q, v) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_with_chain(chain, lo, hi) -> int:
    return _variations(chain, lo) - _variations(chain, hi)


def _as_bound(v):
    if v is None:
        return None
    if isinstance(v, float):
        if math.isinf(v):
            return v
        return Fraction(v)
    return Fraction(v)


def sturm_root_count(p: IntPolynomial, lo=-math.inf, hi=math.inf) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    ``lo``/``hi`` may be ints, Fractions or +-math.inf.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has infinitely many roots")
    lo, hi = _as_bound(lo), _as_bound(hi)
    if not lo < hi:
        raise ValueError(f"need lo < hi, got ({lo}, {hi}]")
    return _count_with_chain(sturm_chain(p), lo, hi)


def real_root_count_with_multiplicity(p: IntPolynomial) -> int:
    # a root of multiplicity k survives in the first k terms of p, gcd(p,p'), ...
    if p.is_zero:
        raise ValueError("zero polynomial")
    total = 0
    g = p
    while g.degree >= 1:
        total += sturm_root_count(g)
        g = poly_gcd(g, g.derivative())
    return total


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lead = abs(p.leading)
    return 1 + Fraction(max(abs(a) for a in p.coeffs[:-1]), lead) if p.degree >= 1 else Fraction(1)


def isolating_intervals(p: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint half-open intervals (lo, hi], one per distinct real root, ascending."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    b = root_bound(p)
    out = []
    stack = [(-b, b, _count_with_chain(chain, -b, b))]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = _count_with_chain(chain, lo, mid)
        stack.append((mid, hi, k - left))
        stack.append((lo, mid, left))
    out.sort()
    return out


@dataclass(frozen=True)
class RootAnalysis:
    degree: int
    real_root_count_with_multiplicity: int
    distinct_real_roots: int
    is_real_rooted: bool
    multiplicity_at_minus_one: int
    has_root_in_unit_negative_interval: bool
    isolating_intervals: tuple[tuple[Fraction, Fraction], ...]

    def to_json(self) -> dict:
        return {
            "degree": str(self.degree),
            "real_root_count_with_multiplicity": str(self.real_root_count_with_multiplicity),
            "distinct_real_roots": str(self.distinct_real_roots),
            "is_real_rooted": self.is_real_rooted,
            "multiplicity_at_minus_one": str(self.multiplicity_at_minus_one),
            "has_root_in_unit_negative_interval": self.has_root_in_unit_negative_interval,
            "isolating_intervals": [[str(lo), str(hi)] for lo, hi in self.isolating_intervals],
        }


def has_root_in_unit_negative_interval(p: IntPolynomial) -> bool:
    """Root in [-1, 0): -1 checked by evaluation, the rest via (-1, 0] minus a root at 0."""
    if eval_at(p, -1) == 0:
        return True
    if p.degree < 1:
        return False
    at_zero = 1 if p[0] == 0 else 0
    return sturm_root_count(p, -1, 0) - at_zero > 0


def analyze_roots(p: IntPolynomial) -> RootAnalysis:
    if p.is_zero:
        raise ValueError("zero polynomial")
    count = real_root_count_with_multiplicity(p)
    intervals = tuple(isolating_intervals(p))
    _, mult = divide_out_root(p, -1)
    return RootAnalysis(
        degree=p.degree,
        real_root_count_with_multiplicity=count,
        distinct_real_roots=len(intervals),
        is_real_rooted=count == p.degree,
        multiplicity_at_minus_one=mult,
        has_root_in_unit_negative_interval=has_root_in_unit_negative_interval(p),
        isolating_intervals=intervals,
    )


def from_roots(roots: Iterable[int | Fraction], lead: int = 1) -> IntPolynomial:
    """Integer polynomial lead' * prod (x - r); denominators are cleared."""
    p = IntPolynomial.of(lead)
    for r in roots:
        r = Fraction(r)
        p = p * IntPolynomial.of(-r.numerator, r.denominator)
    return p
