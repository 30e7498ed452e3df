"""Numerical theory of codimension-3 Artinian Gorenstein graded algebras.

A Gorenstein Betti sequence in codimension 3 is determined by the multiset
H of generator degrees: the syzygy twists are theta - H and the last twist
is theta, where theta = 2*norm(H)/(|H| - 1).  Admissibility is the
Gaeta-Diesel test: |H| odd, theta integral, and theta > h_{i+1} + h_{2m+2-i}
for i = 1..m on the sorted degrees.

This module also computes the minimal complete-intersection type mci(beta)
contained in any ideal with the given Betti sequence, the index sets B, C,
Bbar driving that computation, Hilbert functions of graded free
resolutions, and the dual-pair cancellation step for non-minimal
Gorenstein resolutions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .exact import binomial
from .multiset import IntMultiset


@dataclass(frozen=True)
class GorensteinVerdict:
    admissible: bool
    theta: int | None = None
    reason: str | None = None


def gaeta_diesel_violation(h: Sequence[int], theta: int) -> tuple[int, int] | None:
    """First failing inequality theta > h_{i+1} + h_{2m+2-i}, or None.

    ``h`` must be sorted ascending with odd length 2m+1; a violation is
    reported as (i, pair_sum) with 1-based i.
    """
    m = (len(h) - 1) // 2
    for i in range(1, m + 1):
        pair = h[i] + h[2 * m + 1 - i]  # h_{i+1} + h_{2m+2-i}, 1-based
        if theta <= pair:
            return i, pair
    return None


def check_gorenstein_betti(gens: IntMultiset) -> GorensteinVerdict:
    """Gaeta-Diesel admissibility test for a generator-degree multiset."""
    n = gens.card()
    if n < 3 or n % 2 == 0:
        return GorensteinVerdict(False, None, f"|gens| = {n} must be odd and >= 3")
    if gens.min() < 1:
        return GorensteinVerdict(False, None, "generator degrees must be positive")
    total = 2 * gens.norm()
    if total % (n - 1):
        return GorensteinVerdict(False, None, f"2*norm/(card-1) = {total}/{n - 1} is not an integer")
    theta = total // (n - 1)
    h = gens.values()  # sorted ascending, h[0] = h_1
    hit = gaeta_diesel_violation(h, theta)
    if hit is not None:
        i, pair = hit
        m = (n - 1) // 2
        return GorensteinVerdict(
            False, theta, f"theta = {theta} <= h_{i + 1} + h_{2 * m + 2 - i} = {pair}"
        )
    return GorensteinVerdict(True, theta, None)


@dataclass(frozen=True)
class GorensteinBetti:
    """Betti data (gens, theta) of a codimension-3 Gorenstein quotient."""

    gens: IntMultiset
    theta: int

    def __post_init__(self) -> None:
        n = self.gens.card()
        if n < 3 or n % 2 == 0:
            raise ValueError(f"|gens| = {n} must be odd and >= 3")
        if 2 * self.gens.norm() != self.theta * (n - 1):
            raise ValueError(
                f"theta = {self.theta} inconsistent with gens (2*norm = {2 * self.gens.norm()}, card-1 = {n - 1})"
            )

    @classmethod
    def from_gens(cls, gens: IntMultiset) -> "GorensteinBetti":
        n = gens.card()
        if n < 3 or n % 2 == 0:
            raise ValueError(f"|gens| = {n} must be odd and >= 3")
        total = 2 * gens.norm()
        if total % (n - 1):
            raise ValueError(f"2*norm = {total} is not divisible by {n - 1}")
        return cls(gens, total // (n - 1))

    def syzygies(self) -> IntMultiset:
        return self.gens.affine(self.theta, -1)

    def modules(self) -> list[IntMultiset]:
        """Resolution twist multisets [gens, syzygies, {theta}]."""
        return [self.gens, self.syzygies(), IntMultiset.from_values([self.theta])]

    def is_admissible(self) -> bool:
        return check_gorenstein_betti(self.gens).admissible

    def to_json(self) -> dict:
        return {"gens": self.gens.to_list(), "theta": self.theta}


class MciTriple(NamedTuple):
    e1: int
    e2: int
    e3: int


def ci_index_sets(b: GorensteinBetti) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Index sets (B, C, Bbar) on the sorted degrees, 1-based.

    With degrees d_1 <= ... <= d_{2n+1} and socle-syzygy degree theta:

    * B    = {3 <= i <= n+1   | theta <= d_i + d_{2n+4-i}}
    * C    = {4 <= i <= n+2   | theta <= d_i + d_{2n+5-i}}
    * Bbar = {3 <= i <= 2n+1  | theta <= d_i + d_{2n+4-i}}
    """
    verdict = check_gorenstein_betti(b.gens)
    if not verdict.admissible:
        raise ValueError(f"inadmissible Gorenstein Betti sequence: {verdict.reason}")
    d = b.gens.values()
    theta = b.theta
    n = (b.gens.card() - 1) // 2

    def deg(i: int) -> int:  # 1-based
        return d[i - 1]

    big_b = tuple(i for i in range(3, n + 2) if theta <= deg(i) + deg(2 * n + 4 - i))
    big_c = tuple(i for i in range(4, n + 3) if theta <= deg(i) + deg(2 * n + 5 - i))
    b_bar = tuple(i for i in range(3, 2 * n + 2) if theta <= deg(i) + deg(2 * n + 4 - i))
    return big_b, big_c, b_bar


def mci_from_sorted(d: Sequence[int], theta: int) -> MciTriple:
    """mci on a sorted admissible degree list; no admissibility re-check."""
    n = (len(d) - 1) // 2

    def deg(i: int) -> int:  # 1-based
        return d[i - 1]

    b_min = b_max = 0
    for i in range(3, n + 2):
        if theta <= deg(i) + deg(2 * n + 4 - i):
            if not b_min:
                b_min = i
            b_max = i
    if b_min:
        return MciTriple(deg(1), deg(b_max), deg(2 * n + 4 - b_min))
    c_max = 0
    for i in range(4, n + 3):
        if theta <= deg(i) + deg(2 * n + 5 - i):
            c_max = i
    if c_max:
        return MciTriple(deg(1), deg(2), deg(c_max))
    return MciTriple(deg(1), deg(2), deg(3))


def mci(b: GorensteinBetti) -> MciTriple:
    """Minimal type of a regular sequence inside an ideal with this Betti sequence."""
    verdict = check_gorenstein_betti(b.gens)
    if not verdict.admissible:
        raise ValueError(f"inadmissible Gorenstein Betti sequence: {verdict.reason}")
    return mci_from_sorted(b.gens.values(), b.theta)


# ----------------------------------------------------------------------
# Hilbert functions
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class HilbertFn:
    """Hilbert function of an Artinian graded quotient, H(0), H(1), ..."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 1:
            raise ValueError("H(0) must be 1")
        if self.values[-1] == 0 and len(self.values) > 1:
            raise ValueError("trailing zeros must be trimmed")

    def value(self, n: int) -> int:
        if n < 0 or n >= len(self.values):
            return 0
        return self.values[n]

    def socle_degree(self) -> int:
        return len(self.values) - 1

    def length(self) -> int:
        return sum(self.values)

    def delta(self, n: int) -> int:
        return self.value(n) - self.value(n - 1)

    def delta2(self, n: int) -> int:
        return self.value(n) - 2 * self.value(n - 1) + self.value(n - 2)


def hilbert_from_resolution(modules: Sequence[IntMultiset], nvars: int) -> HilbertFn:
    """Alternating binomial sum over a free resolution's twist multisets.

    ``modules`` lists [M_1, ..., M_p]; the leading free module R (twist 0)
    is implied.  H(n) = C(n+nvars-1, nvars-1) + sum_i (-1)^i sum_{h in M_i}
    C(n-h+nvars-1, nvars-1).  Raises if the result is not eventually zero.
    """
    if nvars < 1:
        raise ValueError("nvars must be positive")
    top = 0
    for m in modules:
        if m:
            top = max(top, m.max())

    def h_at(n: int) -> int:
        acc = binomial(n + nvars - 1, nvars - 1)
        sign = -1
        for m in modules:
            acc += sign * sum(
                mult * binomial(n - v + nvars - 1, nvars - 1) for v, mult in m.entries
            )
            sign = -sign
        return acc

    limit = max(top, 0) + nvars
    values = [h_at(n) for n in range(limit + 1)]
    # beyond the largest twist the sum is a polynomial of degree < nvars,
    # so vanishing at nvars consecutive points means vanishing identically
    if any(v != 0 for v in values[-nvars:]):
        raise ValueError("resolution does not define an Artinian quotient")
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return HilbertFn(tuple(values))


def koszul_modules(degrees: Sequence[int]) -> list[IntMultiset]:
    """Twist multisets of the Koszul resolution of a complete intersection."""
    degrees = [int(d) for d in degrees]
    n = len(degrees)
    out = []
    for k in range(1, n + 1):
        sums = []
        def rec(start: int, chosen: int, total: int) -> None:
            if chosen == k:
                sums.append(total)
                return
            for idx in range(start, n):
                rec(idx + 1, chosen + 1, total + degrees[idx])
        rec(0, 0, 0)
        out.append(IntMultiset.from_values(sums))
    return out


def initial_degree(h: HilbertFn, nvars: int = 3) -> int:
    """Least degree in which the defining ideal is nonzero."""
    n = 0
    while h.value(n) == binomial(n + nvars - 1, nvars - 1):
        n += 1
    return n


def max_new_generators(h: HilbertFn, d: int) -> int:
    """Largest minimal-generator count in degree d compatible with H: -delta^2 H(d).

    Valid (and only defined) strictly above the initial degree of the
    ideal; the raw second difference is returned even when negative.
    """
    d1 = initial_degree(h)
    if d <= d1:
        raise ValueError(f"mng undefined at initial degree (d = {d} <= {d1})")
    return -h.delta2(d)


# ----------------------------------------------------------------------
# dual-pair cancellation
# ----------------------------------------------------------------------


def cancel_duals(m0: IntMultiset, m1: IntMultiset, theta: int) -> tuple[IntMultiset, IntMultiset]:
    """Remove excess repetitions between generator and syzygy levels.

    For a (possibly non-minimal) Gorenstein resolution with levels
    (m0, m1, {theta}), a repetition value s can be cancelled only in the
    excess of its multiplicity in m0 & m1 over that of its dual theta - s;
    dual-protected pairs (equal excess on both sides) are retained.  The
    fixed point satisfies mu(s) = mu(theta - s) on the intersection.
    """
    if m0.card() != m1.card():
        raise ValueError(f"level ranks differ: |m0| = {m0.card()}, |m1| = {m1.card()}")
    while True:
        inter = m0.intersect(m1)
        for value, mult in inter.entries:
            excess = mult - inter.multiplicity(theta - value)
            if excess > 0:
                drop = IntMultiset(((value, excess),))
                m0 = m0.diff(drop)
                m1 = m1.diff(drop)
                break
        else:
            return m0, m1


# ----------------------------------------------------------------------
# random admissible sequences for property corpora
# ----------------------------------------------------------------------


def random_admissible(
    rng: random.Random,
    n_min: int = 1,
    n_max: int = 5,
    max_tries: int = 10000,
) -> GorensteinBetti:
    """Sample an admissible Gorenstein Betti sequence by seeded rejection.

    Degrees are drawn near a common base (wide spreads almost never pass
    the Gaeta-Diesel inequalities for larger n), then the largest degree is
    adjusted so that theta is integral.
    """
    for _ in range(max_tries):
        n = rng.randint(n_min, n_max)
        count = 2 * n + 1
        base = rng.randint(2, 9)
        width = rng.choice((1, 1, 2, 3))
        degs = sorted(base + rng.randint(0, width) for _ in range(count))
        rem = sum(degs) % n
        if rem:
            degs[-1] += n - rem
        gens = IntMultiset.from_values(degs)
        if check_gorenstein_betti(gens).admissible:
            return GorensteinBetti.from_gens(gens)
    raise RuntimeError("failed to sample an admissible sequence")
