"""Betti-sequence classification for codimension-3 almost complete intersections.

An Artinian almost complete intersection (ACI) of codimension 3 has a
minimal graded free resolution with twist multisets (D, E, F) where
|D| = 4 and |E| = |F| + 3.  Linking in a complete intersection of type
D \\ {min D} induces a Gorenstein quotient, and the admissible (D, E, F)
are exactly the triples passing the three-stage test implemented by
:func:`check_betti`:

1. the triple decomposes combinatorially (:func:`decompose`);
2. the induced Gorenstein Betti data is admissible
   (:func:`induced_gorenstein`);
3. the linkage type dominates the minimal complete-intersection type of
   the induced Gorenstein sequence, strictly so in the degrees forced to
   be non-minimal generators.

:func:`link_betti` performs the reverse bookkeeping (Gorenstein data plus
a chosen regular-sequence type to an ACI resolution), and
:func:`enumerate_admissible` streams every admissible triple within
degree bounds in a canonical deterministic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .gorenstein import (
    GorensteinBetti,
    check_gorenstein_betti,
    gaeta_diesel_violation,
    mci,
    mci_from_sorted,
)
from .multiset import IntMultiset


@dataclass(frozen=True)
class AciBetti:
    """Resolution twist multisets (D, E, F) of a candidate ACI quotient."""

    d: IntMultiset
    e: IntMultiset
    f: IntMultiset

    def __post_init__(self) -> None:
        if self.d.card() != 4:
            raise ValueError(f"|D| must be 4, got {self.d.card()}")
        if self.f.card() < 2:
            raise ValueError(f"|F| must be >= 2, got {self.f.card()}")
        if self.e.card() != self.f.card() + 3:
            raise ValueError(
                f"|E| must be |F| + 3 = {self.f.card() + 3}, got {self.e.card()}"
            )
        for name, m in (("D", self.d), ("E", self.e), ("F", self.f)):
            if m.min() < 1:
                raise ValueError(f"{name} must contain positive degrees only")

    @classmethod
    def from_values(
        cls, d: Iterable[int], e: Iterable[int], f: Iterable[int]
    ) -> "AciBetti":
        return cls(
            IntMultiset.from_values(d),
            IntMultiset.from_values(e),
            IntMultiset.from_values(f),
        )

    @classmethod
    def from_json(cls, data: dict) -> "AciBetti":
        try:
            return cls.from_values(data["D"], data["E"], data["F"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"expected keys D, E, F with integer arrays: {exc}") from exc

    def to_json(self) -> dict:
        return {"D": self.d.to_list(), "E": self.e.to_list(), "F": self.f.to_list()}

    def key(self) -> tuple:
        """Canonical sort key: (norm(D), D, F, E)."""
        return (
            self.d.norm(),
            tuple(self.d.values()),
            tuple(self.f.values()),
            tuple(self.e.values()),
        )


@dataclass(frozen=True)
class AciDecomposition:
    """Canonical combinatorial decomposition of an aci-type triple."""

    d0: int
    dstar: IntMultiset
    theta_z: int
    ehat: IntMultiset
    s: IntMultiset
    dbar: IntMultiset
    t: IntMultiset
    theta_g: int
    d: int


@dataclass(frozen=True)
class AciTypeFailure:
    clause: int  # 2 or 3, matching the decomposition conditions
    reason: str


def _t_multiset(theta_g: int, s: IntMultiset, f_card: int, dbar_card: int) -> IntMultiset:
    """Socle-halving slot: {theta_g/2} only when it lies in Supp S and |F|+|Dbar| is even."""
    if theta_g % 2 == 0 and (theta_g // 2) in s and (f_card + dbar_card) % 2 == 0:
        return IntMultiset.from_values([theta_g // 2])
    return IntMultiset.empty()


def decompose(b: AciBetti) -> AciDecomposition | AciTypeFailure:
    """Run the aci-type decomposition with d0 = min D.

    Succeeds iff (d - F) is a submultiset of E and the leftover
    Ehat = E \\ (d - F) splits exactly as (d0 + Dbar) + (theta_z - S) with
    S = Dstar & (theta_z - Ehat).
    """
    d_norm = b.d.norm()
    shifted_f = b.f.affine(d_norm, -1)
    if not shifted_f.is_submultiset(b.e):
        missing = shifted_f.diff(b.e)
        return AciTypeFailure(2, f"(d - F) is not a submultiset of E: missing {missing}")
    ehat = b.e.diff(shifted_f)
    d0 = b.d.min()
    dstar = b.d.diff(IntMultiset.from_values([d0]))
    theta_z = dstar.norm()
    s = dstar.intersect(ehat.affine(theta_z, -1))
    dbar = dstar.diff(s)
    expected = dbar.affine(d0, 1).sum(s.affine(theta_z, -1))
    if ehat != expected:
        return AciTypeFailure(
            3, f"Ehat = {ehat} differs from (d0 + Dbar) + (theta_z - S) = {expected}"
        )
    theta_g = theta_z - d0
    t = _t_multiset(theta_g, s, b.f.card(), dbar.card())
    return AciDecomposition(
        d0=d0,
        dstar=dstar,
        theta_z=theta_z,
        ehat=ehat,
        s=s,
        dbar=dbar,
        t=t,
        theta_g=theta_g,
        d=d_norm,
    )


@dataclass(frozen=True)
class GorensteinFailure:
    kind: str  # "parity" | "gaeta_diesel" | "socle"
    reason: str


def induced_gorenstein(
    dec: AciDecomposition, f: IntMultiset
) -> GorensteinBetti | GorensteinFailure:
    """Gorenstein generator data induced by linkage: G0 = (theta_z - F) + Dbar + T."""
    g0 = f.affine(dec.theta_z, -1).sum(dec.dbar).sum(dec.t)
    if g0.card() % 2 == 0:
        return GorensteinFailure(
            "parity", f"induced generator multiset {g0} has even cardinality {g0.card()}"
        )
    verdict = check_gorenstein_betti(g0)
    if not verdict.admissible:
        return GorensteinFailure("gaeta_diesel", f"G0 = {g0}: {verdict.reason}")
    if verdict.theta != dec.theta_g:
        return GorensteinFailure(
            "socle",
            f"G0 = {g0} has socle-syzygy degree {verdict.theta}, expected {dec.theta_g}",
        )
    return GorensteinBetti(g0, dec.theta_g)


@dataclass(frozen=True)
class Verdict:
    """Outcome of the three-stage admissibility test."""

    admissible: bool
    stage: int | None = None
    witness: str | None = None
    beta_g: GorensteinBetti | None = None
    mci: tuple[int, int, int] | None = None

    def to_json(self) -> dict:
        return {
            "admissible": self.admissible,
            "stage": self.stage,
            "beta_G": self.beta_g.to_json() if self.beta_g else None,
            "mci": list(self.mci) if self.mci else None,
            "witness": self.witness,
        }


def _stage3_witness(
    dvals: Sequence[int], e: Sequence[int], strict: IntMultiset
) -> str | None:
    """First failed mci comparison, or None if the linkage type dominates.

    ``dvals`` is the sorted type d_1 <= d_2 <= d_3, ``e`` the mci triple,
    ``strict`` the degrees whose chosen regular-sequence members are forced
    non-minimal, so domination must be strict at the index
    min{j | d_j = s} + multiplicity(s) - 1.
    """
    if any(dvals[i] < e[i] for i in range(3)):
        return "({},{},{}) ≱ ({},{},{})".format(*dvals, *e)
    for s_val, mult in strict.entries:
        first = next(j for j in range(1, 4) if dvals[j - 1] == s_val)
        i = first + mult - 1
        if not dvals[i - 1] > e[i - 1]:
            return f"s={s_val}, i={i}, d_{i}={dvals[i - 1]} not > e_{i}={e[i - 1]}"
    return None


def check_betti(b: AciBetti) -> Verdict:
    """Decide whether (D, E, F) is admissible for a codimension-3 ACI."""
    dec = decompose(b)
    if isinstance(dec, AciTypeFailure):
        return Verdict(False, stage=1, witness=dec.reason)
    beta_g = induced_gorenstein(dec, b.f)
    if isinstance(beta_g, GorensteinFailure):
        return Verdict(False, stage=2, witness=f"{beta_g.kind}: {beta_g.reason}")
    e = mci(beta_g)
    witness = _stage3_witness(dec.dstar.values(), e, dec.s.diff(dec.t))
    if witness is not None:
        return Verdict(False, stage=3, witness=witness, beta_g=beta_g, mci=tuple(e))
    return Verdict(True, beta_g=beta_g, mci=tuple(e))


# ----------------------------------------------------------------------
# linkage bookkeeping
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class LinkResult:
    """Four-term ACI resolution obtained by linking a Gorenstein quotient."""

    d0: int
    d: int
    d_level: IntMultiset
    e_level: IntMultiset
    f_level: IntMultiset
    minimal: AciBetti

    def resolution(self) -> list[IntMultiset]:
        return [self.d_level, self.e_level, self.f_level]

    def to_json(self) -> dict:
        return {
            "d0": self.d0,
            "d": self.d,
            "resolution": {
                "D": self.d_level.to_list(),
                "E": self.e_level.to_list(),
                "F": self.f_level.to_list(),
            },
            "minimal": self.minimal.to_json(),
        }


def link_betti(
    gor_gens: IntMultiset,
    gor_theta: int,
    ci_type: Sequence[int],
    extra_gens: IntMultiset | None = None,
) -> LinkResult:
    """Degree bookkeeping for linking a Gorenstein quotient in a complete intersection.

    ``ci_type`` is the type of the chosen regular sequence; its members
    must be pfaffian slots of the presentation, i.e. minimal generator
    degrees or degrees added as bordered pairs via ``extra_gens`` (each
    added degree e brings the partner slot gor_theta - e).  Realizability
    of the regular sequence is the caller's responsibility.

    The emitted levels are the mapping-cone output; ``minimal`` removes
    the ghost pair (d0 + e) in the E and F levels that each bordered pair
    creates through its unit entry.
    """
    if extra_gens is None:
        extra_gens = IntMultiset.empty()
    ci = IntMultiset.from_values(ci_type)
    if ci.card() != 3:
        raise ValueError("ci_type must have exactly three degrees")
    beta = GorensteinBetti(gor_gens, gor_theta)  # validates theta against gens
    slots = gor_gens.sum(extra_gens).sum(extra_gens.affine(gor_theta, -1))
    if gor_gens.card() + extra_gens.card() < 5:
        # a 4-generator codimension-3 quotient cannot be Gorenstein, so a
        # genuine almost complete intersection keeps at least two residual
        # slots after ghost removal
        raise ValueError(
            "slot bookkeeping mismatch: fewer than two residual slots; "
            "the linked quotient cannot be an almost complete intersection"
        )
    if not ci.is_submultiset(slots):
        raise ValueError(
            f"slot bookkeeping mismatch: ci_type {ci} is not contained in the pfaffian slots {slots}"
        )
    if not extra_gens.is_submultiset(ci):
        raise ValueError(
            f"slot bookkeeping mismatch: added degrees {extra_gens} must be consumed by ci_type {ci}"
        )
    theta_z = ci.norm()
    d0 = theta_z - gor_theta
    if d0 <= 0:
        raise ValueError(f"linkage degenerate: d0 = {d0} must be positive")
    d = d0 + theta_z
    f_slots = slots.diff(ci)
    k = f_slots.affine(d0, 1)
    d_level = ci.sum(IntMultiset.from_values([d0]))
    e_level = ci.affine(d0, 1).sum(k)
    f_level = k.affine(d, -1)
    ghosts = extra_gens.affine(d0, 1)
    if not (ghosts.is_submultiset(e_level) and ghosts.is_submultiset(f_level)):
        raise ValueError(f"slot bookkeeping mismatch: ghost degrees {ghosts} not present")
    minimal = AciBetti(d_level, e_level.diff(ghosts), f_level.diff(ghosts))
    return LinkResult(d0, d, d_level, e_level, f_level, minimal)


# ----------------------------------------------------------------------
# retained-overlap shapes
# ----------------------------------------------------------------------


def retained_overlap_cardinalities(s: IntMultiset, theta_g: int) -> frozenset[int]:
    """Possible sizes of the overlap submultiset retained by a minimal linkage.

    The retained part of S pairs off under x -> theta_g - x, possibly with
    one fixed point theta_g/2, so its cardinality is limited to:

    * 0 always;
    * 1 via {theta_g/2};
    * 2 via {alpha, theta_g - alpha};
    * 3 via {theta_g/2, alpha, theta_g - alpha}.
    """
    permitted = {0}
    half_ok = theta_g % 2 == 0 and (theta_g // 2) in s
    if half_ok:
        permitted.add(1)
    pair_ok = False
    for alpha in s.support():
        partner = theta_g - alpha
        if partner == alpha:
            if s.multiplicity(alpha) >= 2:
                pair_ok = True
        elif partner in s:
            pair_ok = True
    if pair_ok:
        permitted.add(2)
    if half_ok and pair_ok:
        half = theta_g // 2
        for alpha in s.support():
            partner = theta_g - alpha
            need: dict[int, int] = {half: 1}
            need[alpha] = need.get(alpha, 0) + 1
            need[partner] = need.get(partner, 0) + 1
            if all(s.multiplicity(v) >= m for v, m in need.items()):
                permitted.add(3)
                break
    return frozenset(permitted)


# ----------------------------------------------------------------------
# bounded enumeration
# ----------------------------------------------------------------------


def _submultisets(values: list[int]) -> list[tuple[int, ...]]:
    out = {()}
    for v in values:
        out |= {s + (v,) for s in out}
    return sorted(out)


def _fixed_sum_multisets(lo: int, hi: int, k: int, total: int) -> Iterator[tuple[int, ...]]:
    """Sorted k-tuples with entries in [lo, hi] summing to total."""
    if k == 0:
        if total == 0:
            yield ()
        return
    start = max(lo, total - (k - 1) * hi)
    stop = min(hi, total // k)
    for v in range(start, stop + 1):
        for rest in _fixed_sum_multisets(v, hi, k - 1, total - v):
            yield (v,) + rest


def _candidates_for_d(
    dvals: tuple[int, int, int, int], max_degree: int, max_f: int
) -> list[AciBetti]:
    """All admissible triples with the given sorted D, canonically ordered.

    Synthesis: each admissible triple determines a canonical overlap
    S = Dstar & (theta_z - Ehat), so iterating over the submultisets of
    Dstar and keeping only the choices that reproduce themselves as the
    canonical overlap generates every admissible triple exactly once.
    The F loop is cut by the socle degree balance, which pins norm(F)
    given (S, |F|), and the stage-2/3 tests run inline on sorted lists.
    """
    d0 = dvals[0]
    dstar_list = list(dvals[1:])
    dstar = IntMultiset.from_values(dstar_list)
    theta_z = sum(dstar_list)
    theta_g = theta_z - d0
    d = d0 + theta_z
    found: dict[tuple, AciBetti] = {}
    for s_tuple in _submultisets(dstar_list):
        s = IntMultiset.from_values(s_tuple)
        dbar = dstar.diff(s)
        ehat = dbar.affine(d0, 1).sum(s.affine(theta_z, -1))
        if ehat.max() > max_degree:
            continue
        if dstar.intersect(ehat.affine(theta_z, -1)) != s:
            continue  # not the canonical overlap; the canonical choice covers it
        # F window: degree bounds, d - f must be a valid E entry, and the
        # induced generator theta_z - f must be positive and below theta_g.
        lo = max(1, d - max_degree, d0 + 1)
        hi = min(max_degree, d - 1, theta_z - 1)
        if lo > hi:
            continue
        dbar_vals = dbar.values()
        dbar_norm = dbar.norm()
        dbar_card = len(dbar_vals)
        for k in range(2, max_f + 1):
            t = _t_multiset(theta_g, s, k, dbar_card)
            t_vals = t.values()
            t_card = len(t_vals)
            if (k + dbar_card + t_card) % 2 == 0:
                continue  # |G0| must be odd
            # socle degree balance: 2*norm(G0) = theta_g * (|G0| - 1)
            doubled = (
                2 * k * theta_z
                + 2 * dbar_norm
                + t_card * theta_g
                - theta_g * (k + dbar_card + t_card - 1)
            )
            if doubled % 2:
                continue
            target = doubled // 2
            strict = s.diff(t)
            tail = dbar_vals + t_vals
            for f_tuple in _fixed_sum_multisets(lo, hi, k, target):
                g0 = sorted([theta_z - fv for fv in f_tuple] + tail)
                if gaeta_diesel_violation(g0, theta_g) is not None:
                    continue
                e_triple = mci_from_sorted(g0, theta_g)
                if _stage3_witness(dstar_list, e_triple, strict) is not None:
                    continue
                f = IntMultiset.from_values(f_tuple)
                e = f.affine(d, -1).sum(ehat)
                candidate = AciBetti(IntMultiset.from_values(dvals), e, f)
                assert check_betti(candidate).admissible
                found[candidate.key()] = candidate
    return [found[k] for k in sorted(found)]


def _worker(args: tuple[tuple[int, int, int, int], int, int]) -> list[AciBetti]:
    dvals, max_degree, max_f = args
    return _candidates_for_d(dvals, max_degree, max_f)


def _sorted_d_tuples(max_degree: int) -> Iterator[tuple[int, int, int, int]]:
    """All sorted 4-tuples over [1, max_degree], grouped by total then lex."""
    groups: dict[int, list[tuple[int, int, int, int]]] = {}
    for a in range(1, max_degree + 1):
        for b in range(a, max_degree + 1):
            for c in range(b, max_degree + 1):
                for e in range(c, max_degree + 1):
                    groups.setdefault(a + b + c + e, []).append((a, b, c, e))
    for total in sorted(groups):
        yield from sorted(groups[total])


def enumerate_admissible(
    max_degree: int, max_f: int, jobs: int = 1
) -> Iterator[AciBetti]:
    """Stream every admissible (D, E, F) with degrees <= max_degree and |F| <= max_f.

    Output is deduplicated and globally sorted by (norm(D), D, F, E); the
    stream is identical for any job count.
    """
    if max_degree < 1 or max_f < 2:
        return
    d_tuples = list(_sorted_d_tuples(max_degree))
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            for batch in pool.imap(
                _worker,
                ((dv, max_degree, max_f) for dv in d_tuples),
                chunksize=16,
            ):
                yield from batch
    else:
        for dv in d_tuples:
            yield from _candidates_for_d(dv, max_degree, max_f)
