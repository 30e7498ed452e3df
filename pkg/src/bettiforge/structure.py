"""Polynomial-level construction of the four-term ACI resolution.

Given an odd graded alternating matrix and a choice of three rows G, the
quotient by the three corresponding submaximal pfaffians together with the
pfaffian of the complementary block resolves as

    0 -> K'(-d) -> G(-d0) (+) K -> G (+) R(-d0) -> R

with maps, written in block form against the split G / F = complement,

    d1 = [p_1  p_2  p_3  p]
    d2 = [[p * I_3,        lambda^T @ beta_adj],
          [-p_1 -p_2 -p_3, -sigma             ]]
    d3 = [[lambda^T],
          [-beta   ]]

where beta is the F x F block, p = pf(beta), lambda the F x G block,
sigma the F-part of the pfaffian vector.  The signs above are the unique
choice (up to simultaneous unit changes) making both compositions vanish
identically; composition-zero, homogeneity and rank bookkeeping are
checked by :func:`verify_complex`.  Exactness itself is not verified
here: that needs depth machinery far beyond exact arithmetic, and the
construction is used as a complex-builder whose degree bookkeeping must
agree with the multiset-level linkage.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .aci import link_betti
from .exact import Poly, PolyMatrix
from .multiset import IntMultiset
from .pfaffian import AlternatingMatrix


@dataclass(frozen=True)
class GradedFreeModule:
    """Free module with ordered twist slots (order matters for map grading)."""

    twists: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.twists)

    def twist_multiset(self) -> IntMultiset:
        return IntMultiset.from_values(self.twists)


@dataclass(frozen=True)
class GradedComplex:
    """Chain of free modules; maps[k] goes from modules[k+1] into modules[k]."""

    modules: tuple[GradedFreeModule, ...]
    maps: tuple[PolyMatrix, ...]

    def __post_init__(self) -> None:
        if len(self.maps) != len(self.modules) - 1:
            raise ValueError("need one map per consecutive module pair")
        for k, m in enumerate(self.maps):
            if m.rows != self.modules[k].rank or m.cols != self.modules[k + 1].rank:
                raise ValueError(
                    f"map {k} is {m.rows}x{m.cols}, expected "
                    f"{self.modules[k].rank}x{self.modules[k + 1].rank}"
                )

    def twist_multisets(self) -> list[IntMultiset]:
        return [m.twist_multiset() for m in self.modules]


@dataclass(frozen=True)
class AlternatingPresentation:
    """Odd graded alternating matrix with a marked G block of three rows.

    ``twists`` assigns each row its generator degree; entry (i, j) must be
    homogeneous of degree theta - t_i - t_j where theta is forced by the
    grading (theta = 2 * sum(twists) / (size - 1)).
    """

    matrix: AlternatingMatrix
    g_indices: tuple[int, int, int]  # 1-based rows forming the G block
    twists: tuple[int, ...]
    theta: int = field(init=False)

    def __post_init__(self) -> None:
        m = self.matrix.size
        if m < 5 or m % 2 == 0:
            raise ValueError(f"presentation size must be odd and >= 5, got {m}")
        if len(self.twists) != m:
            raise ValueError(f"need {m} twists, got {len(self.twists)}")
        g = tuple(self.g_indices)
        if len(set(g)) != 3 or any(not 1 <= i <= m for i in g):
            raise ValueError(f"g_indices must be 3 distinct rows in 1..{m}, got {g}")
        total = 2 * sum(self.twists)
        if total % (m - 1):
            raise ValueError("twists do not admit an integral matrix degree")
        object.__setattr__(self, "theta", total // (m - 1))
        for i in range(m):
            for j in range(m):
                entry = self.matrix.entries[i][j]
                if entry.is_zero:
                    continue
                need = self.theta - self.twists[i] - self.twists[j]
                if need < 0 or entry.homogeneous_degree() != need:
                    raise ValueError(
                        f"entry ({i + 1},{j + 1}) must be homogeneous of degree {need}, got {entry}"
                    )

    def reordered(self) -> tuple[AlternatingMatrix, tuple[int, ...]]:
        """Congruence-permuted copy with the G rows moved to the front."""
        m = self.matrix.size
        order = list(self.g_indices) + [
            i for i in range(1, m + 1) if i not in self.g_indices
        ]
        grid = [
            [self.matrix.entry(order[i], order[j]) for j in range(m)] for i in range(m)
        ]
        return AlternatingMatrix(grid), tuple(self.twists[i - 1] for i in order)


def build_aci_complex(pres: AlternatingPresentation) -> GradedComplex:
    """Assemble the four-term graded complex for the given presentation."""
    mat, twists = pres.reordered()
    m = mat.size
    theta = pres.theta
    theta_z = twists[0] + twists[1] + twists[2]
    d0 = theta_z - theta

    pf_vec = mat.submaximal_pfaffians()
    p123 = pf_vec[:3]
    sigma = pf_vec[3:]
    beta = mat.delete((1, 2, 3))
    p = beta.pfaffian()
    beta_adj = beta.adjoint().to_poly_matrix()
    # lambda is the F x G lower-left block; the upper-right block is -lambda^T
    lam_t = mat.to_poly_matrix().submatrix(tuple(range(3, m)), (0, 1, 2)).transpose()

    d1 = PolyMatrix([list(p123) + [p]])
    top_right = lam_t @ beta_adj
    d2_rows = [
        [p if i == j else Poly.zero() for j in range(3)] + list(top_right.row(i))
        for i in range(3)
    ]
    d2_rows.append([-q for q in p123] + [-q for q in sigma])
    d2 = PolyMatrix(d2_rows)
    d3 = PolyMatrix(
        [list(lam_t.row(i)) for i in range(3)]
        + [[-e for e in row] for row in beta.entries]
    )

    modules = (
        GradedFreeModule((0,)),
        GradedFreeModule((twists[0], twists[1], twists[2], d0)),
        GradedFreeModule(tuple(t + d0 for t in twists)),
        GradedFreeModule(tuple(theta_z - t for t in twists[3:])),
    )
    return GradedComplex(modules, (d1, d2, d3))


@dataclass(frozen=True)
class PairReport:
    composition_zero: bool
    composition_witness: str | None


@dataclass(frozen=True)
class ComplexReport:
    pairs: tuple[PairReport, ...]
    homogeneous: bool
    homogeneity_witness: str | None
    rank_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.homogeneous
            and self.rank_ok
            and all(p.composition_zero for p in self.pairs)
        )

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "compositions": [
                {"zero": p.composition_zero, "witness": p.composition_witness}
                for p in self.pairs
            ],
            "homogeneous": self.homogeneous,
            "homogeneity_witness": self.homogeneity_witness,
            "rank_ok": self.rank_ok,
        }


def verify_complex(c: GradedComplex) -> ComplexReport:
    """Check composition-zero, homogeneity and rank bookkeeping.

    Homogeneity: entry (i, j) of maps[k] must be homogeneous of degree
    source_twist(j) - target_twist(i); zero entries are exempt, and any
    slot whose required degree is negative must be zero.
    """
    homogeneous = True
    hom_witness = None
    for k, mp in enumerate(c.maps):
        src = c.modules[k + 1].twists
        tgt = c.modules[k].twists
        for i in range(mp.rows):
            for j in range(mp.cols):
                entry = mp.entry(i, j)
                need = src[j] - tgt[i]
                if entry.is_zero:
                    continue
                if need < 0 or entry.homogeneous_degree() != need:
                    if homogeneous:
                        homogeneous = False
                        hom_witness = (
                            f"map {k} entry ({i + 1},{j + 1}) should have degree {need}"
                        )
    pairs = []
    for k in range(len(c.maps) - 1):
        comp = c.maps[k] @ c.maps[k + 1]
        if comp.is_zero:
            pairs.append(PairReport(True, None))
        else:
            witness = next(
                f"({i + 1},{j + 1}) = {comp.entry(i, j)}"
                for i in range(comp.rows)
                for j in range(comp.cols)
                if not comp.entry(i, j).is_zero
            )
            pairs.append(PairReport(False, witness))
    signed = sum(
        (-1) ** idx * module.rank for idx, module in enumerate(c.modules)
    )
    return ComplexReport(tuple(pairs), homogeneous, hom_witness, signed == 0)


def colon_generators(
    m: AlternatingMatrix, abc: Sequence[int]
) -> tuple[Poly, Poly, Poly, Poly]:
    """Generators (p_a, p_b, p_c, p_abc) of the colon of the pfaffian ideal.

    When (p_a, p_b, p_c) is a regular sequence, the colon ideal of the
    full submaximal-pfaffian ideal is generated by the three chosen
    pfaffians together with the order-(m-3) pfaffian obtained by deleting
    rows and columns a, b, c.
    """
    if m.size < 5 or m.size % 2 == 0:
        raise ValueError("matrix size must be odd and >= 5")
    a, b, c = abc
    if len({a, b, c}) != 3:
        raise ValueError("indices must be distinct")
    pf_vec = m.submaximal_pfaffians()
    for i in (a, b, c):
        if not 1 <= i <= m.size:
            raise ValueError(f"index {i} out of range 1..{m.size}")
    return pf_vec[a - 1], pf_vec[b - 1], pf_vec[c - 1], m.delete((a, b, c)).pfaffian()


def linkage_example_2_2_8() -> dict:
    """Zero-dimensional quotient linked to five general points in a (2,2,8) complete intersection.

    Drives the multiset-level linkage with generator degrees {2,2,2,2,2},
    socle-syzygy degree 5, regular sequence type (2,2,8) and one bordered
    pair for the degree-8 member (partner slot at degree -3), then checks
    the expected four-term resolution and its minimalization.
    """
    result = link_betti(
        IntMultiset.from_values([2, 2, 2, 2, 2]),
        5,
        (2, 2, 8),
        IntMultiset.from_values([8]),
    )
    expected = {
        "d0": 7,
        "d": 19,
        "D": [2, 2, 7, 8],
        "E": [4, 9, 9, 9, 9, 9, 15],
        "F": [10, 10, 10, 15],
        "minimal_E": [4, 9, 9, 9, 9, 9],
        "minimal_F": [10, 10, 10],
    }
    got = {
        "d0": result.d0,
        "d": result.d,
        "D": result.d_level.to_list(),
        "E": result.e_level.to_list(),
        "F": result.f_level.to_list(),
        "minimal_E": result.minimal.e.to_list(),
        "minimal_F": result.minimal.f.to_list(),
    }
    if got != expected:
        raise RuntimeError(f"linkage example mismatch: {got} != {expected}")
    return {
        "resolution": result.to_json(),
        "ghost_removed": [15],
        "matches_expected": True,
    }
