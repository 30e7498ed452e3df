"""Pfaffian algebra of alternating matrices.

An alternating matrix is skew-symmetric with zero diagonal.  This module
provides the row-expansion pfaffian, an independent perfect-matching
oracle, submaximal pfaffian vectors, the pfaffian adjoint, the two-row
block expansion, bordered augmentation and congruence transforms.

Sign conventions (fixed by contract, verified in the test suite):

* ``submaximal_pfaffians`` returns ``p_i = (-1)**(i+1) * pf(M_del_i)``
  (1-based ``i``), the unique-up-to-global-sign vector with ``M @ p = 0``.
* ``adjoint`` returns the alternating matrix ``Mbar`` with
  ``Mbar @ M = M @ Mbar = pf(M) * I``; entrywise
  ``Mbar[i][j] = -(-1)**bracket(i,j) * pf(M_del_ij)``.

With these choices the congruence identity
``pfvector(A M A^T) = pfvector(M) @ adjugate(A)`` holds exactly,
not merely up to sign.
"""

from __future__ import annotations

import random
from typing import Sequence

from .exact import Poly, PolyMatrix, Scalar, monomials


def sign_bracket(i: int, j: int) -> int:
    """Exponent bracket for pfaffian expansions, 1-based indices."""
    if i == j:
        raise ValueError("bracket is undefined for i == j")
    return i + j + 1 if i < j else i + j


def _perm_sign(seq: Sequence[int]) -> int:
    inversions = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inversions += 1
    return -1 if inversions % 2 else 1


class AlternatingMatrix:
    """Square skew matrix with zero diagonal over exact polynomials."""

    __slots__ = ("entries", "size", "_pf_memo")

    def __init__(self, entries: Sequence[Sequence[Poly | Scalar]]):
        grid = tuple(tuple(Poly._coerce(e) for e in row) for row in entries)
        n = len(grid)
        for row in grid:
            if len(row) != n:
                raise ValueError("alternating matrix must be square")
        for i in range(n):
            if not grid[i][i].is_zero:
                raise ValueError(f"diagonal entry ({i + 1},{i + 1}) must be zero")
            for j in range(i + 1, n):
                if grid[j][i] != -grid[i][j]:
                    raise ValueError(f"entry ({j + 1},{i + 1}) is not the negative of ({i + 1},{j + 1})")
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "size", n)
        object.__setattr__(self, "_pf_memo", {})

    def __setattr__(self, name, value):
        raise AttributeError("AlternatingMatrix is immutable")

    # ------------------------------------------------------------------
    # construction helpers
    # ------------------------------------------------------------------

    @classmethod
    def from_upper(cls, size: int, upper: dict[tuple[int, int], Poly | Scalar]) -> "AlternatingMatrix":
        """Build from the strict upper triangle, 1-based (i, j) keys with i < j."""
        grid: list[list[Poly | Scalar]] = [[0] * size for _ in range(size)]
        for (i, j), value in upper.items():
            if not (1 <= i < j <= size):
                raise ValueError(f"bad upper-triangle key ({i},{j})")
            v = Poly._coerce(value)
            grid[i - 1][j - 1] = v
            grid[j - 1][i - 1] = -v
        return cls(grid)

    @classmethod
    def generic(cls, size: int, prefix: str = "a") -> "AlternatingMatrix":
        """Fully symbolic matrix with a distinct variable per upper entry."""
        names = tuple(f"{prefix}{i}{j}" for i in range(1, size + 1) for j in range(i + 1, size + 1))
        upper = {
            (i, j): Poly.variable(f"{prefix}{i}{j}", names)
            for i in range(1, size + 1)
            for j in range(i + 1, size + 1)
        }
        return cls.from_upper(size, upper)

    @classmethod
    def random_integer(cls, size: int, rng: random.Random, bound: int = 9) -> "AlternatingMatrix":
        upper = {
            (i, j): rng.randint(-bound, bound)
            for i in range(1, size + 1)
            for j in range(i + 1, size + 1)
        }
        return cls.from_upper(size, upper)

    @classmethod
    def from_poly_matrix(cls, m: PolyMatrix) -> "AlternatingMatrix":
        return cls(m.entries)

    def to_poly_matrix(self) -> PolyMatrix:
        return PolyMatrix(self.entries)

    def entry(self, i: int, j: int) -> Poly:
        """1-based access, matching the written conventions of this theory."""
        return self.entries[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlternatingMatrix):
            return NotImplemented
        return self.size == other.size and all(
            self.entries[i][j] == other.entries[i][j]
            for i in range(self.size)
            for j in range(self.size)
        )

    def __hash__(self):
        raise TypeError("AlternatingMatrix is unhashable")

    def __str__(self) -> str:
        return str(self.to_poly_matrix())

    def __repr__(self) -> str:
        return f"AlternatingMatrix(size={self.size})"

    # ------------------------------------------------------------------
    # submatrices
    # ------------------------------------------------------------------

    def delete(self, indices: Sequence[int]) -> "AlternatingMatrix":
        """Delete the given rows *and* columns (1-based, distinct)."""
        chosen = set()
        for i in indices:
            if not (1 <= i <= self.size):
                raise ValueError(f"index {i} out of range 1..{self.size}")
            if i in chosen:
                raise ValueError(f"repeated index {i}")
            chosen.add(i)
        keep = [i for i in range(self.size) if (i + 1) not in chosen]
        return AlternatingMatrix([[self.entries[i][j] for j in keep] for i in keep])

    # ------------------------------------------------------------------
    # pfaffians
    # ------------------------------------------------------------------

    def _zero(self) -> Poly:
        return Poly.zero(self._names())

    def _names(self) -> tuple[str, ...]:
        for row in self.entries:
            for e in row:
                if e.names:
                    return e.names
        return ()

    def pfaffian(self) -> Poly:
        if self.size % 2:
            raise ValueError("odd-size pfaffian undefined")
        return self._pf(tuple(range(self.size)))

    def _pf(self, idx: tuple[int, ...]) -> Poly:
        """Row expansion over the submatrix on ``idx`` (0-based, sorted)."""
        if not idx:
            return Poly.const(1, self._names())
        cached = self._pf_memo.get(idx)
        if cached is not None:
            return cached
        k = len(idx)
        # expand along the local row with fewest nonzero entries
        best_a, best_count = 0, k + 1
        for a in range(k):
            count = sum(
                1 for b in range(k) if b != a and not self.entries[idx[a]][idx[b]].is_zero
            )
            if count < best_count:
                best_a, best_count = a, count
                if count == 0:
                    break
        acc = self._zero()
        if best_count > 0:
            a = best_a
            for b in range(k):
                if b == a:
                    continue
                e = self.entries[idx[a]][idx[b]]
                if e.is_zero:
                    continue
                rest = tuple(idx[c] for c in range(k) if c not in (a, b))
                term = e * self._pf(rest)
                if sign_bracket(a + 1, b + 1) % 2:
                    term = -term
                acc = acc + term
        self._pf_memo[idx] = acc
        return acc

    def pfaffian_oracle(self) -> Poly:
        """Signed sum over perfect matchings; independent of the expansion."""
        if self.size % 2:
            raise ValueError("odd-size pfaffian undefined")
        acc = self._zero()
        for matching in _perfect_matchings(tuple(range(self.size))):
            seq = [pos for pair in matching for pos in pair]
            prod = Poly.const(_perm_sign(seq), self._names())
            for i, j in matching:
                prod = prod * self.entries[i][j]
            acc = acc + prod
        return acc

    def submaximal_pfaffians(self) -> tuple[Poly, ...]:
        """Syzygy-signed vector p with M @ p = 0 (size must be odd)."""
        if self.size % 2 == 0:
            raise ValueError("submaximal pfaffian vector requires odd size")
        out = []
        all_idx = tuple(range(self.size))
        for i in range(self.size):
            rest = all_idx[:i] + all_idx[i + 1 :]
            value = self._pf(rest)
            out.append(value if i % 2 == 0 else -value)
        return tuple(out)

    def adjoint(self) -> "AlternatingMatrix":
        """Alternating Mbar with Mbar @ M = M @ Mbar = pf(M) * I."""
        if self.size % 2:
            raise ValueError("pfaffian adjoint requires even size")
        all_idx = tuple(range(self.size))
        grid: list[list[Poly]] = [[self._zero()] * self.size for _ in range(self.size)]
        for i in range(self.size):
            for j in range(i + 1, self.size):
                rest = tuple(k for k in all_idx if k not in (i, j))
                value = self._pf(rest)
                if sign_bracket(i + 1, j + 1) % 2 == 0:
                    value = -value
                grid[i][j] = value
                grid[j][i] = -value
        return AlternatingMatrix(grid)

    # ------------------------------------------------------------------
    # bordered augmentation
    # ------------------------------------------------------------------

    def augment(self, coeffs: Sequence[Poly | Scalar]) -> "AlternatingMatrix":
        """Border an odd matrix to size m+2 so the pfaffian vector gains sum(a_i p_i) and 0.

        The returned matrix has submaximal pfaffian vector
        ``-(p_1, ..., p_m, p, 0)`` where ``p = sum(coeffs[i] * p_i)``; as a
        multiset up to per-entry sign this is ``{p_1, ..., p_m, p, 0}``.
        """
        if self.size % 2 == 0:
            raise ValueError("augment requires odd size")
        coeffs = [Poly._coerce(c) for c in coeffs]
        if len(coeffs) != self.size:
            raise ValueError(f"need {self.size} coefficients, got {len(coeffs)}")
        m = self.size
        grid: list[list[Poly]] = [[self._zero()] * (m + 2) for _ in range(m + 2)]
        for i in range(m):
            for j in range(m):
                grid[i][j] = self.entries[i][j]
        for i in range(m):
            grid[i][m + 1] = coeffs[i]
            grid[m + 1][i] = -coeffs[i]
        one = Poly.const(1, self._names())
        grid[m][m + 1] = -one
        grid[m + 1][m] = one
        return AlternatingMatrix(grid)


def _perfect_matchings(idx: tuple[int, ...]):
    """All perfect matchings of ``idx`` as lists of (lo, hi) pairs."""
    if not idx:
        yield []
        return
    first, rest = idx[0], idx[1:]
    for pos in range(len(rest)):
        partner = rest[pos]
        remaining = rest[:pos] + rest[pos + 1 :]
        for sub in _perfect_matchings(remaining):
            yield [(first, partner)] + sub


def block_pfaffian(a: Poly | Scalar, top: PolyMatrix, c: AlternatingMatrix) -> Poly:
    """Two-row block expansion: returns a*pf(C) + pf(B Cbar B^T).

    ``top`` is the 2 x (m-2) block sitting right of the leading
    ``[[0, a], [-a, 0]]`` corner; the result equals the pfaffian of the
    assembled m x m matrix.
    """
    if top.rows != 2 or top.cols != c.size:
        raise ValueError(f"top block must be 2x{c.size}, got {top.rows}x{top.cols}")
    a = Poly._coerce(a)
    small = top @ c.adjoint().to_poly_matrix() @ top.transpose()
    # small is 2x2 alternating; its pfaffian is the (1,2) entry
    return a * c.pfaffian() + small.entry(0, 1)


def assemble_block(a: Poly | Scalar, top: PolyMatrix, c: AlternatingMatrix) -> AlternatingMatrix:
    """Build the m x m alternating matrix with corner a, top block and core C."""
    m = c.size + 2
    a = Poly._coerce(a)
    grid: list[list[Poly]] = [[Poly.zero()] * m for _ in range(m)]
    grid[0][1] = a
    grid[1][0] = -a
    for j in range(c.size):
        grid[0][2 + j] = top.entry(0, j)
        grid[1][2 + j] = top.entry(1, j)
        grid[2 + j][0] = -top.entry(0, j)
        grid[2 + j][1] = -top.entry(1, j)
    for i in range(c.size):
        for j in range(c.size):
            grid[2 + i][2 + j] = c.entries[i][j]
    return AlternatingMatrix(grid)


def congruence(a: PolyMatrix, m: AlternatingMatrix) -> AlternatingMatrix:
    """Congruence transform A M A^T (alternating for any square A)."""
    if a.rows != a.cols or a.rows != m.size:
        raise ValueError("A must be square of the same size as M")
    return AlternatingMatrix.from_poly_matrix(a @ m.to_poly_matrix() @ a.transpose())


def three_generator_embedding(
    psi: AlternatingMatrix,
    coeff_vectors: Sequence[Sequence[Poly | Scalar]],
) -> AlternatingMatrix:
    """Border psi three times so three prescribed combinations join the pfaffian vector.

    Each of the three coefficient vectors expresses a target element over
    the submaximal pfaffian vector of ``psi``.  The result has size n+6 and
    its pfaffian multiset, up to per-entry sign, is
    ``{p_1..p_n} + {targets} + {0, 0, 0}``.

    Each augmentation negates the previous pfaffian vector, so the second
    and third coefficient vectors are re-expressed over the current vector
    before bordering.
    """
    if len(coeff_vectors) != 3:
        raise ValueError("exactly three coefficient vectors required")
    u, v, w = (tuple(Poly._coerce(c) for c in vec) for vec in coeff_vectors)
    n = psi.size
    if any(len(vec) != n for vec in (u, v, w)):
        raise ValueError(f"coefficient vectors must have length {n}")
    zero = Poly.zero()
    m1 = psi.augment(u)
    m2 = m1.augment(tuple(-c for c in v) + (zero, zero))
    return m2.augment(w + (zero, zero, zero, zero))


def random_graded_alternating(
    twists: Sequence[int],
    rng: random.Random,
    names: Sequence[str] = ("x1", "x2", "x3"),
    coeff_bound: int = 4,
) -> AlternatingMatrix:
    """Random homogeneous alternating matrix for the given row twists.

    Entry (i, j) gets a random form of degree theta - t_i - t_j where
    theta = 2 * sum(twists) / (size - 1); slots of negative degree are
    zero.  Coefficients avoid 0 so the matrix stays generic.
    """
    twists = tuple(int(t) for t in twists)
    size = len(twists)
    if size < 2:
        raise ValueError("need at least two rows")
    total = 2 * sum(twists)
    if total % (size - 1):
        raise ValueError("twists do not admit an integral matrix degree")
    theta = total // (size - 1)
    names = tuple(names)
    upper: dict[tuple[int, int], Poly] = {}
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            d = theta - twists[i - 1] - twists[j - 1]
            if d < 0:
                continue
            acc = Poly.zero(names)
            for mono in monomials(names, d):
                c = rng.randint(1, coeff_bound) * rng.choice((1, -1))
                acc = acc + c * mono
            upper[(i, j)] = acc
    return AlternatingMatrix.from_upper(size, upper)
