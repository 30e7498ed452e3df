"""Exact multivariate polynomial arithmetic over the rationals.

Coefficients are :class:`fractions.Fraction`, so every identity in this
package holds exactly; there is no floating point anywhere.  A polynomial
is a map from exponent tuples to nonzero coefficients together with an
ordered tuple of variable names.  Terms are kept canonical (no zero
coefficients) and displayed in graded lexicographic order.

Matrices of polynomials are dense; everything here is desk scale
(at most ~12x12), so cofactor expansion with memoization is enough for
symbolic determinants and fraction-free Bareiss elimination covers the
constant case.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Scalar = Union[int, Fraction]
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class Poly:
    """Immutable multivariate polynomial with rational coefficients."""

    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: dict[tuple[int, ...], Scalar]):
        names = tuple(names)
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, coeff in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(names):
                raise ValueError(f"exponent {exp} does not match {len(names)} variables")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = Fraction(coeff)
            if c != 0:
                clean[exp] = clean.get(exp, Fraction(0)) + c
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c != 0})

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, names: Sequence[str] = ()) -> "Poly":
        return cls(names, {})

    @classmethod
    def const(cls, value: Scalar, names: Sequence[str] = ()) -> "Poly":
        names = tuple(names)
        return cls(names, {(0,) * len(names): Fraction(value)})

    @classmethod
    def variable(cls, name: str, names: Sequence[str]) -> "Poly":
        names = tuple(names)
        idx = names.index(name)
        exp = [0] * len(names)
        exp[idx] = 1
        return cls(names, {tuple(exp): Fraction(1)})

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Maximum term degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms, or None.

        None means either "not homogeneous" or "zero polynomial"; the zero
        polynomial is homogeneous of every degree (see is_homogeneous), so
        it cannot report a single value here.
        """
        degrees = {sum(exp) for exp in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self) -> bool:
        return self.is_zero or self.homogeneous_degree() is not None

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _aligned(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if self.names == other.names:
            return self, other
        if not self.names and self.is_constant:
            return Poly.const(self.constant_value(), other.names), other
        if not other.names and other.is_constant:
            return self, Poly.const(other.constant_value(), self.names)
        raise ValueError(f"variable sets differ: {self.names} vs {other.names}")

    @staticmethod
    def _coerce(value: "Poly | Scalar") -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)):
            return Poly.const(value)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exp, coeff in b.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + coeff
        return Poly(a.names, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._aligned(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                terms[exp] = terms.get(exp, Fraction(0)) + ca * cb
        return Poly(a.names, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Poly.const(1, self.names)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        try:
            a, b = self._aligned(other)
        except ValueError:
            return False
        return a.terms == b.terms

    def __hash__(self) -> int:
        if self.is_constant:
            return hash(("Poly", self.constant_value()))
        return hash(("Poly", self.names, tuple(sorted(self.terms.items()))))

    # ------------------------------------------------------------------
    # display
    # ------------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def _monomial_str(self, exp: tuple[int, ...]) -> str:
        factors = []
        for name, e in zip(self.names, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exp, coeff in self.sorted_terms():
            mono = self._monomial_str(exp)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def variables(names: str | Sequence[str]) -> tuple[Poly, ...]:
    """Create generator polynomials, e.g. ``x, y = variables("x y")``."""
    names = tuple(names.split()) if isinstance(names, str) else tuple(names)
    return tuple(Poly.variable(n, names) for n in names)


def monomials(names: Sequence[str], degree: int) -> list[Poly]:
    """All monomials of the given total degree, in graded-lex order."""
    names = tuple(names)
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, slot: int) -> None:
        if slot == len(names) - 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, slot + 1)

    if degree < 0:
        return []
    if not names:
        return [Poly.const(1)] if degree == 0 else []
    rec([], degree, 0)
    return [Poly(names, {exp: Fraction(1)}) for exp in out]


# ----------------------------------------------------------------------
# parsing
# ----------------------------------------------------------------------


def collect_names(text: str) -> set[str]:
    return set(_NAME_RE.findall(text))


def parse_poly(text: str, names: Sequence[str] | None = None) -> Poly:
    """Parse a human-readable polynomial like ``3*x1^2*x2 - x3``.

    The grammar is a signed sum of terms; each term is a '*'-separated
    product of rational constants and ``var`` or ``var^k`` factors.  If
    ``names`` is omitted the variables are the identifiers found in the
    text, sorted.
    """
    if names is None:
        names = tuple(sorted(collect_names(text)))
    names = tuple(names)
    index = {n: i for i, n in enumerate(names)}
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial text")

    # split into signed terms
    terms: dict[tuple[int, ...], Fraction] = {}
    pos = 0
    sign = 1
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        pos = 1
    while pos <= len(text):
        nxt = pos
        while nxt < len(text) and text[nxt] not in "+-":
            nxt += 1
        chunk = text[pos:nxt]
        if not chunk:
            raise ValueError(f"malformed polynomial: {text!r}")
        coeff = Fraction(sign)
        exp = [0] * len(names)
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError(f"malformed term {chunk!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
                continue
            if "^" in factor:
                base, _, power = factor.partition("^")
                k = int(power)
            else:
                base, k = factor, 1
            if base not in index:
                raise ValueError(f"unknown variable {base!r}")
            exp[index[base]] += k
        key = tuple(exp)
        terms[key] = terms.get(key, Fraction(0)) + coeff
        if nxt >= len(text):
            break
        sign = -1 if text[nxt] == "-" else 1
        pos = nxt + 1
    return Poly(names, terms)


# ----------------------------------------------------------------------
# matrices
# ----------------------------------------------------------------------


class PolyMatrix:
    """Immutable dense matrix of Poly entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Poly | Scalar]]):
        grid = tuple(
            tuple(Poly._coerce(e) for e in row) for row in entries
        )
        if grid and any(len(row) != len(grid[0]) for row in grid):
            raise ValueError("rows have inconsistent lengths")
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", len(grid[0]) if grid else 0)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def identity(cls, n: int, names: Sequence[str] = ()) -> "PolyMatrix":
        one = Poly.const(1, names)
        zero = Poly.zero(names)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int, names: Sequence[str] = ()) -> "PolyMatrix":
        zero = Poly.zero(names)
        return cls([[zero] * cols for _ in range(rows)])

    def entry(self, i: int, j: int) -> Poly:
        """0-based access."""
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self.entries[i]

    def __iter__(self) -> Iterator[tuple[Poly, ...]]:
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.entries[i][j] == other.entries[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )

    def __hash__(self):
        raise TypeError("PolyMatrix is unhashable")

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.entries for e in row)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix addition")
        return PolyMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix([[-e for e in row] for row in self.entries])

    def scale(self, factor: Poly | Scalar) -> "PolyMatrix":
        return PolyMatrix([[e * factor for e in row] for row in self.entries])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = Poly.zero()
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.is_zero or b.is_zero:
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "PolyMatrix":
        """0-based row/column selection."""
        return PolyMatrix(
            [[self.entries[i][j] for j in col_idx] for i in row_idx]
        )

    @property
    def is_constant(self) -> bool:
        return all(e.is_constant for row in self.entries for e in row)

    # -- determinants ---------------------------------------------------

    def determinant(self) -> Poly:
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        if self.rows == 0:
            return Poly.const(1)
        if self.is_constant:
            return Poly.const(self._bareiss_determinant())
        memo: dict[tuple[int, ...], Poly] = {}
        return self._cofactor_det(tuple(range(self.rows)), tuple(range(self.cols)), memo)

    def _bareiss_determinant(self) -> Fraction:
        n = self.rows
        m = [[e.constant_value() for e in row] for row in self.entries]
        sign = 1
        prev = Fraction(1)
        for k in range(n - 1):
            if m[k][k] == 0:
                for r in range(k + 1, n):
                    if m[r][k] != 0:
                        m[k], m[r] = m[r], m[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def _cofactor_det(
        self,
        rows: tuple[int, ...],
        cols: tuple[int, ...],
        memo: dict[tuple[int, ...], Poly],
    ) -> Poly:
        if not rows:
            return Poly.const(1)
        key = rows + (-1,) + cols
        cached = memo.get(key)
        if cached is not None:
            return cached
        i = rows[0]
        rest = rows[1:]
        acc = Poly.zero()
        for pos, j in enumerate(cols):
            e = self.entries[i][j]
            if e.is_zero:
                continue
            minor = self._cofactor_det(rest, cols[:pos] + cols[pos + 1 :], memo)
            term = e * minor
            acc = acc + (term if pos % 2 == 0 else -term)
        memo[key] = acc
        return acc

    def adjugate(self) -> "PolyMatrix":
        """Classical adjugate: adj(A) @ A = A @ adj(A) = det(A) * I."""
        if not self.is_square:
            raise ValueError("adjugate of a non-square matrix")
        n = self.rows
        idx = tuple(range(n))
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                rows = tuple(r for r in idx if r != j)
                cols = tuple(c for c in idx if c != i)
                minor = self.submatrix(rows, cols).determinant()
                row.append(minor if (i + j) % 2 == 0 else -minor)
            out.append(row)
        return PolyMatrix(out)

    # -- display / encoding ----------------------------------------------

    def to_lists(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.entries]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols})"


def parse_matrix(
    rows: Sequence[Sequence[str | Scalar]], names: Sequence[str] | None = None
) -> PolyMatrix:
    """Parse a grid of polynomial strings / numbers with a shared variable set."""
    if names is None:
        found: set[str] = set()
        for row in rows:
            for cell in row:
                if isinstance(cell, str):
                    found |= collect_names(cell)
        names = tuple(sorted(found))
    names = tuple(names)
    grid = []
    for row in rows:
        out = []
        for cell in row:
            if isinstance(cell, str):
                out.append(parse_poly(cell, names))
            else:
                out.append(Poly.const(cell, names))
        grid.append(out)
    return PolyMatrix(grid)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when n < k or either argument is negative."""
    if k < 0 or n < 0 or n < k:
        return 0
    return math.comb(n, k)
