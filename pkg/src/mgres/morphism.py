"""Multigraded morphisms of free modules and their coefficient data.

A morphism E -> G between free multigraded modules is stored by the
multidegrees of the fixed homogeneous bases of E and G together with the
scalar coefficient of each nonzero entry; the monomial part of every entry
is forced by homogeneity, so only the coefficients are kept.  Row and
column indices are 1-based throughout the public interface, matching the
usual display of generator tables.

The coefficient matrix C drives all linear algebra: its rank r, its column
space V inside the target coordinate space, and the r x e matrix of the
induced map onto V written in V-coordinates.  When r equals the target
rank, the V-coordinates are the duals of the target basis; otherwise they
are dual to the canonical echelon basis of the column space (for r = g the
two conventions coincide, since the echelon basis of the full space is the
standard one).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import degrees as deg
from .degrees import Multidegree
from .errors import DimensionError, HomogeneityError, ZeroColumnError
from .linalg import Matrix, Subspace, column_space_basis


@dataclass(frozen=True)
class CoeffData:
    """Scalar data attached to a morphism: C, its rank, image and V-coordinates."""

    matrix: Matrix          # g x e coefficient matrix C
    r: int                  # rank of C
    image: Subspace         # V = col(C) inside the target coordinate space
    uv: Matrix              # r x e matrix of the induced map U -> V in V-coordinates
    uses_target_dual: bool  # True when r = g and V-coordinates dualize the target basis


def coeff_data_from_matrix(c: Matrix) -> CoeffData:
    """Coefficient data of a bare scalar matrix."""
    image = column_space_basis(c)
    r = image.dim
    uv = Matrix(c.field, r, c.cols, [c.data[p] for p in image.pivots()])
    return CoeffData(c, r, image, uv, uses_target_dual=(r == c.rows))


@dataclass(frozen=True)
class MaxRankResult:
    ok: bool
    witness: Multidegree | None = None

    def __bool__(self) -> bool:
        return self.ok


class Morphism:
    """A multigraded morphism, immutable once validated."""

    def __init__(
        self,
        n: int,
        field,
        source_degrees: Sequence[Sequence[int]],
        target_degrees: Sequence[Sequence[int]],
        entries: Mapping[tuple[int, int], object],
        var_names: Sequence[str] | None = None,
    ):
        self.n = n
        self.field = field
        self.source_degrees = tuple(deg.as_degree(d, n) for d in source_degrees)
        self.target_degrees = tuple(deg.as_degree(d, n) for d in target_degrees)
        zero = field.zero
        self.entries = {
            (int(i), int(j)): v for (i, j), v in entries.items() if v != zero
        }
        self.var_names = tuple(var_names) if var_names is not None else default_var_names(n)

    @property
    def e(self) -> int:
        return len(self.source_degrees)

    @property
    def g(self) -> int:
        return len(self.target_degrees)

    def entry(self, i: int, j: int):
        """Scalar coefficient at (row i, column j), 1-based."""
        return self.entries.get((i, j), self.field.zero)

    def shift(self, i: int, j: int) -> tuple[int, ...]:
        """Forced degree shift of entry (i, j): source degree minus target degree."""
        return deg.sub(self.source_degrees[j - 1], self.target_degrees[i - 1])

    def validate(self, allow_zero_columns: bool = False) -> "Morphism":
        """Check all structural invariants; returns self.

        Raises HomogeneityError for a nonzero entry whose forced shift has a
        negative coordinate, DimensionError for out-of-range indices, and
        ZeroColumnError for an identically zero column (zero columns break
        minimal-presentation semantics, so they must be allowed explicitly).
        """
        if self.e < 1 or self.g < 1:
            raise DimensionError("a morphism needs at least one source and one target")
        if len(self.var_names) != self.n:
            raise DimensionError("variable name count does not match n")
        for (i, j) in self.entries:
            if not (1 <= i <= self.g and 1 <= j <= self.e):
                raise DimensionError(f"entry index ({i}, {j}) out of range")
            s = self.shift(i, j)
            if any(c < 0 for c in s):
                raise HomogeneityError(i, j, s)
        if not allow_zero_columns:
            used = {j for (_, j) in self.entries}
            for j in range(1, self.e + 1):
                if j not in used:
                    raise ZeroColumnError(j)
        return self

    @cached_property
    def coeff_data(self) -> CoeffData:
        """Coefficient matrix, rank, image subspace and V-coordinates."""
        c = Matrix(
            self.field,
            self.g,
            self.e,
            [[self.entry(i, j) for j in range(1, self.e + 1)] for i in range(1, self.g + 1)],
        )
        return coeff_data_from_matrix(c)

    def columns_leq(self, a: Sequence[int]) -> frozenset[int]:
        """Indices of the columns whose degree is componentwise at most a."""
        return frozenset(
            j for j, d in enumerate(self.source_degrees, start=1) if deg.leq(d, a)
        )

    def face_degree(self, face: Iterable[int]) -> Multidegree:
        """Join of the source degrees over a nonempty index set."""
        return deg.join_all(self.source_degrees[i - 1] for i in sorted(face))

    def k_space(self, face: Iterable[int]) -> Subspace:
        """Kernel of the restriction map V* -> V_I*, in V-coordinates.

        These are the functionals on V that kill the images of the columns
        indexed by the face; for the empty face this is all of V*.
        """
        cd = self.coeff_data
        idx = sorted(set(face))
        if any(not 1 <= i <= self.e for i in idx):
            raise DimensionError(f"face {idx} has indices outside 1..{self.e}")
        cols = Matrix(
            self.field,
            len(idx),
            cd.r,
            [[cd.uv.data[t][j - 1] for t in range(cd.r)] for j in idx],
        )
        return Subspace.from_rows(self.field, cd.r, cols.kernel_rows())

    def is_uniform_rank(self) -> bool:
        """Every r-element column subset of C is linearly independent."""
        cd = self.coeff_data
        rows = range(self.g)
        for cols in itertools.combinations(range(self.e), cd.r):
            if cd.matrix.submatrix(rows, cols).rank() != cd.r:
                return False
        return True

    def is_combinatorially_generic(self) -> bool:
        """Supports of pairwise degree differences swallow both supports."""
        for i in range(self.e):
            for j in range(i + 1, self.e):
                a, b = self.source_degrees[i], self.source_degrees[j]
                wanted = deg.support(a) | deg.support(b)
                if not wanted <= deg.support(deg.sub(a, b)):
                    return False
        return True

    def is_generic(self) -> bool:
        return self.is_combinatorially_generic() and self.is_uniform_rank()

    def is_maximal_rank_everywhere(self) -> MaxRankResult:
        """Check rank C_a = min(r, #columns of C_a) for every multidegree a.

        The quantifier over all of N^n reduces to the join-closure of the
        source degrees: for any a, the column set I_a is reproduced at the
        join of the degrees it contains, so only closure points can witness
        a failure.
        """
        cd = self.coeff_data
        for a in sorted(deg.join_closure(self.source_degrees)):
            cols = sorted(self.columns_leq(a))
            sub = cd.matrix.submatrix(range(self.g), [j - 1 for j in cols])
            if sub.rank() != min(cd.r, len(cols)):
                return MaxRankResult(False, a)
        return MaxRankResult(True, None)

    def __repr__(self):
        return (
            f"Morphism(n={self.n}, {self.g}x{self.e} over {self.field!r}, "
            f"sources {list(self.source_degrees)})"
        )


def default_var_names(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i}" for i in range(1, n + 1))
