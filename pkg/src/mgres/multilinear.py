"""Divided and exterior powers, and the complexes built from them.

Bases are frozen once and for all: the divided power D_m of an
r-dimensional dual space is indexed by weak compositions of m into r parts
listed with the first exponent decreasing (so for r = 2, m = 1 the order
is v_1, v_2), and the k-th exterior power of an e-dimensional space is
indexed by k-subsets of {1, ..., e} in lexicographic order.  Mixed bases
are ordered with the exterior index as the major key.

The boundary maps pair a divided-power derivative against the exterior
contraction: the sign of removing l from a face I is (-1)^(position of l
in I, counted from 0), which is the standard comultiplication sign on the
exterior algebra.  The splice map replaces the divided derivative by
maximal minors of the coordinate matrix.  Divided powers are handled by
their characteristic-free laws (binomial coefficients, never division by
factorials), so everything works verbatim over GF(p).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError
from .linalg import Matrix, Subspace
from .morphism import CoeffData

DividedIndex = tuple[int, ...]
ExteriorIndex = tuple[int, ...]


def divided_basis(r: int, m: int) -> list[DividedIndex]:
    """Weak compositions of m into r parts, first part decreasing."""
    if r < 0 or m < 0:
        raise DimensionError("divided power parameters must be non-negative")
    if r == 0:
        return [()] if m == 0 else []
    if r == 1:
        return [(m,)]
    out = []
    for first in range(m, -1, -1):
        out.extend((first,) + rest for rest in divided_basis(r - 1, m - first))
    return out


def divided_dim(r: int, m: int) -> int:
    if r == 0:
        return 1 if m == 0 else 0
    return math.comb(m + r - 1, r - 1)


def exterior_basis(e: int, k: int) -> list[ExteriorIndex]:
    """k-subsets of {1, ..., e}, lexicographic."""
    if not 0 <= k:
        raise DimensionError("exterior power degree must be non-negative")
    return list(itertools.combinations(range(1, e + 1), k))


def removal_sign(position: int) -> int:
    """Sign of contracting away a face entry at the given 0-based position."""
    return -1 if position % 2 else 1


@dataclass(frozen=True)
class VectorComplex:
    """A finite complex of coordinate spaces; diffs[i] maps position i+1 to i."""

    dims: tuple[int, ...]
    diffs: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.diffs) != max(len(self.dims) - 1, 0):
            raise DimensionError("differential count does not match positions")
        for i, d in enumerate(self.diffs):
            if d.rows != self.dims[i] or d.cols != self.dims[i + 1]:
                raise DimensionError(
                    f"differential {i + 1} has shape {d.rows}x{d.cols}, "
                    f"expected {self.dims[i]}x{self.dims[i + 1]}"
                )

    def composes_to_zero(self) -> bool:
        return all(
            self.diffs[i].mul(self.diffs[i + 1]).is_zero()
            for i in range(len(self.diffs) - 1)
        )


def _mixed_index(faces: list[ExteriorIndex], divs: list[DividedIndex]):
    """Basis (face, divided) pairs with the face as major key, plus lookup."""
    basis = [(f, b) for f in faces for b in divs]
    return basis, {fb: i for i, fb in enumerate(basis)}


def sigma_matrix_on(uv: Matrix, e: int, m: int, k: int, i: int) -> Matrix:
    """Boundary D_{m+i} (x) Wedge^{k+i} -> D_{m+i-1} (x) Wedge^{k+i-1}.

    The coordinate matrix uv gives the pairing values: its (j, l) entry is
    the j-th dual coordinate of the image of basis vector l.
    """
    if i < 1:
        raise DimensionError("boundary index must be at least 1")
    field = uv.field
    rk = uv.rows
    dom, _ = _mixed_index(exterior_basis(e, k + i), divided_basis(rk, m + i))
    cod, cod_idx = _mixed_index(exterior_basis(e, k + i - 1), divided_basis(rk, m + i - 1))
    zero = field.zero
    out = [[zero] * len(dom) for _ in range(len(cod))]
    for col, (face, b) in enumerate(dom):
        for pos, l in enumerate(face):
            sign = removal_sign(pos)
            sub = face[:pos] + face[pos + 1 :]
            for j in range(rk):
                if b[j] == 0:
                    continue
                val = uv.data[j][l - 1]
                if val == zero:
                    continue
                b2 = b[:j] + (b[j] - 1,) + b[j + 1 :]
                row = cod_idx[(sub, b2)]
                out[row][col] = out[row][col] + (val if sign > 0 else -val)
    return Matrix(field, len(cod), len(dom), out)


def splice_matrix_on(uv: Matrix, e: int, rk: int) -> Matrix:
    """Splice Wedge^{rk+1} -> source space, entries signed maximal minors."""
    field = uv.field
    zero = field.zero
    faces = exterior_basis(e, rk + 1)
    out = [[zero] * len(faces) for _ in range(e)]
    rows = range(rk)
    for col, face in enumerate(faces):
        for pos, l in enumerate(face):
            rest = face[:pos] + face[pos + 1 :]
            minor = uv.submatrix(rows, [j - 1 for j in rest]).det()
            if minor != zero:
                out[l - 1][col] = minor if removal_sign(pos) > 0 else -minor
    return Matrix(field, e, len(faces), out)


def sigma_matrix(cd: CoeffData, m: int, k: int, i: int) -> Matrix:
    """Boundary of the divided/exterior complex for the morphism's own image."""
    return sigma_matrix_on(cd.uv, cd.uv.cols, m, k, i)


def splice_matrix(cd: CoeffData) -> Matrix:
    """Splice map with entries the signed r x r minors of the V-coordinates."""
    return splice_matrix_on(cd.uv, cd.uv.cols, cd.r)


def coordinates_on(c: Matrix, vsub: Subspace) -> Matrix:
    """Columns of c rewritten in the echelon basis of vsub.

    Requires every column of c to lie in vsub; with a reduced echelon basis
    the coordinates are read off at the pivot positions.
    """
    if not all(vsub.contains_vector(c.col(j)) for j in range(c.cols)):
        raise DimensionError("column space is not contained in the given subspace")
    return Matrix(c.field, vsub.dim, c.cols, [c.data[p] for p in vsub.pivots()])


def build_A_complex(cd: CoeffData, vsub: Subspace, m: int, k: int) -> VectorComplex:
    """The complex with position i equal to D_{m+i} (x) Wedge^{k+i}.

    vsub must contain the image of the coefficient matrix; the boundary
    maps are computed in vsub-coordinates.
    """
    if not vsub.contains(cd.image):
        raise DimensionError("vsub must contain the image of the map")
    e = cd.matrix.cols
    if k > e:
        return VectorComplex((), ())
    uv = coordinates_on(cd.matrix, vsub)
    rk = vsub.dim
    dims = tuple(
        divided_dim(rk, m + i) * math.comb(e, k + i) for i in range(e - k + 1)
    )
    diffs = tuple(sigma_matrix_on(uv, e, m, k, i) for i in range(1, e - k + 1))
    return VectorComplex(dims, diffs)


def build_B_complex(cd: CoeffData, vsub: Subspace) -> VectorComplex:
    """Splice of the divided/exterior tail onto the map itself.

    Position 0 is the target space, position 1 the source; position i >= 2
    is D_{i-2} (x) Wedge^{rk+i-1} where rk is the dimension of vsub.  The
    top position is e - rk + 1 (just the map itself when rk >= e).
    """
    if not vsub.contains(cd.image):
        raise DimensionError("vsub must contain the image of the map")
    e = cd.matrix.cols
    g = cd.matrix.rows
    rk = vsub.dim
    uv = coordinates_on(cd.matrix, vsub)
    top = max(e - rk + 1, 1)
    dims = [g, e]
    diffs = [cd.matrix]
    for i in range(2, top + 1):
        dims.append(divided_dim(rk, i - 2) * math.comb(e, rk + i - 1))
        if i == 2:
            diffs.append(splice_matrix_on(uv, e, rk))
        else:
            diffs.append(sigma_matrix_on(uv, e, 0, rk + 1, i - 2))
    return VectorComplex(tuple(dims), tuple(diffs))


def _power(x, n: int):
    out = x
    for _ in range(n - 1):
        out = out * x
    return out


def _linear_form_power(field, coeffs: Sequence, c: int) -> dict[DividedIndex, object]:
    """Divided power of a linear form: exponent tuple -> product of coefficients."""
    rk = len(coeffs)
    zero = field.zero
    if c == 0:
        return {(0,) * rk: field.one}
    out: dict[DividedIndex, object] = {}
    for d in divided_basis(rk, c):
        term = field.one
        for lam, pw in zip(coeffs, d):
            if pw == 0:
                continue
            if lam == zero:
                term = zero
                break
            term = term * _power(lam, pw)
        if term != zero:
            out[d] = term
    return out


def _divided_product(field, u: dict, v: dict) -> dict:
    """Product in the divided power algebra: binomial structure constants."""
    zero = field.zero
    out: dict[DividedIndex, object] = {}
    for d1, c1 in u.items():
        for d2, c2 in v.items():
            coef = c1 * c2
            for a, b in zip(d1, d2):
                if a and b:
                    coef = coef * field.of(math.comb(a + b, a))
            key = tuple(a + b for a, b in zip(d1, d2))
            acc = out.get(key, zero) + coef
            if acc == zero:
                out.pop(key, None)
            else:
                out[key] = acc
    return out


def divided_embed(subspace: Subspace, m: int) -> Matrix:
    """Columns expressing the basis of D_m(subspace) inside D_m(ambient).

    The basis of D_m of a t-dimensional subspace is indexed by weak
    compositions of m into t parts; each basis element is the product of
    divided powers of the echelon basis rows, expanded by the divided
    power laws.  The columns are linearly independent.
    """
    field = subspace.field
    rk = subspace.ambient_dim
    rows_idx = {b: i for i, b in enumerate(divided_basis(rk, m))}
    cols = []
    for b in divided_basis(subspace.dim, m):
        elem = {(0,) * rk: field.one}
        for coeffs, power in zip(subspace.basis.data, b):
            if power:
                elem = _divided_product(field, elem, _linear_form_power(field, coeffs, power))
        col = [field.zero] * len(rows_idx)
        for key, val in elem.items():
            col[rows_idx[key]] = val
        cols.append(col)
    return Matrix(
        field,
        len(rows_idx),
        len(cols),
        [[c[i] for c in cols] for i in range(len(rows_idx))],
    )
