"""Face systems and the graded complexes they generate.

A face system for a morphism of rank r assigns to each face I (a set of
column indices with at least r + 1 elements) a subspace of the divided
power D_{|I|-r-1} of the dual of the image, stored as a column matrix over
the divided basis; absent faces mean the zero space.  The system must be
closed under the boundary maps: the image of each assigned subspace under
the contraction boundary has to land in the direct sum of the subspaces
assigned to the facets.

Such a system spans a complex of free multigraded modules: position 0 is
the target, position 1 the source, and position i >= 2 collects the faces
of size r + i - 1, each generator carrying the join of its column degrees.
Every differential entry is a scalar together with the degree shift forced
by homogeneity, so only the scalar matrices are stored; the shift of entry
(row, col) is always the column generator degree minus the row generator
degree.

The system with every divided power taken in full yields the familiar
Taylor-style resolution; the Scarf system keeps only the faces with a
unique degree, plus the closed faces of shared degrees restricted to the
kernel functionals that survive.
"""

from __future__ import annotations

import itertools
from typing import Mapping, Sequence

from . import degrees as deg
from . import lattice as lat
from .degrees import Multidegree
from .errors import DimensionError, RestrictionError
from .linalg import Matrix
from .morphism import Morphism
from .multilinear import (
    divided_basis,
    divided_dim,
    divided_embed,
    removal_sign,
    splice_matrix_on,
)

Face = tuple[int, ...]


class Generator:
    """A free module generator: a multidegree plus a combinatorial label."""

    __slots__ = ("degree", "label")

    def __init__(self, degree: Sequence[int], label: str):
        self.degree = tuple(degree)
        self.label = label

    def __eq__(self, other):
        return (
            isinstance(other, Generator)
            and other.degree == self.degree
            and other.label == self.label
        )

    def __hash__(self):
        return hash((self.degree, self.label))

    def __repr__(self):
        return f"Generator({self.degree}, {self.label!r})"


class GradedComplex:
    """A finite complex of free multigraded modules with scalar matrices.

    diffs[i] maps level i+1 to level i.  Nonzero entries carry the shift
    (column degree) - (row degree), which homogeneity forces to be
    componentwise non-negative.
    """

    def __init__(self, field, n: int, levels, diffs, var_names=None):
        self.field = field
        self.n = n
        self.levels = tuple(tuple(level) for level in levels)
        self.diffs = tuple(diffs)
        self.var_names = tuple(var_names) if var_names else None
        if len(self.diffs) != max(len(self.levels) - 1, 0):
            raise DimensionError("differential count does not match level count")
        for i, d in enumerate(self.diffs):
            if d.rows != len(self.levels[i]) or d.cols != len(self.levels[i + 1]):
                raise DimensionError(f"differential {i + 1} has the wrong shape")

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def level_degrees(self, i: int) -> tuple[Multidegree, ...]:
        return tuple(g.degree for g in self.levels[i])

    def shift(self, diff_index: int, row: int, col: int) -> tuple[int, ...]:
        """Forced shift of entry (row, col) of diffs[diff_index], 0-based."""
        return deg.sub(
            self.levels[diff_index + 1][col].degree,
            self.levels[diff_index][row].degree,
        )

    def homogeneity_violation(self) -> tuple[int, int, int] | None:
        """(diff index, row, col) of the first negative-shift nonzero entry."""
        zero = self.field.zero
        for i, d in enumerate(self.diffs):
            for row in range(d.rows):
                for col in range(d.cols):
                    if d.data[row][col] != zero and any(
                        c < 0 for c in self.shift(i, row, col)
                    ):
                        return (i, row, col)
        return None

    def is_homogeneous(self) -> bool:
        return self.homogeneity_violation() is None

    def all_degrees(self) -> set[Multidegree]:
        return {g.degree for level in self.levels for g in level}

    def __eq__(self, other):
        return (
            isinstance(other, GradedComplex)
            and other.field == self.field
            and other.n == self.n
            and other.levels == self.levels
            and other.diffs == self.diffs
        )

    def __repr__(self):
        return f"GradedComplex(ranks {self.ranks()})"


class FaceSystem:
    """Divided-power subspaces indexed by faces, absent faces meaning zero."""

    def __init__(self, r: int, spaces: Mapping[Face, Matrix]):
        self.r = r
        self.spaces: dict[Face, Matrix] = {}
        for face, emb in spaces.items():
            key = tuple(sorted(face))
            if len(key) != len(set(key)):
                raise DimensionError(f"face {face} has repeated indices")
            if len(key) <= r:
                raise DimensionError(f"face {key} has at most r = {r} elements")
            if emb.cols == 0:
                continue
            self.spaces[key] = emb

    def space(self, face: Sequence[int]) -> Matrix | None:
        return self.spaces.get(tuple(sorted(face)))

    def faces_of_size(self, p: int) -> list[Face]:
        return sorted(face for face in self.spaces if len(face) == p)

    def max_face_size(self) -> int:
        return max((len(face) for face in self.spaces), default=self.r)

    def contains(self, other: "FaceSystem") -> bool:
        """Entrywise containment of the assigned subspaces."""
        if other.r != self.r:
            return False
        for face, emb in other.spaces.items():
            mine = self.spaces.get(face)
            if mine is None or mine.solve_matrix(emb) is None:
                return False
        return True


def full_system(phi: Morphism, max_columns: int = lat.MAX_ENUM_COLUMNS) -> FaceSystem:
    """Every face of size above the rank gets the whole divided power."""
    lat.ensure_enumerable(phi.e, max_columns)
    r = phi.coeff_data.r
    field = phi.field
    spaces = {}
    for p in range(r + 1, phi.e + 1):
        dim = divided_dim(r, p - r - 1)
        if dim == 0:
            continue
        ident = Matrix.identity(field, dim)
        for face in itertools.combinations(range(1, phi.e + 1), p):
            spaces[face] = ident
    return FaceSystem(r, spaces)


def scarf_system(phi: Morphism, max_columns: int = lat.MAX_ENUM_COLUMNS) -> FaceSystem:
    """Full divided powers on Scarf faces; kernel divided powers on closed faces.

    A non-Scarf face contributes only when it equals I_a for its own degree
    a; it is then assigned D_{|I|-r-1} of the functionals vanishing on the
    columns indexed by I^a, embedded into the ambient divided power.
    """
    cd = phi.coeff_data
    r = cd.r
    spaces: dict[Face, Matrix] = {}
    for face in lat.scarf_faces(phi, max_columns):
        if len(face) >= r + 1:
            spaces[face] = Matrix.identity(phi.field, divided_dim(r, len(face) - r - 1))
    lattice = lat.lcm_lattice(phi, max_columns)
    for a in lattice.nonscarf_part:
        fd = lat.face_data(phi, a)
        face = tuple(sorted(fd.i_a))
        if len(face) < r + 1:
            continue
        emb = divided_embed(phi.k_space(fd.i_upper_a), len(face) - r - 1)
        if emb.cols:
            spaces[face] = emb
    return FaceSystem(r, spaces)


def _contract_column(field, rk: int, w, ucol, dom_div, cod_index):
    """Contract a divided vector against one image column (no sign)."""
    zero = field.zero
    out = [zero] * len(cod_index)
    for wi, b in zip(w, dom_div):
        if wi == zero:
            continue
        for j in range(rk):
            if b[j] == 0 or ucol[j] == zero:
                continue
            b2 = b[:j] + (b[j] - 1,) + b[j + 1 :]
            out[cod_index[b2]] = out[cod_index[b2]] + wi * ucol[j]
    return out


def is_compatible_system(phi: Morphism, system: FaceSystem):
    """Check the closure condition; returns (ok, first offending face).

    Shapes are checked first (right divided-power degree for each face),
    then for every face of size at least r + 2 the contraction image of
    each assigned basis column must decompose over the facet subspaces.
    """
    cd = phi.coeff_data
    r = cd.r
    if system.r != r:
        raise DimensionError(f"system rank {system.r} differs from morphism rank {r}")
    field = phi.field
    zero = field.zero
    for face, emb in sorted(system.spaces.items()):
        if max(face) > phi.e or min(face) < 1:
            return False, face
        if emb.rows != divided_dim(r, len(face) - r - 1):
            return False, face
    for face, emb in sorted(system.spaces.items()):
        p = len(face)
        if p < r + 2:
            continue
        dom_div = divided_basis(r, p - r - 1)
        cod_div = divided_basis(r, p - r - 2)
        cod_index = {b: i for i, b in enumerate(cod_div)}
        for t in range(emb.cols):
            w = emb.col(t)
            for pos in range(p):
                l = face[pos]
                sub = face[:pos] + face[pos + 1 :]
                ucol = [cd.uv.data[j][l - 1] for j in range(r)]
                v = _contract_column(field, r, w, ucol, dom_div, cod_index)
                target = system.space(sub)
                if target is None:
                    if any(x != zero for x in v):
                        return False, face
                elif target.solve(v) is None:
                    return False, face
    return True, None


def build_complex(phi: Morphism, system: FaceSystem) -> GradedComplex:
    """The graded complex spanned by a face system.

    Differential entries out of a face generator are obtained by
    contracting its divided vector against each removable column (size
    r + 2 and up) or by taking signed maximal minors (size r + 1), then
    solving against the facet's stored basis columns.  An image that fails
    to decompose raises RestrictionError: the system was not closed.
    """
    cd = phi.coeff_data
    r = cd.r
    if system.r != r:
        raise DimensionError(f"system rank {system.r} differs from morphism rank {r}")
    field = phi.field
    zero = field.zero
    levels: list[list[Generator]] = [
        [Generator(d, f"g{i}") for i, d in enumerate(phi.target_degrees, start=1)],
        [Generator(d, f"e{j}") for j, d in enumerate(phi.source_degrees, start=1)],
    ]
    diffs: list[Matrix] = [cd.matrix]

    max_p = system.max_face_size()
    for p in range(r + 1, max_p + 1):
        faces = system.faces_of_size(p)
        gens: list[Generator] = []
        for face in faces:
            emb = system.spaces[face]
            degree = phi.face_degree(face)
            label_face = "{" + ",".join(map(str, face)) + "}"
            for t in range(emb.cols):
                gens.append(Generator(degree, f"e{label_face}#{t + 1}"))
        level_index = p - r + 1
        prev_gens = levels[level_index - 1]
        cols: list[list] = []
        if level_index == 2:
            splice = splice_matrix_on(cd.uv, phi.e, r)
            ext_index = {
                f: i for i, f in enumerate(itertools.combinations(range(1, phi.e + 1), r + 1))
            }
            for face in faces:
                emb = system.spaces[face]
                base = splice.col(ext_index[face])
                for t in range(emb.cols):
                    scale = emb.data[0][t]
                    cols.append([scale * x for x in base])
        else:
            dom_div = divided_basis(r, p - r - 1)
            cod_div = divided_basis(r, p - r - 2)
            cod_index = {b: i for i, b in enumerate(cod_div)}
            # offsets of each facet's generators in the previous level
            pos_in_prev: dict[Face, int] = {}
            counter = 0
            for face in system.faces_of_size(p - 1):
                pos_in_prev[face] = counter
                counter += system.spaces[face].cols
            for face in faces:
                emb = system.spaces[face]
                for t in range(emb.cols):
                    w = emb.col(t)
                    col = [zero] * len(prev_gens)
                    for pos in range(p):
                        l = face[pos]
                        sub = face[:pos] + face[pos + 1 :]
                        ucol = [cd.uv.data[j][l - 1] for j in range(r)]
                        v = _contract_column(field, r, w, ucol, dom_div, cod_index)
                        if removal_sign(pos) < 0:
                            v = [-x for x in v]
                        target = system.space(sub)
                        if target is None:
                            if any(x != zero for x in v):
                                raise RestrictionError(
                                    f"image of face {face} has a component at "
                                    f"missing facet {sub}"
                                )
                            continue
                        coords = target.solve(v)
                        if coords is None:
                            raise RestrictionError(
                                f"image of face {face} does not lie in the span "
                                f"assigned to facet {sub}"
                            )
                        offset = pos_in_prev[sub]
                        for u, x in enumerate(coords):
                            if x != zero:
                                col[offset + u] = col[offset + u] + x
                    cols.append(col)
        levels.append(gens)
        diffs.append(
            Matrix(
                field,
                len(prev_gens),
                len(gens),
                [[c[row] for c in cols] for row in range(len(prev_gens))],
            )
        )
    # drop trailing empty levels (possible when the top faces vanish)
    while len(levels) > 2 and not levels[-1]:
        levels.pop()
        diffs.pop()
    return GradedComplex(field, phi.n, levels, diffs, var_names=phi.var_names)


def taylor_complex(phi: Morphism) -> GradedComplex:
    """The complex of the full system."""
    return build_complex(phi, full_system(phi))


def scarf_complex(phi: Morphism) -> GradedComplex:
    """The complex of the Scarf system."""
    return build_complex(phi, scarf_system(phi))
