"""Transport of resolutions along maps of LCM-lattices.

Two morphisms with the same number of columns are quasi-equivalent (under
a given column correspondence) when their coefficient matrices have the
same kernel: the induced surjections onto the images then agree up to a
choice of bases.  A degree map between the two lattices is compatible with
the pair when it sends each column degree to the corresponding one, and it
can transport a complex when it preserves the joins that actually occur as
generator degrees: coefficients stay untouched, the degrees of generators
above level 0 are pushed through the map, level 0 and the presentation map
are replaced by the target morphism's, and homogeneity of the recomputed
shifts is verified.
"""

from __future__ import annotations

import itertools
from typing import Mapping, Sequence

from . import degrees as deg
from .degrees import Multidegree
from .errors import (
    DimensionError,
    FormatError,
    MissingKey,
    NegativeShift,
    RankMismatch,
)
from .linalg import kernel_basis
from .morphism import Morphism
from .systems import GradedComplex, Generator


class RelabelMap:
    """A finite table of multidegrees to multidegrees; partial is fine.

    Lookups outside the table raise MissingKey; only the degrees actually
    queried need to be present.
    """

    def __init__(self, pairs):
        self.table: dict[Multidegree, Multidegree] = {}
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        for src, dst in items:
            key, val = tuple(src), tuple(dst)
            if key in self.table and self.table[key] != val:
                raise FormatError(f"duplicate key {key} with conflicting images")
            self.table[key] = val

    def apply(self, a: Sequence[int]) -> Multidegree:
        key = tuple(a)
        try:
            return self.table[key]
        except KeyError:
            raise MissingKey(key) from None

    def items(self):
        return self.table.items()

    def __len__(self):
        return len(self.table)


def _correspondence(e: int, correspondence: Sequence[int] | None) -> list[int]:
    if correspondence is None:
        return list(range(1, e + 1))
    corr = [int(c) for c in correspondence]
    if sorted(corr) != list(range(1, e + 1)):
        raise DimensionError(f"correspondence {corr} is not a permutation of 1..{e}")
    return corr


def check_quasi_equivalent(
    phi: Morphism, phi2: Morphism, correspondence: Sequence[int] | None = None
) -> bool:
    """Equal coefficient kernels under the column correspondence."""
    if phi.e != phi2.e:
        raise RankMismatch(f"source ranks differ: {phi.e} vs {phi2.e}")
    corr = _correspondence(phi.e, correspondence)
    c1 = phi.coeff_data.matrix
    c2 = phi2.coeff_data.matrix
    permuted = c2.submatrix(range(c2.rows), [corr[j] - 1 for j in range(phi.e)])
    return kernel_basis(c1) == kernel_basis(permuted)


def check_qe_compatible(
    f: RelabelMap,
    phi: Morphism,
    phi2: Morphism,
    correspondence: Sequence[int] | None = None,
) -> bool:
    """f sends each column degree of phi to the corresponding one of phi2."""
    corr = _correspondence(phi.e, correspondence)
    return all(
        f.apply(phi.source_degrees[i]) == phi2.source_degrees[corr[i] - 1]
        for i in range(phi.e)
    )


def check_join_preserving(
    f: RelabelMap,
    phi: Morphism,
    phi2: Morphism,
    min_size: int,
    correspondence: Sequence[int] | None = None,
):
    """f commutes with joins of every column subset of at least min_size.

    Returns (ok, first offending subset).
    """
    corr = _correspondence(phi.e, correspondence)
    for size in range(min_size, phi.e + 1):
        for subset in itertools.combinations(range(1, phi.e + 1), size):
            src = deg.join_all(phi.source_degrees[i - 1] for i in subset)
            dst = deg.join_all(phi2.source_degrees[corr[i - 1] - 1] for i in subset)
            if f.apply(src) != dst:
                return False, subset
    return True, None


def relabel(f: RelabelMap, x: GradedComplex, phi2: Morphism) -> GradedComplex:
    """Transport x along f onto the target morphism.

    Level 0 becomes the target's free module and the presentation entries
    are the target morphism's; degrees at levels 1 and up are mapped
    through f with coefficients unchanged.  Raises NegativeShift when a
    nonzero entry ends up with a negative recomputed shift.
    """
    if len(x.levels) < 2 or len(x.levels[1]) != phi2.e:
        raise DimensionError(
            "level 1 of the complex does not match the target morphism's source rank"
        )
    levels = [
        [Generator(d, f"g{i}") for i, d in enumerate(phi2.target_degrees, start=1)]
    ]
    for i in range(1, len(x.levels)):
        levels.append(
            [Generator(f.apply(g.degree), g.label) for g in x.levels[i]]
        )
    for j, gen in enumerate(levels[1]):
        if gen.degree != phi2.source_degrees[j]:
            raise DimensionError(
                f"f sends level-1 degree {x.levels[1][j].degree} to {gen.degree}, "
                f"but the target column {j + 1} has degree {phi2.source_degrees[j]}"
            )
    diffs = [phi2.coeff_data.matrix] + list(x.diffs[1:])
    out = GradedComplex(phi2.field, phi2.n, levels, diffs, var_names=phi2.var_names)
    bad = out.homogeneity_violation()
    if bad is not None:
        i, row, col = bad
        raise NegativeShift(i + 1, row + 1, col + 1, out.shift(i, row, col))
    return out
