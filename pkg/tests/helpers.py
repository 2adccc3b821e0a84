"""Shared fixtures: worked examples, random samplers, independent oracles.

The random samplers below are deliberately crude: they draw degree layouts
and coefficient fills from small ranges, mixing healthy instances with
engineered degenerate ones (zero columns, cloned columns), because the
property suites need both sides of every equivalence.
"""

from __future__ import annotations

import itertools
import random
from pathlib import Path

from mgres import QQ, GradedComplex, Generator, Matrix, Morphism, Subspace

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"


def xy_example() -> Morphism:
    """Four columns over k[x, y]: coefficient rows (1,1,1,1) and (1,2,3,0)."""
    entries = {}
    for j, c in enumerate([1, 1, 1, 1], start=1):
        entries[(1, j)] = QQ.of(c)
    for j, c in enumerate([1, 2, 3, 0], start=1):
        if c:
            entries[(2, j)] = QQ.of(c)
    return Morphism(
        2,
        QQ,
        [(3, 0), (2, 1), (1, 2), (0, 3)],
        [(0, 0), (1, 0)],
        entries,
        var_names=("x", "y"),
    ).validate()


def uvw_example() -> Morphism:
    """The same coefficients relabeled into k[u, v, w]."""
    entries = {}
    for j, c in enumerate([1, 1, 1, 1], start=1):
        entries[(1, j)] = QQ.of(c)
    for j, c in enumerate([1, 2, 3, 0], start=1):
        if c:
            entries[(2, j)] = QQ.of(c)
    return Morphism(
        3,
        QQ,
        [(2, 1, 0), (1, 1, 1), (2, 0, 1), (1, 0, 2)],
        [(0, 0, 0), (1, 0, 0)],
        entries,
        var_names=("u", "v", "w"),
    ).validate()


def monomial_ideal_morphism(monomials, field=QQ) -> Morphism:
    """Presentation of a quotient by a monomial ideal: one row of ones."""
    n = len(monomials[0])
    entries = {(1, j): field.one for j in range(1, len(monomials) + 1)}
    return Morphism(n, field, list(monomials), [(0,) * n], entries).validate()


def brute_minor_rank(m: Matrix) -> int:
    """Largest k with a nonvanishing k x k minor (independent rank oracle)."""
    zero = m.field.zero
    for k in range(min(m.rows, m.cols), 0, -1):
        for rows in itertools.combinations(range(m.rows), k):
            for cols in itertools.combinations(range(m.cols), k):
                if m.submatrix(rows, cols).det() != zero:
                    return k
    return 0


def classical_taylor(monomials, field=QQ) -> GradedComplex:
    """Brute-force Taylor resolution of a monomial ideal (the g = 1 oracle).

    Level i holds the i-subsets of the generators with their lcm degrees;
    the boundary drops one generator at a time with alternating signs.
    """
    e = len(monomials)
    n = len(monomials[0])
    zero, one = field.zero, field.one

    def lcm(face):
        out = (0,) * n
        for i in face:
            out = tuple(max(a, b) for a, b in zip(out, monomials[i - 1]))
        return out

    levels = [[Generator((0,) * n, "g1")]]
    faces_per_level = [[()]]
    for size in range(1, e + 1):
        faces = list(itertools.combinations(range(1, e + 1), size))
        faces_per_level.append(faces)
        levels.append(
            [Generator(lcm(f), "{" + ",".join(map(str, f)) + "}") for f in faces]
        )
    diffs = []
    for size in range(1, e + 1):
        dom = faces_per_level[size]
        cod = faces_per_level[size - 1]
        cod_index = {f: i for i, f in enumerate(cod)}
        data = [[zero] * len(dom) for _ in cod]
        for col, face in enumerate(dom):
            for pos in range(size):
                sub = face[:pos] + face[pos + 1 :]
                data[cod_index[sub]][col] = one if pos % 2 == 0 else -one
        diffs.append(Matrix(field, len(cod), len(dom), data))
    return GradedComplex(field, n, levels, diffs)


def matches_classical_taylor(x: GradedComplex, oracle: GradedComplex) -> bool:
    """Entrywise match with the textbook construction.

    The splice boundary attaches its sign to the removed column, the
    textbook boundary to the remaining face; on 2-element faces that is a
    global negation (negate every generator past the presentation), and
    the higher boundaries agree on the nose.
    """
    if x.ranks() != oracle.ranks():
        return False
    for i in range(len(x.levels)):
        if x.level_degrees(i) != oracle.level_degrees(i):
            return False
    if x.diffs[0] != oracle.diffs[0]:
        return False
    if len(x.diffs) > 1:
        negated = [[-v for v in row] for row in oracle.diffs[1].data]
        if [list(r) for r in x.diffs[1].data] != negated:
            return False
    return all(x.diffs[i] == oracle.diffs[i] for i in range(2, len(x.diffs)))


def random_morphism(rng: random.Random) -> Morphism:
    """Mixed sampler for the acyclicity equivalence suite.

    Roughly: a third dense and healthy, a third sparse and random, a third
    sabotaged (zero column or a cloned coefficient column at an
    incomparable degree).
    """
    n = rng.randint(1, 4)
    e = rng.randint(2, 6)
    g = rng.randint(1, 3)
    sources = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(e)]
    targets = [(0,) * n]
    for _ in range(g - 1):
        if rng.random() < 0.5:
            targets.append((0,) * n)
        else:
            base = rng.choice(sources)
            targets.append(tuple(rng.randint(0, c) for c in base))
    mode = rng.random()
    entries = {}
    for i, t in enumerate(targets, start=1):
        for j, s in enumerate(sources, start=1):
            if any(a < b for a, b in zip(s, t)):
                continue
            if mode < 0.35:
                c = rng.randint(1, 4)
            else:
                c = rng.choice([0, 0, 1, -1, 2, -2, 3])
            if c:
                entries[(i, j)] = QQ.of(c)
    if mode >= 0.65:
        if rng.random() < 0.5 and e >= 2:
            victim = rng.randint(1, e)
            entries = {(i, j): v for (i, j), v in entries.items() if j != victim}
        else:
            src = rng.randint(1, e)
            dst = rng.randint(1, e)
            scale = QQ.of(rng.choice([1, 2, -1]))
            entries = {(i, j): v for (i, j), v in entries.items() if j != dst}
            for i in range(1, g + 1):
                v = entries.get((i, src))
                if v is not None and all(
                    a >= b for a, b in zip(sources[dst - 1], targets[i - 1])
                ):
                    entries[(i, dst)] = v * scale
    return Morphism(n, QQ, sources, targets, entries).validate(allow_zero_columns=True)


def random_generic_minimal(rng: random.Random) -> Morphism:
    """A minimal generic morphism: incomparable degrees, clashing nowhere.

    Per coordinate the nonzero values across columns are pairwise distinct,
    which forces combinatorial genericity; the first coordinate increases
    while the second decreases, which forces pairwise incomparability.
    Dense nonzero coefficients are resampled until every r columns are
    independent.
    """
    n = rng.randint(2, 4)
    e = rng.randint(3, 6)
    g = rng.randint(1, 3)
    first = sorted(rng.sample(range(1, 4 * e), e))
    second = sorted(rng.sample(range(1, 4 * e), e), reverse=True)
    columns = [[first[i], second[i]] for i in range(e)]
    for _ in range(n - 2):
        values = rng.sample(range(1, 4 * e), e)
        for i in range(e):
            columns[i].append(values[i] if rng.random() < 0.7 else 0)
    sources = [tuple(col) for col in columns]
    targets = [(0,) * n] * g
    while True:
        entries = {
            (i, j): QQ.of(rng.choice([-3, -2, -1, 1, 2, 3, 4]))
            for i in range(1, g + 1)
            for j in range(1, e + 1)
        }
        phi = Morphism(n, QQ, sources, targets, entries).validate()
        if phi.is_uniform_rank():
            assert phi.is_combinatorially_generic()
            return phi


def random_coeff_matrix(rng: random.Random, g: int, e: int) -> Matrix:
    rows = [
        [QQ.of(rng.choice([0, 0, 1, -1, 2, -2, 3])) for _ in range(e)]
        for _ in range(g)
    ]
    return Matrix(QQ, g, e, rows)


def enlarged_subspace(rng: random.Random, base: Subspace) -> Subspace:
    """A subspace strictly between base and the full ambient space, if any."""
    if base.dim == base.ambient_dim:
        return base
    rows = [list(r) for r in base.basis.data]
    while True:
        rows.append([QQ.of(rng.randint(-2, 2)) for _ in range(base.ambient_dim)])
        bigger = Subspace.from_rows(QQ, base.ambient_dim, rows)
        if bigger.dim > base.dim:
            return bigger
