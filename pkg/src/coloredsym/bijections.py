"""Structural bijections between words, descent classes and tableaux.

* ``reading_word`` / ``reading_word_inverse``: standard fillings of a ribbon
  correspond to the permutations with that run profile, by reading the cells
  from the southwestern corner towards the northeast (rows bottom to top,
  each left to right).
* ``colored_class_to_tableau`` / ``colored_tableau_to_class``: a colored
  descent class corresponds to the standard fillings of the r-partite skew
  shape built from its colored zigzag shape, block by rainbow block.
* ``colored_rsk`` / ``colored_rsk_inverse``: the wreath-product insertion
  correspondence.  Position i inserts its value into the component of color
  z_i of P by classical row bumping while Q records i in the matching new
  cell; the recording tableau keeps the color vector of the word and the
  insertion tableau keeps the color vector of its conjugate-inverse.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from itertools import chain

from .compositions import ColoredComposition, Composition, rainbow_decomposition
from .errors import DimensionMismatchError, ShapeError
from .permutations import (
    ColoredPermutation,
    Permutation,
    descent_composition,
)
from .shapes import (
    EMPTY_TABLEAU,
    RPartiteTableau,
    SkewShape,
    StandardTableau,
    colored_zigzag_of,
    rpartite_shape_of,
    tableau_direct_sum,
    zigzag_of,
)


def reading_word(q: StandardTableau) -> Permutation:
    """Word of a ribbon filling, rows bottom to top, each left to right."""
    if not q.shape.is_connected() or q.shape.contains_2x2():
        raise ShapeError("reading words are defined for zigzag shapes only")
    if q.entries() != tuple(range(1, q.ncells + 1)):
        raise ShapeError("reading words need entries exactly 1..n")
    return Permutation(tuple(chain.from_iterable(reversed(q.rows))))


def reading_word_inverse(p: Permutation, a: Composition) -> StandardTableau:
    """The unique ribbon filling of the zigzag of ``a`` whose reading word
    is ``p``; requires the run profile of ``p`` to equal ``a``."""
    if descent_composition(p) != a:
        raise ShapeError(
            f"descent composition of {p.word!r} is not {a.parts!r}"
        )
    rows_bottom_up = []
    pos = 0
    for part in a.parts:
        rows_bottom_up.append(tuple(p.word[pos : pos + part]))
        pos += part
    return StandardTableau(zigzag_of(a).shape, tuple(rows_bottom_up[::-1]))


def _window_blocks(a: ColoredPermutation) -> list[tuple[tuple[int, ...], int]]:
    """Maximal constant-color factors of the window word, with their colors."""
    blocks = []
    run: list[int] = []
    run_color = a.colors[0]
    for v, c in zip(a.word, a.colors):
        if c != run_color:
            blocks.append((tuple(run), run_color))
            run, run_color = [], c
        run.append(v)
    blocks.append((tuple(run), run_color))
    return blocks


def _block_tableau(values: tuple[int, ...]) -> StandardTableau:
    """Ribbon filling for one monochromatic factor: standardize, invert the
    reading word, then restore the original values."""
    ranks = {v: i + 1 for i, v in enumerate(sorted(values))}
    std = Permutation(tuple(ranks[v] for v in values))
    q_std = reading_word_inverse(std, descent_composition(std))
    back = {rank: v for v, rank in ranks.items()}
    return StandardTableau(
        q_std.shape, tuple(tuple(back[x] for x in row) for row in q_std.rows)
    )


def colored_class_to_tableau(a: ColoredPermutation) -> RPartiteTableau:
    """Map a colored permutation to the standard filling of the r-partite
    skew shape attached to its colored descent composition.

    Each rainbow block of the window word becomes a ribbon filling; blocks of
    equal color are direct-summed in index order (later blocks on top)."""
    components = [EMPTY_TABLEAU] * a.r
    for values, color in _window_blocks(a):
        components[color] = tableau_direct_sum(
            components[color], _block_tableau(values)
        )
    return RPartiteTableau(tuple(components))


def colored_tableau_to_class(
    bq: RPartiteTableau, ce: ColoredComposition
) -> ColoredPermutation:
    """Inverse of ``colored_class_to_tableau`` on the descent class of ``ce``.

    The rainbow decomposition of ``ce`` prescribes how each component splits
    back into ribbon summands; reading each summand recovers the block of the
    window word."""
    if bq.r != ce.r:
        raise DimensionMismatchError(f"tableau has r={bq.r}, composition r={ce.r}")
    blocks = rainbow_decomposition(ce).blocks
    expected = rpartite_shape_of(colored_zigzag_of(ce), ce.r)
    if bq.shape() != expected:
        raise ShapeError("tableau shape does not match the colored composition")
    # Component rows split top-down into the reversed block list of its color.
    cursor = {j: 0 for j in range(ce.r)}
    block_rows: list[tuple[tuple[int, ...], ...]] = [()] * len(blocks)
    for idx in reversed(range(len(blocks))):
        comp, color = blocks[idx]
        nrows = len(comp.parts)
        rows = bq.components[color].rows
        start = cursor[color]
        block_rows[idx] = rows[start : start + nrows]
        cursor[color] = start + nrows
    word: list[int] = []
    colors: list[int] = []
    for (comp, color), rows in zip(blocks, block_rows):
        word.extend(chain.from_iterable(reversed(rows)))
        colors.extend([color] * comp.n)
    return ColoredPermutation(Permutation(tuple(word)), tuple(colors), ce.r)


def _row_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Classical Schensted bumping on distinct entries; returns the new cell."""
    for r, row in enumerate(rows):
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return r, j
        x, row[j] = row[j], x
    rows.append([x])
    return len(rows) - 1, 0


def colored_rsk(
    a: ColoredPermutation,
) -> tuple[RPartiteTableau, RPartiteTableau]:
    """Insertion correspondence; returns (P, Q) of equal r-partite shape."""
    p_rows: list[list[list[int]]] = [[] for _ in range(a.r)]
    q_rows: list[list[list[int]]] = [[] for _ in range(a.r)]
    for i, (v, c) in enumerate(zip(a.word, a.colors), start=1):
        r, _ = _row_insert(p_rows[c], v)
        if r == len(q_rows[c]):
            q_rows[c].append([])
        q_rows[c][r].append(i)

    def build(rows: list[list[int]]) -> StandardTableau:
        return StandardTableau(
            SkewShape(tuple(len(row) for row in rows), ()),
            tuple(tuple(row) for row in rows),
        )

    p = RPartiteTableau(tuple(build(rows) for rows in p_rows))
    q = RPartiteTableau(tuple(build(rows) for rows in q_rows))
    return p, q


def colored_rsk_inverse(
    p: RPartiteTableau, q: RPartiteTableau
) -> ColoredPermutation:
    """Inverse of ``colored_rsk``; requires equal shapes."""
    if p.shape() != q.shape():
        raise ShapeError("insertion and recording tableaux must share a shape")
    r = p.r
    n = p.n
    work = [[list(row) for row in comp.rows] for comp in p.components]
    place: dict[int, tuple[int, int, int]] = {}
    for c, comp in enumerate(q.components):
        for rr, row in enumerate(comp.rows):
            for k, x in enumerate(row):
                place[x] = (c, rr, k)
    word = [0] * n
    colors = [0] * n
    for i in range(n, 0, -1):
        c, rr, k = place[i]
        rows = work[c]
        if k != len(rows[rr]) - 1:
            raise ShapeError(f"recording entry {i} is not at a removable cell")
        x = rows[rr].pop()
        if not rows[rr]:
            del rows[rr]
        for up in range(rr - 1, -1, -1):
            j = bisect_left(rows[up], x) - 1
            x, rows[up][j] = rows[up][j], x
        word[i - 1] = x
        colors[i - 1] = c
    return ColoredPermutation(Permutation(tuple(word)), tuple(colors), r)
