"""Compositions, colored compositions and their subset encodings.

A composition of n is a sequence of positive parts summing to n.  Colors are
integers ``0..r-1`` with the natural total order, and every colored object
carries ``r`` explicitly so that mixed-r operations can be rejected.  Subsets
are kept in augmented form (n is always a member) so that the color of the
final part survives the subset encoding.

The reverse-refinement order on colored compositions merges adjacent parts of
equal color; ``refines`` implements the equivalent characterization "same
extended color vector and containment of the colored subsets".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from .errors import DimensionMismatchError, ParseError

#: Length-n vector of colors, one per position.
ColorVector = tuple[int, ...]

_TOKEN_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Composition:
    """Sequence of positive integer parts; ``n`` is their sum."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts!r}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def partial_sums(self) -> tuple[int, ...]:
        out, total = [], 0
        for p in self.parts:
            total += p
            out.append(total)
        return tuple(out)

    def to_json(self) -> dict:
        return {"n": self.n, "parts": list(self.parts)}


@dataclass(frozen=True)
class AugmentedSubset:
    """Strictly increasing subset of [n] that always contains n."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(e) for e in self.elements))
        if self.n < 1:
            raise ValueError("n must be positive")
        elems = self.elements
        if not elems or elems[-1] != self.n:
            raise ValueError(f"augmented subset must contain n={self.n}: {elems!r}")
        if any(e < 1 for e in elems) or any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError(f"elements must be strictly increasing in [n]: {elems!r}")


@dataclass(frozen=True)
class ColoredComposition:
    """Composition with a color in ``0..r-1`` attached to each part."""

    parts: tuple[int, ...]
    colors: tuple[int, ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        Composition(self.parts)
        if len(self.parts) != len(self.colors):
            raise ValueError("parts and colors must have equal length")
        if self.r < 1 or any(not 0 <= c < self.r for c in self.colors):
            raise ValueError(f"colors must lie in 0..{self.r - 1}: {self.colors!r}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def composition(self) -> Composition:
        return Composition(self.parts)

    def extended_colors(self) -> ColorVector:
        """Color vector of length n: color of part i repeated parts[i] times."""
        out = []
        for p, c in zip(self.parts, self.colors):
            out.extend([c] * p)
        return tuple(out)

    def color_class_sizes(self) -> tuple[int, ...]:
        """Number of positions of each color, indexed by color."""
        sizes = [0] * self.r
        for p, c in zip(self.parts, self.colors):
            sizes[c] += p
        return tuple(sizes)

    def text(self) -> str:
        return ",".join(f"{p}^{c}" for p, c in zip(self.parts, self.colors))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "parts": list(self.parts),
            "colors": list(self.colors),
        }


@dataclass(frozen=True)
class ColoredSet:
    """Augmented subset of [n] with a color attached to each element."""

    n: int
    r: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", tuple((int(e), int(c)) for e, c in self.pairs)
        )
        AugmentedSubset(self.n, tuple(e for e, _ in self.pairs))
        if self.r < 1 or any(not 0 <= c < self.r for _, c in self.pairs):
            raise ValueError(f"colors must lie in 0..{self.r - 1}: {self.pairs!r}")

    def elements(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.pairs)

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "pairs": [list(p) for p in self.pairs]}


@dataclass(frozen=True)
class RainbowDecomposition:
    """Maximal monochromatic blocks of a colored composition.

    Adjacent blocks carry distinct colors and concatenating the blocks
    restores the original colored composition.
    """

    blocks: tuple[tuple[Composition, int], ...]

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("rainbow decomposition must be nonempty")
        colors = [c for _, c in self.blocks]
        if any(a == b for a, b in zip(colors, colors[1:])):
            raise ValueError("adjacent block colors must differ")

    def colored_composition(self, r: int) -> ColoredComposition:
        parts, colors = [], []
        for comp, color in self.blocks:
            parts.extend(comp.parts)
            colors.extend([color] * len(comp.parts))
        return ColoredComposition(tuple(parts), tuple(colors), r)


def comp_to_augmented_set(a: Composition) -> AugmentedSubset:
    """Partial sums of the parts, as an augmented subset of [n]."""
    return AugmentedSubset(a.n, a.partial_sums())


def augmented_set_to_comp(s: AugmentedSubset) -> Composition:
    """Consecutive differences; mutually inverse with ``comp_to_augmented_set``."""
    prev, parts = 0, []
    for e in s.elements:
        parts.append(e - prev)
        prev = e
    return Composition(tuple(parts))


def colored_comp_to_colored_set(ce: ColoredComposition) -> ColoredSet:
    """Partial sum r_i carries the color of part i."""
    return ColoredSet(
        ce.n,
        ce.r,
        tuple(zip(comp_to_augmented_set(ce.composition()).elements, ce.colors)),
    )


def colored_set_to_colored_comp(cs: ColoredSet) -> ColoredComposition:
    """Inverse of ``colored_comp_to_colored_set``."""
    comp = augmented_set_to_comp(AugmentedSubset(cs.n, cs.elements()))
    return ColoredComposition(comp.parts, tuple(c for _, c in cs.pairs), cs.r)


def extend_color_vector(ce: ColoredComposition) -> ColorVector:
    return ce.extended_colors()


def extend_set_color_vector(cs: ColoredSet) -> ColorVector:
    """Positions j with s_{i-1} < j <= s_i all get the color of s_i."""
    out, prev = [], 0
    for e, c in cs.pairs:
        out.extend([c] * (e - prev))
        prev = e
    return tuple(out)


def refines(fine: ColoredComposition, coarse: ColoredComposition) -> bool:
    """True when ``coarse`` arises from ``fine`` by merging adjacent
    equal-colored parts, i.e. coarse lies below fine in reverse refinement."""
    if (fine.n, fine.r) != (coarse.n, coarse.r):
        raise DimensionMismatchError(
            f"cannot compare (n={fine.n}, r={fine.r}) with (n={coarse.n}, r={coarse.r})"
        )
    if fine.extended_colors() != coarse.extended_colors():
        return False
    fine_pairs = set(colored_comp_to_colored_set(fine).pairs)
    return all(p in fine_pairs for p in colored_comp_to_colored_set(coarse).pairs)


def rainbow_decomposition(ce: ColoredComposition) -> RainbowDecomposition:
    """Split into maximal runs of parts with constant color."""
    blocks: list[tuple[Composition, int]] = []
    run: list[int] = []
    run_color = ce.colors[0]
    for p, c in zip(ce.parts, ce.colors):
        if c != run_color:
            blocks.append((Composition(tuple(run)), run_color))
            run, run_color = [], c
        run.append(p)
    blocks.append((Composition(tuple(run)), run_color))
    return RainbowDecomposition(tuple(blocks))


def enumerate_compositions(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n in lexicographic part order."""
    if n < 1:
        raise ValueError("n must be positive")
    out: list[Composition] = []

    def rec(remaining: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Composition(tuple(prefix)))
            return
        for p in range(1, remaining + 1):
            prefix.append(p)
            rec(remaining - p, prefix)
            prefix.pop()

    rec(n, [])
    return out


def enumerate_colored_compositions(n: int, r: int) -> list[ColoredComposition]:
    """All r(r+1)^(n-1) colored compositions of n, ordered lexicographically
    by (extended color vector, part sequence)."""
    if r < 1:
        raise ValueError("r must be positive")
    items = [
        ColoredComposition(comp.parts, colors, r)
        for comp in enumerate_compositions(n)
        for colors in product(range(r), repeat=len(comp.parts))
    ]
    items.sort(key=lambda ce: (ce.extended_colors(), ce.parts))
    return items


def composition_coarsenings(a: Composition) -> list[Composition]:
    """All compositions below ``a`` in reverse refinement (adjacent merges),
    including ``a`` itself."""
    k = len(a.parts)
    out = []
    for mask in range(1 << (k - 1)):
        parts, acc = [], a.parts[0]
        for i in range(1, k):
            if mask >> (i - 1) & 1:
                parts.append(acc)
                acc = a.parts[i]
            else:
                acc += a.parts[i]
        parts.append(acc)
        out.append(Composition(tuple(parts)))
    return out


def coarsenings(ce: ColoredComposition) -> list[ColoredComposition]:
    """All colored compositions below ``ce`` in reverse refinement.

    Merges happen independently inside each rainbow block, so the result is
    the product of the per-block classical coarsenings.
    """
    blocks = rainbow_decomposition(ce).blocks
    per_block = [composition_coarsenings(comp) for comp, _ in blocks]
    out = []
    for choice in product(*per_block):
        parts, colors = [], []
        for comp, (_, color) in zip(choice, blocks):
            parts.extend(comp.parts)
            colors.extend([color] * len(comp.parts))
        out.append(ColoredComposition(tuple(parts), tuple(colors), ce.r))
    return out


def coarsening_covers(ce: ColoredComposition) -> list[ColoredComposition]:
    """Elements covered by ``ce``: one adjacent equal-colored pair merged."""
    out = []
    for i in range(len(ce.parts) - 1):
        if ce.colors[i] == ce.colors[i + 1]:
            parts = (
                ce.parts[:i] + (ce.parts[i] + ce.parts[i + 1],) + ce.parts[i + 2 :]
            )
            colors = ce.colors[:i] + ce.colors[i + 1 :]
            out.append(ColoredComposition(parts, colors, ce.r))
    return out


def _parse_tokens(text: str) -> list[tuple[int, int]]:
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ParseError("empty input")
    pairs = []
    for token in compact.split(","):
        m = _TOKEN_RE.match(token)
        if m is None:
            raise ParseError(f"cannot parse token {token!r}")
        value = int(m.group(1))
        color = int(m.group(2)) if m.group(2) is not None else 0
        pairs.append((value, color))
    return pairs


def parse_colored_composition(text: str, r: int | None = None) -> ColoredComposition:
    """Parse the caret form ``"2^0,2^1,1^1"`` (color defaults to 0).

    When ``r`` is omitted it is taken as one more than the largest color.
    """
    pairs = _parse_tokens(text)
    parts = tuple(v for v, _ in pairs)
    colors = tuple(c for _, c in pairs)
    if r is None:
        r = max(colors) + 1
    try:
        return ColoredComposition(parts, colors, r)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
