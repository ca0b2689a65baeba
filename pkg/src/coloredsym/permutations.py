"""The symmetric group and the r-colored permutation group.

A colored permutation is a pair (word, colors): a permutation of [n] in
one-line notation plus a color in ``0..r-1`` per position.  The group law is
the wreath-product rule ``(pi, z) * (tau, w) = (pi tau, w + tau(z))`` with
``(pi tau)(i) = pi(tau(i))``, ``tau(z) = (z_{tau_1}, ..., z_{tau_n})`` and
coordinatewise addition mod r.

Descent statistics:

* ``colored_descent_set`` records the ending positions of maximal increasing
  runs of constant color, together with their colors (n always included).
* ``steingrimsson_descent_set`` is the variant on [n] with color drops
  counted everywhere and position n present exactly when its color is > 0.

Descent classes are computed by filtering a full enumeration of the group,
bounded at n <= 8 by default (correctness over cleverness at desk scale).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations
from itertools import product

from .compositions import (
    ColoredComposition,
    ColoredSet,
    Composition,
    _parse_tokens,
    colored_set_to_colored_comp,
)
from .errors import DimensionMismatchError, ParseError, ResourceLimitError

#: Full-enumeration bound for descent-class filtering.
MAX_FILTER_N = 8


@dataclass(frozen=True)
class Permutation:
    """Permutation of [n] in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(x) for x in self.word))
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise ValueError(f"not a permutation of [n]: {self.word!r}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class ColoredPermutation:
    """Element (word, colors) of the r-colored permutation group."""

    perm: Permutation
    colors: tuple[int, ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if len(self.colors) != self.perm.n:
            raise ValueError("colors must have length n")
        if self.r < 1 or any(not 0 <= c < self.r for c in self.colors):
            raise ValueError(f"colors must lie in 0..{self.r - 1}: {self.colors!r}")

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def word(self) -> tuple[int, ...]:
        return self.perm.word

    def text(self) -> str:
        return ",".join(f"{v}^{c}" for v, c in zip(self.word, self.colors))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "word": list(self.word),
            "colors": list(self.colors),
        }


def identity_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def identity_colored(n: int, r: int) -> ColoredPermutation:
    return ColoredPermutation(identity_permutation(n), (0,) * n, r)


def _check_same_group(a: ColoredPermutation, b: ColoredPermutation) -> None:
    if (a.n, a.r) != (b.n, b.r):
        raise DimensionMismatchError(
            f"cannot combine (n={a.n}, r={a.r}) with (n={b.n}, r={b.r})"
        )


def multiply(a: ColoredPermutation, b: ColoredPermutation) -> ColoredPermutation:
    """Wreath-product law: ``(pi, z)(tau, w) = (pi tau, w + tau(z))``."""
    _check_same_group(a, b)
    pi, z = a.word, a.colors
    tau, w = b.word, b.colors
    word = tuple(pi[t - 1] for t in tau)
    colors = tuple((wi + z[t - 1]) % a.r for wi, t in zip(w, tau))
    return ColoredPermutation(Permutation(word), colors, a.r)


def inverse(a: ColoredPermutation) -> ColoredPermutation:
    """Group inverse ``(pi^-1, -pi^-1(z))``."""
    inv = a.perm.inverse()
    colors = tuple((-a.colors[v - 1]) % a.r for v in inv.word)
    return ColoredPermutation(inv, colors, a.r)


def conjugate(a: ColoredPermutation) -> ColoredPermutation:
    """Color negation ``(pi, -z)``."""
    return ColoredPermutation(a.perm, tuple((-c) % a.r for c in a.colors), a.r)


def conj_inverse(a: ColoredPermutation) -> ColoredPermutation:
    """Conjugate-inverse ``(pi^-1, pi^-1(z))``; an involution on the group."""
    inv = a.perm.inverse()
    colors = tuple(a.colors[v - 1] for v in inv.word)
    return ColoredPermutation(inv, colors, a.r)


def descent_set(p: Permutation) -> frozenset[int]:
    """Positions i in [n-1] with ``p(i) > p(i+1)``."""
    w = p.word
    return frozenset(i for i in range(1, p.n) if w[i - 1] > w[i])


def descent_composition(p: Permutation) -> Composition:
    """Lengths of the maximal increasing runs of ``p``."""
    parts, run = [], 1
    w = p.word
    for i in range(1, p.n):
        if w[i - 1] > w[i]:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return Composition(tuple(parts))


def colored_descent_set(a: ColoredPermutation) -> ColoredSet:
    """Ending positions of maximal increasing runs of constant color,
    each carrying the color of its run; n is always included."""
    w, z = a.word, a.colors
    pairs = [
        (i, z[i - 1])
        for i in range(1, a.n)
        if z[i - 1] != z[i] or w[i - 1] > w[i]
    ]
    pairs.append((a.n, z[a.n - 1]))
    return ColoredSet(a.n, a.r, tuple(pairs))


def colored_descent_composition(a: ColoredPermutation) -> ColoredComposition:
    """Run lengths of maximal increasing constant-color runs with colors."""
    return colored_set_to_colored_comp(colored_descent_set(a))


def steingrimsson_descent_set(a: ColoredPermutation) -> frozenset[int]:
    """Descents on [n]: color drops, or classical descents at equal colors,
    against the sentinel color 0 past position n."""
    w, z = a.word, a.colors
    out = set()
    for i in range(1, a.n):
        if z[i - 1] > z[i] or (z[i - 1] == z[i] and w[i - 1] > w[i]):
            out.add(i)
    if z[a.n - 1] > 0:
        out.add(a.n)
    return frozenset(out)


def enumerate_permutations(n: int):
    """All of S_n in lexicographic one-line order."""
    for word in _permutations(range(1, n + 1)):
        yield Permutation(word)


def enumerate_colored_permutations(n: int, r: int):
    """All n! * r^n colored permutations, lexicographic by (word, colors)."""
    for word in _permutations(range(1, n + 1)):
        p = Permutation(word)
        for colors in product(range(r), repeat=n):
            yield ColoredPermutation(p, colors, r)


def _check_enumeration_bound(n: int, max_n: int) -> None:
    if n > max_n:
        raise ResourceLimitError(
            f"descent classes are enumerated by filtering; n={n} exceeds bound {max_n}"
        )


def descent_class_table(
    n: int, r: int, max_n: int = MAX_FILTER_N
) -> dict[ColoredComposition, list[ColoredPermutation]]:
    """Bucket the whole group by colored descent composition in one pass."""
    _check_enumeration_bound(n, max_n)
    table: dict[ColoredComposition, list[ColoredPermutation]] = {}
    for a in enumerate_colored_permutations(n, r):
        table.setdefault(colored_descent_composition(a), []).append(a)
    return table


def descent_class(
    ce: ColoredComposition, max_n: int = MAX_FILTER_N
) -> list[ColoredPermutation]:
    """All colored permutations whose colored descent composition is ``ce``."""
    _check_enumeration_bound(ce.n, max_n)
    return [
        a
        for a in enumerate_colored_permutations(ce.n, ce.r)
        if colored_descent_composition(a) == ce
    ]


def conj_inverse_descent_class(
    ce: ColoredComposition, max_n: int = MAX_FILTER_N
) -> list[ColoredPermutation]:
    """All ``a`` with ``co(conj_inverse(a)) == ce``; since conjugate-inverse
    is an involution this is the image of ``descent_class(ce)`` under it."""
    members = [conj_inverse(a) for a in descent_class(ce, max_n=max_n)]
    members.sort(key=lambda a: (a.word, a.colors))
    return members


def parse_colored_permutation(text: str, r: int | None = None) -> ColoredPermutation:
    """Parse window notation ``"2^0,3^0,7^1,..."`` (color defaults to 0)."""
    pairs = _parse_tokens(text)
    word = tuple(v for v, _ in pairs)
    colors = tuple(c for _, c in pairs)
    if r is None:
        r = max(colors) + 1
    try:
        return ColoredPermutation(Permutation(word), colors, r)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
