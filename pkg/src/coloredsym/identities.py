"""Exhaustive verification of the classical and colored identities.

Every verifier sweeps a configurable (n, r) range, checks each case with
exact integer arithmetic, and returns a :class:`VerificationReport` whose
``cases_checked`` is compared against the a-priori cardinality of the case
set, so silently skipped cases are impossible.  Failure witnesses carry the
offending input and both sides of the identity (capped at 10 per report).

The two colored ribbon verifiers share one memoized ribbon element per
colored composition, so a double pass certifies mutual consistency of the
Schur-positivity identity and the alternating h-expansion.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial

from ._backend import add_terms
from .bijections import (
    colored_class_to_tableau,
    colored_rsk,
    colored_rsk_inverse,
    colored_tableau_to_class,
    reading_word,
)
from .compositions import (
    ColoredComposition,
    Composition,
    coarsenings,
    composition_coarsenings,
    enumerate_colored_compositions,
    enumerate_compositions,
)
from .permutations import (
    colored_descent_composition,
    colored_descent_set,
    conj_inverse,
    descent_class_table,
    descent_composition,
    descent_set,
    enumerate_colored_permutations,
    enumerate_permutations,
)
from .shapes import (
    colored_zigzag_of,
    enumerate_rpartite_partitions,
    enumerate_rpartite_syt,
    enumerate_skew_shapes,
    enumerate_syt,
    hook_length_count,
    partitions,
    rpartite_descent_set,
    rpartite_shape_of,
    tableau_descent_composition,
    tableau_descent_set,
    zigzag_of,
)
from .symfun import (
    colored_F,
    colored_h,
    colored_ribbon,
    expand_in_colored_schur,
    fundamental_F,
    h_index_of_colored_comp,
    ribbon_schur_by_counting,
    schur_coeff_by_tableau_count,
    schur_poly,
)

MAX_WITNESSES = 10

SYMFUN_LEVEL_NOTE = (
    "characters are certified through their symmetric-function images only"
)


@dataclass
class VerificationReport:
    """Outcome of one exhaustive identity sweep."""

    identity: str
    max_n: int
    max_r: int | None
    cases_checked: int
    expected_cases: int
    failure_count: int
    failures: list[dict]
    wall_time: float
    breakdown: dict[str, int] = field(default_factory=dict)
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.failure_count == 0 and self.cases_checked == self.expected_cases

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "identity": self.identity,
            "max_n": self.max_n,
            "max_r": self.max_r,
            "cases_checked": self.cases_checked,
            "expected_cases": self.expected_cases,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "breakdown": self.breakdown,
            "passed": self.passed,
            "note": self.note,
        }
        if include_timing:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out

    def table(self) -> str:
        lines = [
            f"identity        : {self.identity}",
            f"range           : n <= {self.max_n}"
            + (f", r <= {self.max_r}" if self.max_r is not None else ""),
            f"cases checked   : {self.cases_checked} (expected {self.expected_cases})",
            f"failures        : {self.failure_count}",
            f"wall time       : {self.wall_time:.2f} s",
            f"verdict         : {'PASS' if self.passed else 'FAIL'}",
        ]
        if self.note:
            lines.append(f"note            : {self.note}")
        for witness in self.failures:
            lines.append(f"  witness: {witness}")
        return "\n".join(lines)


class _Builder:
    def __init__(self, identity, max_n, max_r, expected, note=""):
        self.identity = identity
        self.max_n = max_n
        self.max_r = max_r
        self.expected = expected
        self.note = note
        self.cases = 0
        self.failure_count = 0
        self.failures: list[dict] = []
        self.breakdown: dict[str, int] = {}
        self.t0 = time.perf_counter()

    def case(self, key: str) -> None:
        self.cases += 1
        self.breakdown[key] = self.breakdown.get(key, 0) + 1

    def fail(self, witness: dict) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_WITNESSES:
            self.failures.append(witness)

    def report(self) -> VerificationReport:
        return VerificationReport(
            identity=self.identity,
            max_n=self.max_n,
            max_r=self.max_r,
            cases_checked=self.cases,
            expected_cases=self.expected,
            failure_count=self.failure_count,
            failures=self.failures,
            wall_time=time.perf_counter() - self.t0,
            breakdown=self.breakdown,
            note=self.note,
        )


def _map_cases(fn, args_list, jobs: int):
    if jobs <= 1:
        return [fn(args) for args in args_list]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunk = max(1, len(args_list) // (4 * jobs))
        return list(pool.map(fn, args_list, chunksize=chunk))


def _term_diff(lhs: dict, rhs: dict, limit: int = 5) -> list[dict]:
    """First few monomials on which two term maps disagree."""
    out = []
    for key in sorted(set(lhs) | set(rhs), reverse=True):
        a, b = lhs.get(key, 0), rhs.get(key, 0)
        if a != b:
            out.append({"exponents": list(key), "lhs": a, "rhs": b})
            if len(out) == limit:
                break
    return out


def _comp_cases(max_n: int) -> int:
    return sum(2 ** (n - 1) for n in range(1, max_n + 1))


def _colored_comp_cases(max_n: int, max_r: int) -> int:
    return sum(
        r * (r + 1) ** (n - 1)
        for n in range(1, max_n + 1)
        for r in range(1, max_r + 1)
    )


def verify_reading_word_bijection(max_n: int = 6, jobs: int = 1) -> VerificationReport:
    """Reading words biject ribbon fillings with the descent class of the
    ribbon's composition, matching descents of fillings with descents of
    inverses; consequently descent sets are equidistributed over the inverse
    class and the fillings."""
    b = _Builder("reading-word", max_n, None, _comp_cases(max_n))
    for n in range(1, max_n + 1):
        classes: dict[Composition, set] = {}
        inv_des: dict[Composition, Counter] = {}
        for p in enumerate_permutations(n):
            classes.setdefault(descent_composition(p), set()).add(p.word)
            inv_des.setdefault(descent_composition(p.inverse()), Counter())[
                descent_set(p)
            ] += 1
        for a in enumerate_compositions(n):
            b.case(f"n={n}")
            tableaux = list(enumerate_syt(zigzag_of(a).shape))
            words = [reading_word(q) for q in tableaux]
            ok = (
                len({w.word for w in words}) == len(tableaux)
                and {w.word for w in words} == classes.get(a, set())
                and all(
                    tableau_descent_set(q) == descent_set(w.inverse())
                    for q, w in zip(tableaux, words)
                )
                and Counter(tableau_descent_set(q) for q in tableaux)
                == inv_des.get(a, Counter())
            )
            if not ok:
                b.fail(
                    {
                        "n": n,
                        "composition": list(a.parts),
                        "tableau_count": len(tableaux),
                        "class_size": len(classes.get(a, set())),
                    }
                )
    return b.report()


def verify_skew_schur_f_expansion(max_cells: int = 6, jobs: int = 1) -> VerificationReport:
    """A skew Schur polynomial equals the sum of fundamental quasisymmetric
    polynomials over the descent compositions of its standard fillings."""
    shape_lists = {m: enumerate_skew_shapes(m) for m in range(1, max_cells + 1)}
    expected = sum(len(v) for v in shape_lists.values())
    b = _Builder("skew-schur-f", max_cells, None, expected)
    for m, shapes in shape_lists.items():
        widths = (m,)
        for shape in shapes:
            b.case(f"cells={m}")
            lhs = schur_poly(shape, 0, widths)
            acc: dict[bytes, int] = {}
            for q in enumerate_syt(shape):
                add_terms(
                    acc, fundamental_F(tableau_descent_composition(q), 0, widths).terms, 1
                )
            if lhs.terms != acc:
                b.fail(
                    {
                        "cells": m,
                        "shape": shape.to_json(),
                        "diff": _term_diff(lhs.terms, acc),
                    }
                )
    return b.report()


def verify_ribbon_schur_positive(max_n: int = 6, jobs: int = 1) -> VerificationReport:
    """The ribbon Schur polynomial equals the generating function of the
    inverse descent class and expands Schur-positively with coefficients
    counting standard fillings by descent composition."""
    b = _Builder("ribbon-schur", max_n, None, _comp_cases(max_n))
    for n in range(1, max_n + 1):
        widths = (n,)
        inv_class: dict[Composition, Counter] = {}
        for p in enumerate_permutations(n):
            inv_class.setdefault(descent_composition(p.inverse()), Counter())[
                descent_composition(p)
            ] += 1
        for a in enumerate_compositions(n):
            b.case(f"n={n}")
            ribbon = schur_poly(zigzag_of(a).shape, 0, widths)
            acc: dict[bytes, int] = {}
            for comp, mult in inv_class.get(a, Counter()).items():
                add_terms(acc, fundamental_F(comp, 0, widths).terms, mult)
            expansion = expand_in_colored_schur(ribbon)
            ce1 = ColoredComposition(a.parts, (0,) * len(a.parts), 1)
            counted = {
                (lam,): c
                for lam in partitions(n)
                if (c := schur_coeff_by_tableau_count(ce1, (lam,)))
            }
            ok = (
                ribbon.terms == acc
                and all(c > 0 for c in expansion.coeffs.values())
                and expansion.coeffs == counted
            )
            if not ok:
                b.fail(
                    {
                        "n": n,
                        "composition": list(a.parts),
                        "expansion": expansion.to_json(),
                        "counted": {str(k): v for k, v in counted.items()},
                    }
                )
    return b.report()


def verify_ribbon_h_alternating(max_n: int = 6, jobs: int = 1) -> VerificationReport:
    """The ribbon Schur polynomial is the alternating sum of complete
    homogeneous products over the coarsenings of its composition."""
    b = _Builder(
        "ribbon-h", max_n, None, _comp_cases(max_n), note=SYMFUN_LEVEL_NOTE
    )
    for n in range(1, max_n + 1):
        widths = (n,)
        for a in enumerate_compositions(n):
            b.case(f"n={n}")
            ribbon = schur_poly(zigzag_of(a).shape, 0, widths)
            acc: dict[bytes, int] = {}
            for beta in composition_coarsenings(a):
                sign = -1 if (len(a.parts) - len(beta.parts)) % 2 else 1
                index = (tuple(sorted(beta.parts, reverse=True)),)
                add_terms(acc, colored_h(index, widths).terms, sign)
            if ribbon.terms != acc:
                b.fail(
                    {
                        "n": n,
                        "composition": list(a.parts),
                        "diff": _term_diff(ribbon.terms, acc),
                    }
                )
    return b.report()


def verify_colored_zigzag_count(
    max_n: int = 7, max_r: int = 4, jobs: int = 1
) -> VerificationReport:
    """Colored compositions inject onto colored zigzag shapes, whose number
    is r(r+1)^(n-1)."""
    b = _Builder(
        "zigzag-count", max_n, max_r, _colored_comp_cases(max_n, max_r)
    )
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            ces = enumerate_colored_compositions(n, r)
            keys = set()
            for ce in ces:
                b.case(f"n={n},r={r}")
                keys.add(colored_zigzag_of(ce).diagram_key())
            target = r * (r + 1) ** (n - 1)
            if not (len(keys) == len(ces) == target):
                b.fail(
                    {
                        "n": n,
                        "r": r,
                        "distinct_shapes": len(keys),
                        "colored_compositions": len(ces),
                        "formula": target,
                    }
                )
    return b.report()


def verify_colored_class_tableau(
    max_n: int = 5, max_r: int = 3, jobs: int = 1
) -> VerificationReport:
    """Each colored descent class bijects with the standard fillings of its
    r-partite skew shape, transporting the colored descent set of the
    conjugate-inverse; hence both sDes distributions agree."""
    b = _Builder(
        "class-tableau", max_n, max_r, _colored_comp_cases(max_n, max_r)
    )
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            table = descent_class_table(n, r)
            for ce in enumerate_colored_compositions(n, r):
                b.case(f"n={n},r={r}")
                members = table.get(ce, [])
                shape = rpartite_shape_of(colored_zigzag_of(ce), r)
                all_fillings = set(enumerate_rpartite_syt(shape))
                images = []
                ok = True
                for a in members:
                    bq = colored_class_to_tableau(a)
                    images.append(bq)
                    if bq.shape() != shape:
                        ok = False
                    if rpartite_descent_set(bq) != colored_descent_set(
                        conj_inverse(a)
                    ):
                        ok = False
                    if colored_tableau_to_class(bq, ce) != a:
                        ok = False
                if len(set(images)) != len(members) or set(images) != all_fillings:
                    ok = False
                if Counter(
                    colored_descent_set(conj_inverse(a)) for a in members
                ) != Counter(rpartite_descent_set(bq) for bq in all_fillings):
                    ok = False
                if not ok:
                    b.fail(
                        {
                            "n": n,
                            "r": r,
                            "composition": ce.to_json(),
                            "class_size": len(members),
                            "filling_count": len(all_fillings),
                        }
                    )
    return b.report()


def _conj_inverse_f_counters(
    n: int, r: int
) -> dict[ColoredComposition, Counter]:
    """For each colored composition, the multiset of colored descent
    compositions over its conjugate-inverse descent class."""
    counters: dict[ColoredComposition, Counter] = {}
    for w in enumerate_colored_permutations(n, r):
        key = colored_descent_composition(conj_inverse(w))
        counters.setdefault(key, Counter())[colored_descent_composition(w)] += 1
    return counters


def _ribbon_schur_case(args) -> dict | None:
    ce, fcounts, widths = args
    ribbon = colored_ribbon(ce, widths)
    acc: dict[bytes, int] = {}
    for comp, mult in fcounts:
        add_terms(acc, colored_F(comp, widths).terms, mult)
    if ribbon.terms != acc:
        return {
            "composition": ce.to_json(),
            "reason": "generating function differs from ribbon element",
            "diff": _term_diff(ribbon.terms, acc),
        }
    expansion = expand_in_colored_schur(ribbon)
    if any(c <= 0 for c in expansion.coeffs.values()):
        return {
            "composition": ce.to_json(),
            "reason": "negative coefficient",
            "expansion": expansion.to_json(),
        }
    counted = ribbon_schur_by_counting(ce)
    if expansion.coeffs != counted.coeffs:
        return {
            "composition": ce.to_json(),
            "reason": "tableau counts differ from peeled coefficients",
            "expansion": expansion.to_json(),
            "counted": counted.to_json(),
        }
    return None


def verify_colored_ribbon_schur(
    max_n: int = 5, max_r: int = 3, jobs: int = 1
) -> VerificationReport:
    """Three-way identity: the colored ribbon element equals the colored
    quasisymmetric generating function of the conjugate-inverse descent
    class, and its Schur expansion is nonnegative with coefficients counting
    r-partite standard fillings by colored descent composition."""
    b = _Builder(
        "colored-ribbon-schur", max_n, max_r, _colored_comp_cases(max_n, max_r)
    )
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            widths = (n,) * r
            counters = _conj_inverse_f_counters(n, r)
            args = []
            for ce in enumerate_colored_compositions(n, r):
                b.case(f"n={n},r={r}")
                fcounts = tuple(sorted(counters.get(ce, Counter()).items(), key=_ce_key))
                args.append((ce, fcounts, widths))
            for witness in _map_cases(_ribbon_schur_case, args, jobs):
                if witness is not None:
                    witness.update({"n": n, "r": r})
                    b.fail(witness)
    return b.report()


def _ce_key(item):
    ce, _ = item
    return (ce.parts, ce.colors)


def _ribbon_h_case(args) -> dict | None:
    ce, widths = args
    ribbon = colored_ribbon(ce, widths)
    acc: dict[bytes, int] = {}
    length = len(ce.parts)
    for beta in coarsenings(ce):
        sign = -1 if (length - len(beta.parts)) % 2 else 1
        add_terms(acc, colored_h(h_index_of_colored_comp(beta), widths).terms, sign)
    if ribbon.terms != acc:
        return {
            "composition": ce.to_json(),
            "reason": "alternating h-sum differs from ribbon element",
            "diff": _term_diff(ribbon.terms, acc),
        }
    return None


def verify_colored_ribbon_h(
    max_n: int = 5, max_r: int = 3, jobs: int = 1
) -> VerificationReport:
    """The colored ribbon element is the alternating sum of colored complete
    homogeneous products over the coarsenings of its colored composition."""
    b = _Builder(
        "colored-ribbon-h",
        max_n,
        max_r,
        _colored_comp_cases(max_n, max_r),
        note=SYMFUN_LEVEL_NOTE,
    )
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            widths = (n,) * r
            args = []
            for ce in enumerate_colored_compositions(n, r):
                b.case(f"n={n},r={r}")
                args.append((ce, widths))
            for witness in _map_cases(_ribbon_h_case, args, jobs):
                if witness is not None:
                    witness.update({"n": n, "r": r})
                    b.fail(witness)
    return b.report()


def verify_colored_rsk(
    max_n: int = 4, max_r: int = 3, jobs: int = 1
) -> VerificationReport:
    """The insertion correspondence is a bijection onto equal-shape pairs of
    r-partite standard fillings, the recording side carries the colored
    descent set of the word and the insertion side that of its
    conjugate-inverse; shape counting squares to the group order."""
    b = _Builder(
        "rsk",
        max_n,
        max_r,
        sum(
            factorial(n) * r**n
            for n in range(1, max_n + 1)
            for r in range(1, max_r + 1)
        ),
    )
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            seen = set()
            for w in enumerate_colored_permutations(n, r):
                b.case(f"n={n},r={r}")
                p, q = colored_rsk(w)
                ok = (
                    p.shape() == q.shape()
                    and rpartite_descent_set(q) == colored_descent_set(w)
                    and rpartite_descent_set(p)
                    == colored_descent_set(conj_inverse(w))
                    and colored_rsk_inverse(p, q) == w
                )
                if not ok:
                    b.fail({"n": n, "r": r, "word": w.to_json()})
                    continue
                seen.add((p, q))
            order = factorial(n) * r**n
            square_sum = 0
            for bll in enumerate_rpartite_partitions(n, r):
                count = _multinomial(n, tuple(sum(part) for part in bll))
                for part in bll:
                    count *= hook_length_count(part)
                square_sum += count * count
            if len(seen) != order or square_sum != order:
                b.fail(
                    {
                        "n": n,
                        "r": r,
                        "distinct_pairs": len(seen),
                        "square_sum": square_sum,
                        "group_order": order,
                    }
                )
    return b.report()


def _multinomial(n: int, sizes: tuple[int, ...]) -> int:
    out = factorial(n)
    for s in sizes:
        out //= factorial(s)
    return out


#: name -> (callable taking max_n, max_r, jobs; default range)
IDENTITY_REGISTRY = {
    "reading-word": (lambda max_n, max_r, jobs: verify_reading_word_bijection(max_n, jobs=jobs), (6, None)),
    "skew-schur-f": (lambda max_n, max_r, jobs: verify_skew_schur_f_expansion(max_n, jobs=jobs), (6, None)),
    "ribbon-schur": (lambda max_n, max_r, jobs: verify_ribbon_schur_positive(max_n, jobs=jobs), (6, None)),
    "ribbon-h": (lambda max_n, max_r, jobs: verify_ribbon_h_alternating(max_n, jobs=jobs), (6, None)),
    "zigzag-count": (lambda max_n, max_r, jobs: verify_colored_zigzag_count(max_n, max_r, jobs=jobs), (7, 4)),
    "class-tableau": (lambda max_n, max_r, jobs: verify_colored_class_tableau(max_n, max_r, jobs=jobs), (5, 3)),
    "colored-ribbon-schur": (lambda max_n, max_r, jobs: verify_colored_ribbon_schur(max_n, max_r, jobs=jobs), (5, 3)),
    "colored-ribbon-h": (lambda max_n, max_r, jobs: verify_colored_ribbon_h(max_n, max_r, jobs=jobs), (5, 3)),
    "rsk": (lambda max_n, max_r, jobs: verify_colored_rsk(max_n, max_r, jobs=jobs), (4, 3)),
}


def run_identity(
    name: str, max_n: int | None = None, max_r: int | None = None, jobs: int = 1
) -> VerificationReport:
    """Run one registered identity at its default or overridden range."""
    if name not in IDENTITY_REGISTRY:
        raise KeyError(f"unknown identity {name!r}")
    fn, (default_n, default_r) = IDENTITY_REGISTRY[name]
    return fn(
        max_n if max_n is not None else default_n,
        max_r if max_r is not None else default_r,
        jobs,
    )
