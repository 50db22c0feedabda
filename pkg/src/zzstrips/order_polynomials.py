"""Strict order polynomials, their subposet-weighted extension, and the
Zhang-Zhang polynomial of a strip.

Two independent routes to the extended polynomial are kept first-class:
the definitional sum over all induced subposets and the closed formula
over linear extensions with descent/fixed-label statistics. They must
agree exactly, and the test suite holds them to that. All arithmetic is
exact integer arithmetic.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from dataclasses import dataclass
from typing import Iterable

from .dib_poset import (
    DibPoset,
    NaturalLabeling,
    build_poset,
    induced_subposets,
    natural_labeling,
)
from .errors import GuardExceeded, InvalidStripError, NonKekuleanError
from .extension_engine import descent_stats, extension_records, linear_extensions
from .strip_geometry import StripSpec, validate

DEFAULT_SUBSET_GUARD = 20
DEFAULT_MAP_GUARD = 4_000_000

SUBSET_GUARD_ENV = "ZZ_GUARD_P"


def binom(n: int, k: int) -> int:
    """C(n, k), zero whenever k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def subset_guard() -> int:
    return int(os.environ.get(SUBSET_GUARD_ENV, DEFAULT_SUBSET_GUARD))


@dataclass(frozen=True)
class ZzPolynomial:
    """Exact integer polynomial in x, coefficients stored ascending.

    The empty tuple is the zero polynomial; otherwise the trailing
    coefficient is nonzero.
    """

    coeffs: tuple[int, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "ZzPolynomial":
        values = list(coeffs)
        while values and values[-1] == 0:
            values.pop()
        return cls(tuple(values))

    @classmethod
    def zero(cls) -> "ZzPolynomial":
        return cls(())

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def clar_number(self) -> int:
        return self.degree

    @property
    def kekule_count(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def evaluate(self, x: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = "x" if k == 1 else f"x^{k}"
                terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms)

    def to_latex(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = "x" if k == 1 else f"x^{{{k}}}"
                terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms)

    def to_json(self) -> str:
        return json.dumps({"coeffs": list(self.coeffs)})

    @classmethod
    def from_json(cls, text: str) -> "ZzPolynomial":
        return cls.from_coeffs(json.loads(text)["coeffs"])


def strict_order_poly(poset: DibPoset, n: int) -> int:
    """Number of strictly order-preserving maps into {1, .., n}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    labeling = natural_labeling(poset)
    total = 0
    for word in linear_extensions(poset, labeling):
        _, des = descent_stats(word)
        total += binom(n + des, poset.p)
    return total


def brute_force_strict_maps(
    poset: DibPoset, n: int, max_assignments: int = DEFAULT_MAP_GUARD
) -> list[dict]:
    """Exhaustively enumerate the strictly order-preserving maps.

    Independent of the extension machinery on purpose: this is the
    oracle side of the strict_order_poly cross-check.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n ** poset.p > max_assignments:
        raise GuardExceeded(
            f"{n}^{poset.p} assignments exceed the brute-force guard {max_assignments}"
        )
    elements = poset.elements
    pairs = [
        (i, jdx)
        for i, a in enumerate(elements)
        for jdx, b in enumerate(elements)
        if poset.less(a, b)
    ]
    maps = []
    for values in itertools.product(range(1, n + 1), repeat=poset.p):
        if all(values[i] < values[j] for i, j in pairs):
            maps.append(dict(zip(elements, values)))
    return maps


def extended_poly_subposet_sum(
    poset: DibPoset, n: int, max_p: int | None = None
) -> tuple[int, ...]:
    """E(n, z) by its definition: sum of strict order polynomials over
    all induced subposets, weighted by z^|subposet|."""
    limit = subset_guard() if max_p is None else max_p
    if poset.p > limit:
        raise GuardExceeded(f"poset size {poset.p} exceeds subset guard {limit}")
    coeffs = [0] * (poset.p + 1)
    for sub in induced_subposets(poset):
        coeffs[sub.p] += strict_order_poly(sub, n)
    return tuple(coeffs)


def extended_poly_extension_formula(
    poset: DibPoset, labeling: NaturalLabeling, n: int
) -> tuple[int, ...]:
    """E(n, z) from the linear extensions of the full poset."""
    p = poset.p
    coeffs = [0] * (p + 1)
    for rec in extension_records(poset, labeling):
        for k in range(p + 1):
            coeffs[k] += binom(p - rec.fix, k - rec.fix) * binom(n + rec.des, k)
    return tuple(coeffs)


def _substitute_one_plus_x(zcoeffs: tuple[int, ...]) -> ZzPolynomial:
    # z^k expands to sum_i C(k, i) x^i
    out = [0] * len(zcoeffs)
    for k, c in enumerate(zcoeffs):
        if c == 0:
            continue
        for i in range(k + 1):
            out[i] += c * math.comb(k, i)
    return ZzPolynomial.from_coeffs(out)


def _require_valid(spec: StripSpec):
    report = validate(spec)
    if not report.is_valid:
        raise InvalidStripError("; ".join(report.problems))
    return report


def _require_kekulean(spec: StripSpec):
    report = _require_valid(spec)
    if not report.is_kekulean:
        raise NonKekuleanError("; ".join(p for p in report.problems if "Kekulean" in p))
    return report


def zz_polynomial(spec: StripSpec) -> ZzPolynomial:
    """Zhang-Zhang polynomial of the strip, via the DIB poset.

    Non-Kekulean strips have no Kekule structure at all, hence the zero
    polynomial.
    """
    report = _require_valid(spec)
    if not report.is_kekulean:
        return ZzPolynomial.zero()
    poset = build_poset(spec)
    labeling = natural_labeling(poset)
    zcoeffs = extended_poly_extension_formula(poset, labeling, spec.n)
    return _substitute_one_plus_x(zcoeffs)


def a_coefficients(spec: StripSpec, max_p: int | None = None) -> tuple[int, ...]:
    """a(k) = number of Kekule structures with exactly k proper sextets,
    computed as the subposet sums of strict order polynomials."""
    _require_kekulean(spec)
    poset = build_poset(spec)
    return extended_poly_subposet_sum(poset, spec.n, max_p=max_p)


@dataclass(frozen=True)
class ClosedForm:
    """Binomial closed form of the ZZ polynomial, with n left symbolic.

    Linear extensions are grouped by their (descent count, fixed count)
    pair; each group contributes
    mult * C(p - fix, k - fix) * C(n + des, k) * (1 + x)^k.
    """

    p: int
    groups: tuple[tuple[int, int, int], ...]  # (des, fix, multiplicity)

    @property
    def extension_count(self) -> int:
        return sum(mult for _, _, mult in self.groups)

    def evaluate(self, n: int) -> ZzPolynomial:
        zcoeffs = [0] * (self.p + 1)
        for des, fix, mult in self.groups:
            for k in range(self.p + 1):
                zcoeffs[k] += mult * binom(self.p - fix, k - fix) * binom(n + des, k)
        return _substitute_one_plus_x(tuple(zcoeffs))

    def _term_pieces(self, des: int, fix: int, mult: int, latex: bool) -> str:
        def c(top: str, bottom: str) -> str:
            if latex:
                return rf"\binom{{{top}}}{{{bottom}}}"
            return f"C({top},{bottom})"

        upper = str(self.p - fix)
        lower = "k" if fix == 0 else f"k-{fix}"
        shift = "n" if des == 0 else f"n+{des}"
        piece = f"{c(upper, lower)}{c(shift, 'k')}"
        if mult != 1:
            piece = f"{mult}{piece}"
        return piece

    def as_text(self) -> str:
        if self.p == 0:
            return "1"
        body = " + ".join(self._term_pieces(d, f, m, latex=False) for d, f, m in self.groups)
        return f"sum_{{k=0..{self.p}}} [ {body} ] (1+x)^k"

    def as_latex(self) -> str:
        if self.p == 0:
            return "1"
        body = " + ".join(self._term_pieces(d, f, m, latex=True) for d, f, m in self.groups)
        return rf"\sum_{{k=0}}^{{{self.p}}} \left[ {body} \right] (1+x)^{{k}}"

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "groups": [{"des": d, "fix": f, "mult": m} for d, f, m in self.groups],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ClosedForm":
        data = json.loads(text)
        return cls(
            int(data["p"]),
            tuple((int(g["des"]), int(g["fix"]), int(g["mult"])) for g in data["groups"]),
        )


def closed_form(spec: StripSpec) -> ClosedForm:
    """Group the linear extensions by (des, fix) into the symbolic form."""
    _require_kekulean(spec)
    poset = build_poset(spec)
    labeling = natural_labeling(poset)
    counts: dict[tuple[int, int], int] = {}
    for rec in extension_records(poset, labeling):
        key = (rec.des, rec.fix)
        counts[key] = counts.get(key, 0) + 1
    groups = tuple((d, f, counts[(d, f)]) for d, f in sorted(counts))
    return ClosedForm(poset.p, groups)
