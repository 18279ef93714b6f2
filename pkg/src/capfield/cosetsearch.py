"""Searches over unions of cosets of a subgroup cap and over divisor lattices.

Scaling by a unit preserves zero sums, so multiplying by g^(-i) maps
coset_i U coset_j onto G U coset_(j-i).  Whether a union of cosets is a cap
therefore depends only on its label set up to translation mod e, which lets
every search pin label 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .caps import (
    cap_arity,
    is_cap,
    is_cap_char2,
    is_complete_subgroup_reduced,
    strong_structure_char2,
    strong_structure_char3,
)
from .ffield import FieldCtx, FieldError, make_field
from .groups import SubgroupHandle, coset_family, subgroup_divisors, subgroup_of_order

SEARCH_BUDGET = 10**7
FAMILY_MAX_N = 8


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class UnionCandidate:
    subgroup: SubgroupHandle = field(repr=False)
    coset_labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(sorted(self.coset_labels))
        e = self.subgroup.index
        if len(set(labels)) != len(labels) or any(not 0 <= j < e for j in labels):
            raise FieldError(f"bad coset labels {self.coset_labels} for index {e}")
        object.__setattr__(self, "coset_labels", labels)

    @property
    def union_size(self) -> int:
        return self.subgroup.order * len(self.coset_labels)

    def elements(self):
        return coset_family(self.subgroup).union(self.coset_labels)

    def to_json(self) -> dict:
        return {"labels": list(self.coset_labels), "union_size": self.union_size}


@dataclass(frozen=True)
class ScanRow:
    q: int
    d: int
    is_cap: bool
    strong: bool
    complete: Optional[bool] = None

    def to_json(self) -> dict:
        return {"q": self.q, "d": self.d, "is_cap": self.is_cap, "strong": self.strong, "complete": self.complete}


def _require_cap(G: SubgroupHandle) -> None:
    if not is_cap(G):
        raise FieldError(f"G_{{{G.ctx.q},{G.order}}} is not a cap")


def union_is_cap(G: SubgroupHandle, labels) -> bool:
    return is_cap(coset_family(G).union(labels), G.ctx).verdict


def pair_difference_spectrum(G: SubgroupHandle) -> list[int]:
    """All t in [1, e-1] with G U g^t G a cap."""
    _require_cap(G)
    return [t for t in range(1, G.index) if union_is_cap(G, (0, t))]


def _uniform_matching(e: int, t: int) -> Optional[list[tuple[int, int]]]:
    matched = [False] * e
    pairs = []
    for j in range(e):
        if matched[j]:
            continue
        k = (j + t) % e
        if matched[k] or k == j:
            return None
        matched[j] = matched[k] = True
        pairs.append((j, k))
    return pairs


def _backtrack_matching(e: int, allowed: set[int]) -> Optional[list[tuple[int, int]]]:
    """Perfect matching on the circulant graph with differences ``allowed``."""
    matched = [False] * e
    pairs: list[tuple[int, int]] = []

    def solve() -> bool:
        try:
            j = matched.index(False)
        except ValueError:
            return True
        matched[j] = True
        for k in range(j + 1, e):
            if not matched[k] and (k - j) % e in allowed:
                matched[k] = True
                pairs.append((j, k))
                if solve():
                    return True
                pairs.pop()
                matched[k] = False
        matched[j] = False
        return False

    return pairs if solve() else None


def find_pair_partition(G: SubgroupHandle) -> Optional[list[tuple[int, int]]]:
    """Split the e coset labels into e/2 pairs whose unions are caps.

    Matchings {j, j+t} with a single difference t are tried first, then a
    general search on the cap-pair graph.  Any partition found is re-verified.
    """
    e = G.index
    if e % 2:
        raise FieldError(f"index e={e} is odd; no pair partition")
    spectrum = pair_difference_spectrum(G)
    allowed = set(spectrum) | {e - t for t in spectrum}
    pairs = None
    for t in spectrum:
        pairs = _uniform_matching(e, t)
        if pairs is not None:
            break
    if pairs is None and allowed:
        pairs = _backtrack_matching(e, allowed)
    if pairs is None:
        return None
    pairs = sorted(tuple(sorted(pr)) for pr in pairs)
    if sorted(j for pr in pairs for j in pr) != list(range(e)) or not all(union_is_cap(G, pr) for pr in pairs):
        raise AssertionError(f"pair partition failed verification: {pairs}")
    return pairs


@dataclass
class UnionSearchResult:
    r: int
    found: Optional[UnionCandidate]
    candidates_checked: int
    total_candidates: int

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "found": self.found.to_json() if self.found else None,
            "candidates_checked": self.candidates_checked,
            "total_candidates": self.total_candidates,
        }


def union_cap_search(G: SubgroupHandle, r: int, budget: int = SEARCH_BUDGET) -> UnionSearchResult:
    """Scan r-coset unions containing label 0 in lexicographic order; stop at the first cap.

    By translation invariance this covers every r-coset union.
    """
    e = G.index
    if r < 1 or r > e:
        raise FieldError(f"coset count r={r} outside [1, {e}]")
    total = comb(e - 1, r - 1)
    if total > budget:
        raise SearchBudgetExceeded(f"{total} candidate unions exceed the budget {budget}")
    checked = 0
    for rest in itertools.combinations(range(1, e), r - 1):
        labels = (0,) + rest
        checked += 1
        if union_is_cap(G, labels):
            return UnionSearchResult(r, UnionCandidate(G, labels), checked, total)
    return UnionSearchResult(r, None, checked, total)


def exists_union_cap(G: SubgroupHandle, r: int, budget: int = SEARCH_BUDGET) -> Optional[UnionCandidate]:
    return union_cap_search(G, r, budget).found


def count_union_candidates(G: SubgroupHandle, r: int) -> int:
    return comb(G.index - 1, r - 1)


def subgroup_cap_scan(ctx: FieldCtx, complete: bool = True) -> list[ScanRow]:
    """One row per divisor d of q-1: cap, strong structure and (for caps) completeness."""
    strong_check = strong_structure_char3 if ctx.p == 3 else strong_structure_char2
    if ctx.p not in (2, 3):
        raise FieldError(f"scan needs characteristic 2 or 3, got {ctx.p}")
    rows = []
    for d in subgroup_divisors(ctx):
        G = subgroup_of_order(ctx, d)
        cap = is_cap(G).verdict
        strong = cap and strong_check(G)
        comp = is_complete_subgroup_reduced(G, cap_arity(ctx)).complete if (cap and complete) else None
        rows.append(ScanRow(ctx.q, d, cap, strong, comp))
    return rows


@dataclass
class FamilyReport:
    n: int
    q: int
    d: int
    subgroup_is_cap: bool
    strong: bool
    zero_augmented_is_cap: bool
    zero_witness: Optional[tuple[int, ...]]
    zero_augmented_size: int

    @property
    def expected_zero_augmented(self) -> bool:
        return self.n % 2 == 0

    @property
    def passed(self) -> bool:
        return self.subgroup_is_cap and self.strong and self.zero_augmented_is_cap == self.expected_zero_augmented

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "d": self.d,
            "subgroup_is_cap": self.subgroup_is_cap,
            "strong": self.strong,
            "zero_augmented_is_cap": self.zero_augmented_is_cap,
            "zero_augmented_size": self.zero_augmented_size,
            "zero_witness": list(self.zero_witness) if self.zero_witness else None,
            "passed": self.passed,
        }


def general_family_check(n: int, bound: int = FAMILY_MAX_N) -> FamilyReport:
    """Check G_{2^(2n), 2^n+1} and G U {0} in F_(2^(2n))."""
    if n < 1 or n > bound:
        raise FieldError(f"n={n} outside [1, {bound}]")
    ctx = make_field(2, 2 * n)
    G = subgroup_of_order(ctx, 2**n + 1)
    cap = is_cap_char2(G).verdict
    strong = strong_structure_char2(G)
    aug = list(G.elements) + [0]
    rep = is_cap_char2(aug, ctx)
    return FamilyReport(n, ctx.q, G.order, cap, strong, rep.verdict, rep.witness, len(aug))
