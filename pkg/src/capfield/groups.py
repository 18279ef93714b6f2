"""Multiplicative subgroups G_{q,d} of F_q^x and their cosets.

Throughout, ``d`` is the subgroup order and ``e = (q-1)/d`` its index, so
the subgroup is the set of e-th powers and coset ``j`` is ``g^j * G``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ffield import FieldCtx, FieldError, divisors


@dataclass(frozen=True, eq=False)
class SubgroupHandle:
    ctx: FieldCtx
    order: int
    elements: np.ndarray = field(repr=False)  # generator-exponent order: g^(k*e)
    membership: np.ndarray = field(repr=False)  # bool mask over encodings

    @property
    def d(self) -> int:
        return self.order

    @property
    def index(self) -> int:
        return (self.ctx.q - 1) // self.order

    e = index

    def __len__(self) -> int:
        return self.order

    def __contains__(self, a: int) -> bool:
        return bool(self.membership[a])

    def sorted_elements(self) -> list[int]:
        return sorted(int(a) for a in self.elements)

    def to_json(self) -> dict:
        return {
            "q": self.ctx.q,
            "d": self.order,
            "e": self.index,
            "modulus": str(self.ctx.modulus),
            "generator": str(self.ctx.to_poly(self.ctx.generator)),
            "elements": self.sorted_elements(),
        }


def subgroup_of_order(ctx: FieldCtx, d: int) -> SubgroupHandle:
    """The unique subgroup of order ``d`` of F_q^x (``d`` must divide q-1)."""
    if d < 1 or (ctx.q - 1) % d:
        raise FieldError(f"d={d} does not divide q-1={ctx.q - 1}")
    e = (ctx.q - 1) // d
    elements = ctx.antilog[np.arange(d) * e]
    membership = np.zeros(ctx.q, dtype=bool)
    membership[elements] = True
    return SubgroupHandle(ctx, d, elements, membership)


def subgroup_divisors(ctx: FieldCtx) -> list[int]:
    return divisors(ctx.q - 1)


@dataclass(frozen=True, eq=False)
class CosetFamily:
    subgroup: SubgroupHandle
    cosets: list[np.ndarray] = field(repr=False)

    def __len__(self) -> int:
        return len(self.cosets)

    def coset(self, j: int) -> np.ndarray:
        return self.cosets[j % len(self.cosets)]

    def union(self, labels) -> np.ndarray:
        return np.concatenate([self.cosets[j] for j in labels])

    def to_json(self) -> dict:
        out = self.subgroup.to_json()
        del out["elements"]
        out["cosets"] = [sorted(int(a) for a in c) for c in self.cosets]
        return out


def coset_family(G: SubgroupHandle) -> CosetFamily:
    ctx, d, e = G.ctx, G.order, G.index
    exps = np.arange(d) * e
    return CosetFamily(G, [ctx.antilog[exps + j] for j in range(e)])


def coset_of(x: int, G: SubgroupHandle) -> int:
    """Coset label of the nonzero encoding ``x``: log(x) mod e."""
    if x == 0:
        raise FieldError("zero lies in no coset of F_q^x")
    return int(G.ctx.log[x]) % G.index
