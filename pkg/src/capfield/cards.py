"""SET and EvenQuads card codes for powers of a primitive root.

SET cards are the points of F_81 = F_3[x]/(x^4-x-1): the code of g^k is the
coefficient string c1 c2 c3 c4 of g^k = c1 g^3 + c2 g^2 + c3 g + c4.
EvenQuads cards are the points of F_64 = F_2[x]/(x^6+x+1): the six bits of
g^k, high degree first, are read in pairs as base-4 digits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caps import is_cap
from .ffield import FieldCtx, FieldError, Poly, make_field
from .groups import coset_family, subgroup_of_order

SET_MODULUS = Poly((2, 2, 0, 0, 1), 3)  # x^4 - x - 1
QUADS_MODULUS = Poly((1, 1, 0, 0, 0, 0, 1), 2)  # x^6 + x + 1


@dataclass(frozen=True)
class CardCode:
    deck: str  # "set" | "quads"
    exponent: int
    digits: tuple[int, ...]

    def __str__(self) -> str:
        return "".join(map(str, self.digits))


def set_field() -> FieldCtx:
    return make_field(3, 4, SET_MODULUS)


def quads_field() -> FieldCtx:
    return make_field(2, 6, QUADS_MODULUS)


def _check_ctx(ctx: FieldCtx, modulus: Poly) -> None:
    if ctx.modulus != modulus or ctx.generator != ctx.p:
        raise FieldError(f"card codes need modulus {modulus} with generator x, got {ctx!r}")


def _set_digits(ctx: FieldCtx, a: int) -> tuple[int, ...]:
    return tuple(reversed(ctx.coefficients(a)))


def _quads_digits(ctx: FieldCtx, a: int) -> tuple[int, ...]:
    bits = list(reversed(ctx.coefficients(a)))
    return tuple(2 * bits[i] + bits[i + 1] for i in range(0, 6, 2))


def set_code(k: int, ctx: FieldCtx | None = None) -> CardCode:
    ctx = ctx or set_field()
    _check_ctx(ctx, SET_MODULUS)
    if not 0 <= k < ctx.q - 1:
        raise FieldError(f"exponent {k} outside [0, {ctx.q - 2}]")
    return CardCode("set", k, _set_digits(ctx, ctx.gpow(k)))


def quads_code(k: int, ctx: FieldCtx | None = None) -> CardCode:
    ctx = ctx or quads_field()
    _check_ctx(ctx, QUADS_MODULUS)
    if not 0 <= k < ctx.q - 1:
        raise FieldError(f"exponent {k} outside [0, {ctx.q - 2}]")
    return CardCode("quads", k, _quads_digits(ctx, ctx.gpow(k)))


def decode(code: str | CardCode, ctx: FieldCtx | None = None) -> int:
    """Field encoding of a SET (4 trits) or EvenQuads (3 base-4 digits) code."""
    s = str(code)
    if len(s) == 4:
        ctx = ctx or set_field()
        return ctx.encode([int(c) for c in reversed(s)])
    if len(s) == 3:
        ctx = ctx or quads_field()
        bits = [b for c in s for b in divmod(int(c), 2)]
        return ctx.encode(list(reversed(bits)))
    raise FieldError(f"not a card code: {s!r}")


def _verified_cosets(ctx: FieldCtx, d: int) -> list:
    fam = coset_family(subgroup_of_order(ctx, d))
    for j, c in enumerate(fam.cosets):
        rep = is_cap(c, ctx)
        if not rep:
            raise AssertionError(f"coset {j} of G_{{{ctx.q},{d}}} is not a cap: {rep.witness}")
    return fam.cosets


def set_table(ctx: FieldCtx | None = None) -> list[list[CardCode]]:
    """Four lists of 20 codes; list r holds g^(4k+r) for k = 0..19."""
    ctx = ctx or set_field()
    _check_ctx(ctx, SET_MODULUS)
    _verified_cosets(ctx, 20)
    return [[set_code(4 * k + r, ctx) for k in range(20)] for r in range(4)]


def quads_table(ctx: FieldCtx | None = None) -> list[list[CardCode]]:
    """Seven lists of 9 codes; list j holds g^(7m+j) for m = 0..8."""
    ctx = ctx or quads_field()
    _check_ctx(ctx, QUADS_MODULUS)
    _verified_cosets(ctx, 9)
    return [[quads_code(7 * m + j, ctx) for m in range(9)] for j in range(7)]


def leftover_code(deck: str) -> str:
    """Code of the zero element, the one card outside every coset."""
    if deck == "set":
        return "".join(map(str, _set_digits(set_field(), 0)))
    if deck == "quads":
        return "".join(map(str, _quads_digits(quads_field(), 0)))
    raise FieldError(f"unknown deck {deck!r}")


def _row(codes) -> str:
    return " ".join(str(c) for c in codes)


def emit_set_table(ctx: FieldCtx | None = None) -> str:
    blocks = set_table(ctx)
    width = len(_row(blocks[0][:5]))
    lines = []
    for left, right in ((0, 1), (2, 3)):
        head = f"g^(4k+{left})" if left else "g^(4k)"
        lines.append(f"{head:<{width}} || g^(4k+{right})")
        for r in range(4):
            lines.append(f"{_row(blocks[left][5 * r : 5 * r + 5])} || {_row(blocks[right][5 * r : 5 * r + 5])}")
    lines.append(f"leftover: {leftover_code('set')}")
    return "\n".join(lines) + "\n"


def emit_quads_table(ctx: FieldCtx | None = None) -> str:
    rows = quads_table(ctx)
    lines = ["j | g^(7m+j), m = 0..8"]
    lines += [f"{j} | {_row(row)}" for j, row in enumerate(rows)]
    lines.append(f"leftover: {leftover_code('quads')}")
    return "\n".join(lines) + "\n"


def table_json(deck: str) -> dict:
    if deck == "set":
        cosets = set_table()
    elif deck == "quads":
        cosets = quads_table()
    else:
        raise FieldError(f"unknown deck {deck!r}")
    return {"deck": deck, "cosets": [[str(c) for c in row] for row in cosets], "leftover": leftover_code(deck)}


def emit_table(deck: str) -> str:
    if deck == "set":
        return emit_set_table()
    if deck == "quads":
        return emit_quads_table()
    raise FieldError(f"unknown deck {deck!r}")
