"""Values transcribed from the published tables and identity list."""

import json
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"
SET_CODES = json.loads((FIXTURES / "set_codes.json").read_text())
QUADS_CODES = json.loads((FIXTURES / "quads_codes.json").read_text())

# g^k + g^i + g^j = 0 in F_243 with modulus x^5 - x + 1, one per target g^k, k = 1..10
F243_IDENTITIES = [
    (1, 55, 154),
    (2, 154, 220),
    (3, 165, 220),
    (4, 22, 55),
    (5, 11, 22),
    (6, 176, 220),
    (7, 33, 165),
    (8, 0, 220),
    (9, 11, 176),
    (10, 0, 88),
]
