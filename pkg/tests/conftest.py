from __future__ import annotations

import pytest

from fghodge.rootdatum import SimpleType, build_root_datum


def datum(text: str):
    return build_root_datum(SimpleType.parse(text))


def fw(datum_, node: int):
    """Fundamental weight omega_node (1-based Bourbaki index)."""
    return tuple(1 if i == node - 1 else 0 for i in range(datum_.rank))


ALL_TYPES_RANK8 = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(3, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)

SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "D4", "G2", "F4"]


@pytest.fixture(scope="session")
def e8():
    return datum("E8")
