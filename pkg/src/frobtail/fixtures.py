"""Reference tables, transcribed verbatim as data.

Every cell is keyed by its table coordinates ``(e, column)`` so that a typo
can be audited against the source table cell by cell.  Cells spelled the
way the source prints them: ``"8:3 9:1"`` means twist 8 with multiplicity
3 and twist 9 with multiplicity 1.
"""
from __future__ import annotations

from typing import Dict, List, Tuple

# Cubic Fermat hypersurface over F_5, J = (x^5, y^5, z^5).
# Columns: pos 0 .. pos 3 (no socle column in this table).
FERMAT_TABLE = {
    "p": 5,
    "vars": ["x", "y", "z"],
    "f": "x^3+y^3+z^3",
    "ideal": ["x^5", "y^5", "z^5"],
    "columns": ["pos 0", "pos 1", "pos 2", "pos 3"],
    "cells": {
        (0, "pos 0"): "0:1", (0, "pos 1"): "5:3", (0, "pos 2"): "8:3 9:1", (0, "pos 3"): "9:1 10:3",
        (1, "pos 0"): "0:1", (1, "pos 1"): "25:3", (1, "pos 2"): "38:3 39:1", (1, "pos 3"): "39:1 40:3",
        (2, "pos 0"): "0:1", (2, "pos 1"): "125:3", (2, "pos 2"): "188:3 189:1",
        (2, "pos 3"): "189:1 190:3",
        (3, "pos 0"): "0:1", (3, "pos 1"): "625:3", (3, "pos 2"): "938:3 939:1",
        (3, "pos 3"): "939:1 940:3",
        (4, "pos 0"): "0:1", (4, "pos 1"): "3125:3", (4, "pos 2"): "4688:3 4689:1",
        (4, "pos 3"): "4689:1 4690:3",
    },
    # alternating matrix printed for position 3, rows top to bottom
    "position3_matrix": [
        ["0", "-x^2", "-y^2", "-2z"],
        ["x^2", "0", "-z^2", "2y"],
        ["y^2", "z^2", "0", "-2x"],
        ["2z", "-2y", "2x", "0"],
    ],
    "hypotheses_hold": None,
}

_QUADRICS_IDEAL = ["x^2", "xz", "xy+z^2", "yz", "y^2"]
_QUADRICS_COLUMNS = ["socle", "pos 0", "pos 1", "pos 2", "pos 3", "pos 4"]


def _rows(rows: List[Tuple[int, str, str, str, str, str, str]]) -> Dict[Tuple[int, str], str]:
    out = {}
    for e, *cells in rows:
        for col, cell in zip(_QUADRICS_COLUMNS, cells):
            out[(e, col)] = cell
    return out


# Same cubic; I = (x^2, xz, xy+z^2, yz, y^2); characteristic 5.
QUADRICS_P5 = {
    "p": 5,
    "vars": ["x", "y", "z"],
    "f": "x^3+y^3+z^3",
    "ideal": _QUADRICS_IDEAL,
    "columns": _QUADRICS_COLUMNS,
    "cells": _rows([
        (0, "2:1", "0:1", "2:5", "3:6", "5:6", "6:6"),
        (1, "12:6", "0:1", "10:5", "13:6", "15:6", "16:6"),
        (2, "62:6", "0:1", "50:5", "63:6", "65:6", "66:6"),
        (3, "312:6", "0:1", "250:5", "313:6", "315:6", "316:6"),
        (4, "1562:6", "0:1", "1250:5", "1563:6", "1565:6", "1566:6"),
    ]),
    # exponents for which the tail hypotheses are stated to hold
    "hypotheses_hold": {1, 2, 3, 4},
}

# Same cubic and ideal; characteristic 2.
QUADRICS_P2 = {
    "p": 2,
    "vars": ["x", "y", "z"],
    "f": "x^3+y^3+z^3",
    "ideal": _QUADRICS_IDEAL,
    "columns": _QUADRICS_COLUMNS,
    "cells": _rows([
        (0, "2:1", "0:1", "2:5", "3:6", "5:6", "6:6"),
        (1, "4:7", "0:1", "4:5", "6:12", "7:12", "9:12"),
        (2, "9:12", "0:1", "8:5", "11:12", "12:12", "14:12"),
        (3, "19:12", "0:1", "16:5", "21:12", "22:12", "24:12"),
        (4, "39:12", "0:1", "32:5", "41:12", "42:12", "44:12"),
    ]),
    "hypotheses_hold": {2, 3, 4},
}

TABLES = {
    "section0": FERMAT_TABLE,
    "example44_p5": QUADRICS_P5,
    "example44_p2": QUADRICS_P2,
}

# Largest exponent each table is recomputed to without --allow-large-e.
BUDGETS = {"section0": 2, "example44_p5": 2, "example44_p2": 3}


def parse_cell(cell: str) -> Dict[int, int]:
    """``"8:3 9:1"`` -> ``{8: 3, 9: 1}``."""
    out: Dict[int, int] = {}
    for item in cell.split():
        t, m = item.split(":")
        out[int(t)] = out.get(int(t), 0) + int(m)
    return out


def exponents(table: dict) -> List[int]:
    return sorted({e for e, _ in table["cells"]})


def row(table: dict, e: int) -> Dict[str, str]:
    return {col: table["cells"][(e, col)] for col in table["columns"] if (e, col) in table["cells"]}
