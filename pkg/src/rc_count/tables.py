"""The five published low-degree tables, with their values kept as decimal strings."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .counts import cusp_count, tacnode_count_P2, tacnode_count_P3, triple_point_count_P2, triple_point_count_P3
from .exact import ConstraintTuple


@dataclass(frozen=True)
class Cell:
    d: int
    constraints: Tuple[int, ...]
    golden: str

    @property
    def label(self) -> str:
        return "(" + ",".join(map(str, self.constraints)) + ")"


def _planar(values):
    return tuple(Cell(d, (3 * d - 2,), v) for d, v in enumerate(values, start=1))


TABLE_TITLES = {
    1: "One-component rational triple-pointed curves in P^2 through 3d-2 points",
    2: "One-component rational tacnodal curves in P^2 through 3d-2 points",
    3: "One-component rational triple-pointed curves in P^3 through p points and q lines",
    4: "One-component rational tacnodal curves in P^3 through p points and q lines",
    5: "Rational cuspidal curves in P^4 through p points, q lines and r 2-planes",
}

GOLDEN = {
    1: _planar(["0", "0", "0", "60", "56400", "49177440", "56784765120", "91466185097280"]),
    2: _planar(["0", "0", "0", "1296", "499680", "271751040", "227509931520", "287190836432640"]),
    3: (
        Cell(4, (6, 1), "0"),
        Cell(4, (5, 3), "0"),
        Cell(4, (4, 5), "0"),
        Cell(4, (3, 7), "60"),
        Cell(4, (2, 9), "1280"),
        Cell(4, (1, 11), "19640"),
        Cell(5, (8, 1), "8"),
        Cell(5, (7, 3), "264"),
        Cell(5, (6, 5), "4360"),
        Cell(6, (10, 1), "4680"),
    ),
    4: (
        Cell(4, (6, 1), "0"),
        Cell(4, (5, 3), "0"),
        Cell(4, (4, 5), "0"),
        Cell(4, (3, 7), "1296"),
        Cell(4, (2, 9), "27648"),
        Cell(4, (1, 11), "426672"),
        Cell(5, (8, 1), "960"),
        Cell(5, (7, 3), "9792"),
        Cell(5, (6, 5), "111840"),
        Cell(6, (10, 1), "112320"),
    ),
    5: (
        Cell(3, (4, 0, 1), "0"),
        Cell(3, (3, 1, 2), "0"),
        Cell(3, (3, 0, 4), "24"),
        Cell(3, (2, 1, 5), "240"),
        Cell(4, (6, 0, 0), "0"),
        Cell(4, (5, 1, 1), "0"),
        Cell(4, (5, 0, 3), "0"),
        Cell(4, (4, 1, 4), "1680"),
        Cell(5, (7, 1, 0), "120"),
    ),
}


def compute_cell(table_id: int, cell: Cell) -> Fraction:
    if table_id == 1:
        return triple_point_count_P2(cell.d).count
    if table_id == 2:
        return tacnode_count_P2(cell.d).count
    if table_id == 3:
        return triple_point_count_P3(cell.d, *cell.constraints).count
    if table_id == 4:
        return tacnode_count_P3(cell.d, *cell.constraints).count
    if table_id == 5:
        return cusp_count(4, cell.d, ConstraintTuple.points_lines(4, *cell.constraints)).count
    raise ValueError(f"table id must be in 1..5, got {table_id}")


def compute_table(table_id: int) -> List[Tuple[Cell, Fraction]]:
    if table_id not in GOLDEN:
        raise ValueError(f"table id must be in 1..5, got {table_id}")
    return [(cell, compute_cell(table_id, cell)) for cell in GOLDEN[table_id]]


def first_mismatch(rows) -> Optional[Tuple[Cell, Fraction]]:
    for cell, value in rows:
        if str(value) != cell.golden:
            return cell, value
    return None
