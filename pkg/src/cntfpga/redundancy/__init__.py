from ._repair import FaultyRow
from ._repair import FaultySegmentSet
from ._repair import RepairPlan
from ._repair import assign_repairs
from ._repair import evaluate_schemes
from ._repair import extract_faulty_rows
from ._repair import repair_record
from ._repair import repair_records
from ._repair import summarize_repairs
from ._schemes import SCHEMES
from ._schemes import TILE_SIZE
from ._schemes import SharingScheme
from ._schemes import TileGroup
from ._schemes import get_scheme
from ._schemes import group_tiles
from ._schemes import scheme_overhead
from ._schemes import scheme_table

__all__ = [
    "FaultyRow",
    "FaultySegmentSet",
    "RepairPlan",
    "SCHEMES",
    "SharingScheme",
    "TILE_SIZE",
    "TileGroup",
    "assign_repairs",
    "evaluate_schemes",
    "extract_faulty_rows",
    "get_scheme",
    "group_tiles",
    "repair_record",
    "repair_records",
    "scheme_overhead",
    "scheme_table",
    "summarize_repairs",
]
