from ._fault_map import FaultMap
from ._injection import INJECTABLE_TYPES
from ._injection import InjectionPattern
from ._injection import OversubscriptionError
from ._injection import inject_faults
from ._mapping import band_fault
from ._mapping import map_defects_to_faults
from ._raster import TileCrossing
from ._raster import clip_segment
from ._raster import tiles_crossed
from ._sampling import MCntDefect
from ._sampling import defect_count
from ._sampling import sample_defects

__all__ = [
    "FaultMap",
    "INJECTABLE_TYPES",
    "InjectionPattern",
    "MCntDefect",
    "OversubscriptionError",
    "TileCrossing",
    "band_fault",
    "clip_segment",
    "defect_count",
    "inject_faults",
    "map_defects_to_faults",
    "sample_defects",
    "tiles_crossed",
]
