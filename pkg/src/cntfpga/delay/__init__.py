from ._mwcnt import NOMINAL_D_MAX
from ._mwcnt import NOMINAL_P_METAL
from ._mwcnt import NOMINAL_SIGMA_D
from ._mwcnt import MwcntSpec
from ._mwcnt import bundle_resistance
from ._mwcnt import calibrate
from ._mwcnt import chirality_reduction
from ._mwcnt import delay_population
from ._mwcnt import draw_mwcnt
from ._mwcnt import nominal_mwcnt
from ._mwcnt import sample_mwcnt
from ._mwcnt import segment_delay
from ._mwcnt import shell_diameters
from ._ring_oscillator import RoCell
from ._ring_oscillator import RoMeasurement
from ._ring_oscillator import build_ro_partition
from ._ring_oscillator import detect_delay_faults
from ._ring_oscillator import flag_measurements
from ._ring_oscillator import loop_delay
from ._ring_oscillator import measure_ro
from ._ring_oscillator import population_spread
from ._ring_oscillator import xnor_config

__all__ = [
    "MwcntSpec",
    "NOMINAL_D_MAX",
    "NOMINAL_P_METAL",
    "NOMINAL_SIGMA_D",
    "RoCell",
    "RoMeasurement",
    "build_ro_partition",
    "bundle_resistance",
    "calibrate",
    "chirality_reduction",
    "delay_population",
    "detect_delay_faults",
    "draw_mwcnt",
    "flag_measurements",
    "loop_delay",
    "measure_ro",
    "nominal_mwcnt",
    "population_spread",
    "sample_mwcnt",
    "segment_delay",
    "shell_diameters",
    "xnor_config",
]
