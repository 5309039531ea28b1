__version__ = "0.1.0a1"

from . import array_test
from . import clb_test
from . import defects
from . import delay
from . import fabric
from . import helpers
from . import processing
from . import redundancy
from ._config import ConfigError
from ._config import Diagnostic
from ._config import RunConfig
from ._config import config_hash
from ._config import load_config
from ._config import read_config
from ._config import validate
from ._experiments import run
from ._options import DefectParams
from ._options import DelayModelParams
from ._options import TimingParams
from ._plumbing import derive_seed
from .fabric import ArrayGeometry
from .fabric import build_array

__all__ = [
    "array_test",
    "clb_test",
    "defects",
    "delay",
    "fabric",
    "helpers",
    "processing",
    "redundancy",
    "ArrayGeometry",
    "ConfigError",
    "DefectParams",
    "DelayModelParams",
    "Diagnostic",
    "RunConfig",
    "TimingParams",
    "build_array",
    "config_hash",
    "derive_seed",
    "load_config",
    "read_config",
    "run",
    "validate",
]
