import numpy as np
from _pytest.doctest import DoctestItem

_saved = {}


def pytest_runtest_setup(item):
    """Doctests are written against the NumPy 1.x scalar repr."""
    if isinstance(item, DoctestItem):
        _saved[item.nodeid] = np.get_printoptions()
        try:
            np.set_printoptions(legacy="1.25")
        except (TypeError, ValueError):
            pass


def pytest_runtest_teardown(item):
    old = _saved.pop(item.nodeid, None)
    if old is not None:
        np.set_printoptions(**old)
