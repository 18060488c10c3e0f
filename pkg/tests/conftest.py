import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from weakid.groups import make_group

SMALL_ZOO = [
    "trivial", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6", "cyclic:8",
    "dihedral:3", "dihedral:4", "sym:3", "q8", "elab:2:2", "elab:2:3",
    "prod(cyclic:2,cyclic:4)", "gl:2:2", "sl:2:2",
]
ZOO = SMALL_ZOO + ["alt:4", "sl:2:3", "gl:2:3", "alt:5", "sym:4", "prod(sym:3,cyclic:2)"]

_cache = {}


def group(spec):
    if spec not in _cache:
        _cache[spec] = make_group(spec)
    return _cache[spec]


@pytest.fixture
def S3():
    return group("sym:3")


@pytest.fixture
def Q8():
    return group("q8")


@pytest.fixture
def A5():
    return group("alt:5")
