from __future__ import annotations

import json
from pathlib import Path

import pytest

FIXTURE = Path(__file__).parent / "fixtures" / "oracle.json"


def _load():
    with FIXTURE.open(encoding="utf-8") as fh:
        return json.load(fh)


ORACLE = _load()


def cval(pair) -> complex:
    return complex(float(pair[0]), float(pair[1]))


@pytest.fixture(scope="session")
def oracle():
    return ORACLE


@pytest.fixture(scope="session")
def oracle_zeros():
    return [float(t) for t in ORACLE["critical_line_zeros"]["zeros"]]
