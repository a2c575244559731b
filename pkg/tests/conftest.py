from __future__ import annotations

import pytest

from conjgf.families import small_catalog


@pytest.fixture(scope="session")
def catalog():
    """Labeled groups of order <= 64 shared across the suite (build once)."""
    return dict(small_catalog())
