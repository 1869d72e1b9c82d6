"""Shared fixtures for the torsion-sections tests."""

from collections.abc import Iterator

import pytest

from torsion_sections.arith import DEFAULT_MAX_ORDER, set_order_limit


@pytest.fixture(autouse=True)
def _restore_order_limit() -> Iterator[None]:
    """The cyclotomic order cap is process-wide; put it back after every test."""
    yield
    set_order_limit(DEFAULT_MAX_ORDER)
