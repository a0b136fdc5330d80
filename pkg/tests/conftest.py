import pytest

from wythoff import TerminalSpec, build_table


@pytest.fixture(scope="session")
def table_k5_30():
    return build_table(TerminalSpec(5), 30)


@pytest.fixture(scope="session")
def table_k0_30():
    return build_table(TerminalSpec(0), 30)
