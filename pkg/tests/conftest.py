"""Shared fixtures: well-known recurrences and a CLI runner."""

import pytest

from doldseq import cli, make_recurrence


@pytest.fixture
def fibonacci():
    return make_recurrence([1, 1], [1, 1])


@pytest.fixture
def lucas():
    return make_recurrence([1, 1], [1, 3])


@pytest.fixture
def example_seq():
    # U_n = 12 U_{n-1} + 3 U_{n-2}, U_1 = 2, U_2 = 25; fail factor 6.
    return make_recurrence([12, 3], [2, 25])


@pytest.fixture
def order4_seq():
    # char poly x^4 - 10 x^2 + 1, irreducible over Z, reducible mod every prime
    return make_recurrence([0, 10, 0, -1], [0, 5, 0, 49])


@pytest.fixture
def order4_variant():
    # same char poly, initial terms chosen so the structure test refutes
    return make_recurrence([0, 10, 0, -1], [1, 0, 9, 0])


@pytest.fixture
def run_cli(capsys):
    def run(argv):
        code = cli.run_command(argv)
        return code, capsys.readouterr().out

    return run
