import pytest

from cayleyff import GraphSpec, base_field_new, ext_field_new, factor, prime_field


@pytest.fixture(scope="session")
def f16():
    return ext_field_new(prime_field(2), (1, 1, 0, 0, 1))


@pytest.fixture(scope="session")
def f9():
    """F_3[x]/(x^2+1)."""
    return ext_field_new(prime_field(3), (1, 0, 1))


@pytest.fixture(scope="session")
def f81_over_9():
    F9 = base_field_new(3, 2)
    return ext_field_new(F9, (4, 0, 1))


@pytest.fixture(scope="session")
def small_specs():
    """A spread of small instances over prime and non-prime base fields."""
    from cayleyff.primary import enumerate_irreducibles

    out = []
    for (p, m, n, ds) in [(2, 1, 4, (1, 2, 3)), (2, 1, 6, (1, 2, 3)), (3, 1, 3, (1, 2)),
                          (3, 1, 4, (1, 2)), (2, 2, 3, (1, 2)), (5, 1, 3, (1, 2)),
                          (3, 2, 2, (1,))]:
        F = base_field_new(p, m)
        for f in enumerate_irreducibles(F, n)[:3]:
            ext = ext_field_new(F, f)
            for d in ds:
                out.append(GraphSpec(ext, d))
    return out


def fact_of(ext):
    return factor(ext.N)


_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
