import pytest

from saacbr import Case, Casebase, FeatureSet, ModelConfig

NEW = FeatureSet.of("A", "B", "C", "D")


def figure1_cases():
    return [
        Case("C1", FeatureSet.of("A"), "+"),
        Case("C2", FeatureSet.of("A", "B", "C"), "+"),
        Case("C3", FeatureSet.of("A", "B"), "-"),
        Case("C4", FeatureSet.of("A", "B", "D"), "-"),
    ]


def figure1_config(mode="saacbr", **kw):
    return ModelConfig(mode, default_outcome="-", default_id="C0", **kw)


@pytest.fixture
def casebase():
    return Casebase.build(figure1_cases())


@pytest.fixture
def new_case():
    return NEW


@pytest.fixture
def aacbr():
    return figure1_config("aacbr")


@pytest.fixture
def saacbr():
    return figure1_config("saacbr")


# -- acceptance reporting -------------------------------------------------------

ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[number])
