from importlib import resources

import pytest

from interestingness.corpus import Corpus, Document

FIXTURES = resources.files("interestingness") / "data" / "fixtures"

_acceptance_results = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion check")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = dict(report.user_properties).get("criterion")
    if crit is not None:
        _acceptance_results.append((crit, report.outcome))


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        item.user_properties.append(("criterion", f"{marker.args[0]}. {marker.args[1]}"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for crit, outcome in sorted(_acceptance_results, key=lambda r: int(r[0].split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {crit}")


@pytest.fixture
def weblog_recipe():
    return str(FIXTURES / "weblog.recipe")


@pytest.fixture
def sports_field():
    return str(FIXTURES / "sports.field")


@pytest.fixture
def birds_recipe():
    return str(FIXTURES / "birds.recipe")


# Four hand-countable documents.  df: observer 2, mediator 2, pattern 4,
# code/java/concatenate/swing 1 each.
FOUR_DOCS = {
    "d1": {"observer": 2, "pattern": 3, "mediator": 1, "code": 4},
    "d2": {"observer": 1, "pattern": 2, "java": 3},
    "d3": {"mediator": 3, "pattern": 1, "concatenate": 4},
    "d4": {"pattern": 2, "swing": 2},
}


@pytest.fixture
def four_docs():
    return Corpus(Document(i, term_counts=c) for i, c in FOUR_DOCS.items())


@pytest.fixture
def reversal_corpus():
    """Ten documents; 'observer' five times in each, 'concatenate' eight times in one."""
    docs = []
    for i in range(10):
        counts = {"observer": 5, f"filler{i}": 3, "design": 2}
        if i == 0:
            counts["concatenate"] = 8
        docs.append(Document(f"r{i:02d}", term_counts=counts))
    return Corpus(docs)


def corpus_from_recipe(path, seed=None):
    from interestingness.corpus import StopwordList, parse_corpus_lines
    from interestingness.synthetic import load_recipe, render

    text = render(load_recipe(path), seed)
    return parse_corpus_lines(text.splitlines(), path, stopwords=StopwordList.default())


@pytest.fixture
def birds_corpus(birds_recipe):
    return corpus_from_recipe(birds_recipe)


BIRDS_QUERY = ["migratory", "birds", "water", "swim"]
