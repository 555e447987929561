import pytest

from strongtie import _kernels
from strongtie.graph import CommunitySet, load_graph

ACCEPTANCE_RESULTS = {}

KERNEL_BACKENDS = ["python"] + (["compiled"] if _kernels.compiled_kernels is not None else [])


@pytest.fixture(params=KERNEL_BACKENDS)
def kernel_backend(request):
    return request.param


@pytest.fixture
def path3():
    return load_graph("a b\nb c")


@pytest.fixture
def triangle():
    return load_graph("a b\nb c\nc a")


@pytest.fixture
def star3():
    return load_graph("c x\nc y\nc z")


def whole(graph):
    return CommunitySet.from_sets(graph, [range(graph.n)])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
