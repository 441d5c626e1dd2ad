import pytest

from geoseq.field import FieldContext

GRID = [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (11, 2)]

# (modulus, omega) pairs used in the worked examples, constant term first
REFERENCE = {
    (5, 2): ((3, 2, 1), (0, 4)),
    (3, 3): ((1, 0, 2, 1), (0, 0, 2)),
    (11, 2): ((2, 7, 1), (9, 2)),
    (5, 3): ((3, 2, 3, 1), (1, 1, 2)),
}


def reference_ctx(p, m):
    f, w = REFERENCE.get((p, m), (None, None))
    return FieldContext.build(p, m, f, w)


@pytest.fixture(params=GRID, ids=lambda pm: f"p{pm[0]}m{pm[1]}")
def grid_ctx(request):
    return reference_ctx(*request.param)


@pytest.fixture(params=GRID, ids=lambda pm: f"p{pm[0]}m{pm[1]}")
def searched_ctx(request):
    return FieldContext.build(*request.param)


@pytest.fixture
def ex1():
    return reference_ctx(5, 2)


@pytest.fixture
def ex2():
    return reference_ctx(3, 3)
