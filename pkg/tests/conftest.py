import pytest

from ncpbw import OrderSpec, Quiver, parse_polynomial


@pytest.fixture
def free2():
    return Quiver.free(["x", "y"])


@pytest.fixture
def ord2():
    return OrderSpec(("x", "y"))


@pytest.fixture
def free3():
    return Quiver.free(["x", "h", "y"])


@pytest.fixture
def ord3():
    return OrderSpec(("x", "h", "y"))


@pytest.fixture
def sl2_relations(free3):
    return [parse_polynomial(s, free3) for s in
            ("x*y - y*x - h", "x*h - h*x + 2*x", "h*y - y*h + 2*y")]


@pytest.fixture
def loop_quiver():
    return Quiver.path(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])


@pytest.fixture
def loop_order():
    return OrderSpec(("a", "b"))


@pytest.fixture
def loop_relation(loop_quiver):
    return parse_polynomial("a*b - e1", loop_quiver)
