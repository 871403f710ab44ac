import pytest

from rinehart.modconn import Connection, PresentedModule
from rinehart.polyring import WeightedRing

# the singularities exercised throughout: Fermat cones of degree 2..6,
# the minimally elliptic (4,3,3) example, and a mixed-weight sextic
CORPUS = [
    (["x", "y", "z"], [1, 1, 1], "x^2 + y^2 + z^2"),
    (["x", "y", "z"], [1, 1, 1], "x^3 + y^3 + z^3"),
    (["x", "y", "z"], [1, 1, 1], "x^4 + y^4 + z^4"),
    (["x", "y", "z"], [1, 1, 1], "x^5 + y^5 + z^5"),
    (["x", "y", "z"], [1, 1, 1], "x^6 + y^6 + z^6"),
    (["x", "y", "z"], [4, 3, 3], "x^3 + y^4 + z^4"),
    (["x", "y", "z"], [3, 2, 1], "x^2 + y^3 + z^6"),
]

_ring_cache: dict[str, WeightedRing] = {}


def corpus_ring(f: str) -> WeightedRing:
    """Rings are cached so the per-degree scratch data is shared."""
    if f not in _ring_cache:
        entry = next(c for c in CORPUS if c[2] == f)
        _ring_cache[f] = WeightedRing(*entry)
    return _ring_cache[f]


def corpus_rings() -> list[WeightedRing]:
    return [corpus_ring(f) for _, _, f in CORPUS]


@pytest.fixture(scope="session")
def cubic() -> WeightedRing:
    return corpus_ring("x^3 + y^3 + z^3")


@pytest.fixture(scope="session")
def elliptic() -> WeightedRing:
    return corpus_ring("x^3 + y^4 + z^4")


@pytest.fixture(scope="session")
def cubic_module(cubic) -> PresentedModule:
    return PresentedModule(cubic, [0, 0],
                           [["x", "-y^2 + y*z - z^2"], ["y + z", "x^2"]])


@pytest.fixture(scope="session")
def nabla(cubic_module) -> Connection:
    """The integrable worked connection on the cubic-cone module."""
    return Connection.from_mapping(cubic_module, {
        "E": [["2/9", "0"], ["0", "2/9"]],
        "D1": [["0", "-2*y + z"], ["2*x", "0"]],
        "D2": [["0", "y - 2*z"], ["2*x", "0"]],
        "D3": [["-2*y + 2*z", "0"], ["0", "y - z"]],
    })


@pytest.fixture(scope="session")
def nabla_prime(cubic_module) -> Connection:
    """The inhomogeneous, non-integrable companion of ``nabla``."""
    return Connection.from_mapping(cubic_module, {
        "E": [["2/9", "0"], ["0", "2/9"]],
        "D1": [["x*z", "-2*y + z"], ["2*x", "x*z"]],
        "D2": [["-x*y", "x^2 + y - 2*z"], ["2*x", "x*z"]],
        "D3": [["x^2 - 2*y + 2*z", "0"], ["0", "x^2 + y - z"]],
    })
