import numpy as np
import pytest

from elastica.common_exceptions import DegenerateEdge
from elastica.geometry.curve import Curve, reconstruct_curve
from elastica.geometry.embedding import (
    embeddedness_threshold,
    embeddedness_threshold_from_infimum,
    is_embedded,
)
from elastica.model.grid import State
from elastica.service.initdata.generators import lemniscate_points
from tests.fixtures import TWO_PI, make_params


def closed(vertices) -> Curve:
    vertices = np.asarray(vertices, dtype=float)
    return Curve(np.vstack((vertices, vertices[:1])))


SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
BOWTIE = [(0, 0), (1, 1), (1, 0), (0, 1)]


def test_simple_polygons() -> None:
    assert is_embedded(closed(SQUARE))
    assert not is_embedded(closed(BOWTIE))


@pytest.mark.parametrize("shift", [1, 2, 3])
def test_relabelling_does_not_matter(shift) -> None:
    assert is_embedded(closed(np.roll(SQUARE, shift, axis=0)))
    assert not is_embedded(closed(np.roll(BOWTIE, shift, axis=0)))
    assert is_embedded(closed(np.array(SQUARE)[::-1]))


def test_vertex_touching_an_edge_is_contact() -> None:
    assert not is_embedded(closed([(0, 0), (2, 0), (2, 2), (1, 0.0), (0.5, 1)]))
    # the same polygon pulled away from the bottom edge
    assert is_embedded(closed([(0, 0), (2, 0), (2, 2), (1, 1e-9), (0.5, 1)]))


def test_repeated_vertex_is_contact() -> None:
    assert not is_embedded(closed([(0, 0), (2, 0), (1, 1), (2, 2), (0, 2), (1, 1)]))


def test_degenerate_edge() -> None:
    with pytest.raises(DegenerateEdge):
        is_embedded(closed([(0, 0), (0, 0), (1, 0), (1, 1), (0, 1)]))


def test_reconstructed_circle_and_lemniscate(grid) -> None:
    circle = State(grid.ramp(1), np.zeros(grid.N))
    assert is_embedded(reconstruct_curve(circle, grid, 1))
    assert not is_embedded(closed(lemniscate_points(202)))


def test_threshold() -> None:
    assert embeddedness_threshold_from_infimum(1.0, TWO_PI, 0.0) == pytest.approx(
        146.628 / (2 * TWO_PI)
    )
    assert embeddedness_threshold_from_infimum(2.0, TWO_PI, 1.0) == pytest.approx(
        146.628 / TWO_PI - 4 * np.pi + TWO_PI
    )
    params = make_params("double_well", {"c": 1})
    assert embeddedness_threshold(params, (-0.5, 0.5)) == pytest.approx(
        0.5 * 1.5625 * 146.628 / TWO_PI
    )
