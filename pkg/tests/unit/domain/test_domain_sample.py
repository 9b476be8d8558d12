from HyperMet.domain import DomainSample, load_domain_sample, read_points, write_points
from HyperMet.geometry import Euclidean, Hyperbolic2
from HyperMet.utils.exceptions import (
    ConstraintViolation,
    DuplicateLabel,
    DuplicatePoint,
    EmptyBoundary,
    HyperMetParseError,
    HyperMetValueError,
    PointOnBoundary,
)
import numpy as np
import pytest


def test_default_labels():
    sample = DomainSample(Euclidean(2), [[0, 1], [0, -1]], [[1, 0]])
    assert sample.interior_labels == ("x0", "x1")
    assert sample.boundary_labels == ("p0",)
    assert sample.n_interior == 2
    assert sample.n_boundary == 1
    assert sample.interior_distances[0, 1] == 2.0


def test_empty_boundary():
    with pytest.raises(EmptyBoundary):
        DomainSample(Euclidean(2), [[0, 1]], np.zeros((0, 2)))


def test_point_on_boundary():
    with pytest.raises(PointOnBoundary) as e:
        DomainSample(Euclidean(2), [[0, 1], [1, 0]], [[1, 0]], ["a", "b"])
    assert e.value.label == "b"


def test_duplicate_point():
    with pytest.raises(DuplicatePoint) as e:
        DomainSample(Euclidean(2), [[0, 1], [2, 2], [0, 1]], [[1, 0]], ["a", "b", "c"])
    assert e.value.label == "c"


def test_duplicate_boundary_point():
    with pytest.raises(DuplicatePoint) as e:
        DomainSample(
            Euclidean(2), [[0, 1]], [[1, 0], [-1, 0], [1, 0]], boundary_labels=["p", "q", "w"]
        )
    assert e.value.label == "w"
    with pytest.raises(DuplicatePoint):
        DomainSample(Euclidean(2), [[0, 1]], [[1, 0]]).with_boundary([[1, 0]])


def test_label_errors():
    with pytest.raises(DuplicateLabel):
        DomainSample(Euclidean(2), [[0, 1], [0, 2]], [[1, 0]], ["a", "a"])
    with pytest.raises(HyperMetValueError):
        DomainSample(Euclidean(2), [[0, 1], [0, 2]], [[1, 0]], ["a"])


def test_points_off_the_model():
    with pytest.raises(ConstraintViolation):
        DomainSample(Hyperbolic2(1.0), [[2.0, 0.0, 0.0]], [[1.0, 0.0, 0.0]])


def test_sample_is_read_only():
    interior = np.array([[0.0, 1.0], [0.0, -1.0]])
    sample = DomainSample(Euclidean(2), interior, [[1.0, 0.0]])
    with pytest.raises(ValueError):
        sample.interior[0, 0] = 5.0
    # the caller's array stays writable
    interior[0, 0] = 5.0


def test_with_boundary():
    sample = DomainSample(Euclidean(2), [[0, 1], [0, -1]], [[1, 0]])
    larger = sample.with_boundary([[-1, 0]])
    assert larger.n_boundary == 2
    assert larger.boundary_labels == ("p0", "p1")


def test_point_file_round_trip(tmp_path):
    h = Hyperbolic2(1.0)
    points = h.lift([[0.1, 0.2], [-0.5, 0.3]])
    path = tmp_path / "points.csv"
    write_points(path, ["a", "b"], points)
    labels, values = read_points(path, h)
    assert labels == ["a", "b"]
    assert np.array_equal(values, points)


def test_point_file_wrong_columns(tmp_path):
    path = tmp_path / "points.csv"
    path.write_text("label,x1,x2\na,0,1\n")
    with pytest.raises(HyperMetParseError):
        read_points(path, Euclidean(3))


def test_point_file_off_the_model(tmp_path):
    path = tmp_path / "points.csv"
    path.write_text("label,x1,x2,x3\na,1,1,0\n")
    with pytest.raises(ConstraintViolation):
        read_points(path, Hyperbolic2(1.0))


def test_empty_boundary_file(tmp_path):
    interior = tmp_path / "interior.csv"
    boundary = tmp_path / "boundary.csv"
    interior.write_text("label,x1,x2\nx,0,1\ny,0,-1\n")
    boundary.write_text("label,x1,x2\n")
    with pytest.raises(EmptyBoundary):
        load_domain_sample(Euclidean(2), interior, boundary)
