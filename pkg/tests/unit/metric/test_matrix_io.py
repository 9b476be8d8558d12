from HyperMet.metric import build_matrix, load_matrix, read_matrix_entries, save_matrix
from HyperMet.utils.exceptions import HyperMetParseError
import numpy as np
import pytest


def test_csv_round_trip_is_exact(tmp_path, random_matrix):
    path = tmp_path / "m.csv"
    save_matrix(random_matrix, path)
    assert load_matrix(path) == random_matrix


def test_json_round_trip_is_exact(tmp_path, random_matrix):
    path = tmp_path / "m.json"
    save_matrix(random_matrix, path)
    assert load_matrix(path) == random_matrix


def test_malformed_row(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("label,a,b\na,0,1\nb,1\n")
    with pytest.raises(HyperMetParseError):
        read_matrix_entries(path)


def test_non_numeric_entry(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("label,a,b\na,0,one\nb,1,0\n")
    with pytest.raises(HyperMetParseError):
        read_matrix_entries(path)


def test_header_must_match_rows(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("label,a,b\na,0,1\nc,1,0\n")
    with pytest.raises(HyperMetParseError):
        read_matrix_entries(path)


def test_missing_file(tmp_path):
    with pytest.raises(HyperMetParseError):
        read_matrix_entries(tmp_path / "absent.csv")


def test_json_layout(tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"labels": ["a", "b"], "d": [[0, 2.5], [2.5, 0]]}')
    labels, values = read_matrix_entries(path)
    assert labels == ["a", "b"]
    assert values[0, 1] == 2.5
