import numpy as np
import pytest
from hypothesis import given

from s7omega import ArgumentError
from s7omega.validation import (
    MatrixParseError,
    check_coordinate_rows,
    check_omega_array,
    check_ordering,
    format_matrix_json,
    format_matrix_text,
    parse_inline_matrix,
    parse_matrix_text,
)

from conftest import WORKED, valid_omegas


def test_text_format_with_comments():
    omega = parse_matrix_text("# worked\n4 2\n1 0\n0 1\n\n1 2\n3 1\n")
    assert [list(r) for r in omega.entries] == WORKED


def test_json_format():
    omega = parse_matrix_text('{"k": 2, "rows": [[1, 0], [0, 1], [1, 2], [3, 1]]}')
    assert omega.k == 2


@pytest.mark.parametrize("text", [
    "", "4\n1 0", "3 1\n1\n1", "3 1\n1\n1\nx", "3 2\n1\n1\n1", '{"rows": [[1.5], [1], [1]]}',
    '{"k": 3, "rows": [[1], [1], [1]]}', "{bad json", "2 1\n1\n1",
])
def test_malformed(text):
    with pytest.raises(MatrixParseError):
        parse_matrix_text(text)


@given(valid_omegas())
def test_formats_round_trip(omega):
    assert parse_matrix_text(format_matrix_text(omega)) == omega
    assert parse_matrix_text(format_matrix_json(omega)) == omega
    assert parse_inline_matrix(format_matrix_text(omega).strip().replace("\n", ";")) == omega


def test_check_omega_array():
    assert check_omega_array(np.array(WORKED)).k == 2
    assert check_omega_array(np.array(WORKED, dtype=float)).k == 2
    with pytest.raises(ArgumentError):
        check_omega_array(np.array([[0.5], [1], [1]]))
    with pytest.raises(ArgumentError):
        check_omega_array(np.zeros(3))
    with pytest.raises(ArgumentError):
        check_omega_array([[True], [1], [1]])


def test_coordinate_rows():
    assert check_coordinate_rows([1, 2, 3], 3) == [[1, 2, 3]]
    assert check_coordinate_rows(np.array([[1, 2, 3]]), 3) == [[1, 2, 3]]
    with pytest.raises(ArgumentError):
        check_coordinate_rows([[1, 2]], 3)


def test_ordering():
    assert check_ordering("3,1,2", 3) == (3, 1, 2)
    assert check_ordering(None, 3) is None
    with pytest.raises(ArgumentError):
        check_ordering("1,1,2", 3)
    with pytest.raises(ArgumentError):
        check_ordering("a,b", 2)
