import numpy as np
import pytest

from kfour import poly
from kfour.linalg import matmul

from oracles import irreducible_count


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_irreducible_counts_gf2(F2, d):
    found = [p for p in poly.monic_polys(F2, d) if poly.is_irreducible(F2, p)]
    assert len(found) == irreducible_count(d)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_irreducible_counts_gf4(F4, d):
    found = [p for p in poly.monic_polys(F4, d) if poly.is_irreducible(F4, p)]
    assert len(found) == irreducible_count(d, 4)


def test_text_round_trip(F2, F4):
    assert poly.from_str(F2, "x^2+x+1") == (1, 1, 1)
    assert poly.to_str((1, 1, 1)) == "x^2+x+1"
    assert poly.to_str((0, 1)) == "x"
    w = F4.generator.value
    p = (F4.add(w, 1), w, 1)
    assert poly.from_str(F4, poly.to_str(p)) == p


def test_bad_text(F2):
    with pytest.raises(ValueError):
        poly.from_str(F2, "x^2+y")
    with pytest.raises(ValueError):
        poly.from_str(F2, "")


def test_prime_power_root(F2):
    q = (1, 1, 1)
    assert poly.prime_power_root(F2, poly.power(F2, q, 3)) == (q, 3)
    assert poly.prime_power_root(F2, (0, 0, 1)) == ((0, 1), 2)
    # x (x + 1) is not a prime power
    assert poly.prime_power_root(F2, (0, 1, 1)) is None


def test_divmod(F4):
    a = poly.mul(F4, (1, 2, 1), (3, 1))
    q, r = poly.divmod_(F4, a, (3, 1))
    assert q == (1, 2, 1) and r == ()


def test_minimal_poly_of_companion(F2):
    # companion matrix of x^3 + x + 1: e_1 is a cyclic vector
    C = np.array([[0, 0, 1], [1, 0, 1], [0, 1, 0]], dtype=np.uint8)
    e1 = np.array([1, 0, 0], dtype=np.uint8)
    assert poly.minimal_poly_of_vector(F2, C, e1) == (1, 1, 0, 1)
    assert not np.any(poly.eval_matrix(F2, (1, 1, 0, 1), C))
    assert np.any(poly.eval_matrix(F2, (1, 1), matmul(F2, C, C)))
