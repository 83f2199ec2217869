import pytest

from wsp.bounds import bounds_report, comparison_sides, verify_comparison_identity
from wsp.errors import GenusTooSmall
from wsp.semigroup import from_generators


def test_six_seven_eight_report():
    r = bounds_report(from_generators([6, 7, 8]))
    assert (r.genus, r.lambda_, r.ewt) == (9, 1, 12)
    assert r.pflueger_lower == 13
    assert r.rv_upper == 17
    assert r.new_lower == r.exact_moduli_dim == 14
    assert r.smoothing_dim == 2 * 9 + 1 - 1
    assert not r.negatively_graded


def test_six_seven_fifteen_report():
    r = bounds_report(from_generators([6, 7, 15]))
    assert r.pflueger_lower == 17
    assert r.new_lower == r.exact_moduli_dim == 18


def test_exact_value_needs_small_embedding_dimension():
    # symmetric but five generators
    r = bounds_report(from_generators([6, 7, 8, 9, 10]))
    assert r.exact_moduli_dim is None
    assert r.negatively_graded
    # four generators, not symmetric
    assert bounds_report(from_generators([4, 6, 11, 13])).exact_moduli_dim is None


def test_genus_one_rejected():
    with pytest.raises(GenusTooSmall):
        bounds_report(from_generators([2, 3]))


def test_as_dict_keys():
    d = bounds_report(from_generators([3, 5])).as_dict()
    assert d["lambda_"] == 1 and d["exact_moduli_dim"] == d["t1_minus"] - 1


def test_sandwich_exhaustive(genus_2_to_8):
    for S in genus_2_to_8:
        r = bounds_report(S)
        assert r.pflueger_lower <= r.new_lower <= r.rv_upper, S
        assert r.rv_upper - r.new_lower == r.t1_plus
        if r.exact_moduli_dim is not None:
            assert r.pflueger_lower <= r.exact_moduli_dim


def test_comparison_identity_exhaustive(genus_2_to_8):
    for S in genus_2_to_8:
        left, right = comparison_sides(S)
        assert left == right, S


def test_comparison_identity_low_genus():
    assert verify_comparison_identity(from_generators([2, 3]))
    assert verify_comparison_identity(from_generators([3, 4, 5]))


def test_printed_large_example_is_not_symmetric():
    # the third of the large examples, taken literally, has genus 48
    S = from_generators(list(range(33, 49)) + [64])
    assert (S.genus, S.frobenius, S.is_symmetric()) == (48, 65, False)
    r = bounds_report(S)
    # lambda = 16 here, so new_lower and 2g-1-t1_plus part ways
    assert (r.lambda_, r.t1_plus, r.new_lower) == (16, 225, -115)
    assert 2 * r.genus - 1 - r.t1_plus == -130
