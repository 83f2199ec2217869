import pytest

from wsp.errors import CoprimalityFailure
from wsp.families import family
from wsp.polyrig import equations as eq
from wsp.polyrig import parse, sub_pfaffians
from wsp.toric import minimal_relations

X = eq.X


@pytest.mark.parametrize("tau", [1, 2, 3, 4])
@pytest.mark.parametrize("fid", [1, 2])
def test_initial_forms(fid, tau):
    forms = eq.initial_forms(fid, tau)
    w = eq.weights(fid, tau)
    curve = eq.monomial_curve(fid, tau)
    for label, F in forms.items():
        assert F.is_isobaric(eq.form_weight(label, tau), w), label
        assert F.substitute(curve).is_zero(), label
    degrees = sorted(r.degree for r in minimal_relations(family(fid, tau).semigroup))
    assert sorted(eq.form_weight(l, tau) for l in forms) == degrees


@pytest.mark.parametrize("tau", range(1, 6))
def test_syzygies(tau):
    assert eq.verify_syzygies_family1(tau)


def test_printed_second_syzygy_needs_f11():
    tau = 2
    F = eq.initial_forms(1, tau)
    printed = eq.Y(4) * F["F7"] - eq.Y(3) * F["F8"] + X ** tau * F["F10"]
    assert printed == X ** tau * (F["F10"] - F["F11"])
    assert not printed.is_zero()


def test_pfaffian_deleting_first_index():
    p = lambda i, j: eq.partial(1, 1, i, j, zero=eq.NORMALIZATIONS[1])
    expected = (p(12, 3) * p(10, 2)
                - (p(15, 6) - X ** 2 * p(8, 6)) * p(7, 5)
                + (p(14, 6) - X * p(8, 6)) * p(12, 5))
    assert sub_pfaffians(eq.pfaffian_matrix(1, 1))[0] == expected


def test_partial_degrees():
    assert str(eq.partial(1, 2, 8, 6)) == "X*f_8_6 + f_8_12"
    assert str(eq.partial(1, 1, 14, 6)) == "X*f_14_6 + f_14_12"
    # i - j = 6e + r: 2t+e for r = 0, t-1+e for r in {1,2}, t+e for r in {3,4}
    assert [eq.rho(1, i, j, 3) for i, j in [(16, 2), (15, 6), (12, 4), (12, 5), (8, 1)]] == \
        [3 - 1 + 2, 3 + 1, 3 - 1 + 1, 3 - 1 + 1, 3 - 1 + 1]
    assert eq.rho(2, 4, 1, 2) == 2 and eq.rho(2, 8, 6, 2) == 2


@pytest.mark.parametrize("tau", [1, 2, 3])
@pytest.mark.parametrize("fid", [1, 2])
def test_base_equations(fid, tau):
    eqs = eq.base_equations(fid, tau)
    symbols = eq.matrix_symbols(fid, tau)
    assert len(eqs) == 5 * tau
    assert len(symbols) == (11 * tau + 8 if fid == 1 else 11 * tau + 4)
    w = eq.weights(fid, tau, symbols)
    for e in eqs:
        assert not e.is_zero()
        assert "X" not in e.variables()
        assert e.is_isobaric(None, w)
        assert e.part_of_degree(symbols, 1).is_zero()
        assert e.part_of_degree(symbols, 0).is_zero()
    pf = sub_pfaffians(eq.pfaffian_matrix(fid, tau))
    assert eq.same_up_to_sign(pf, eq.rhs_equations(fid, tau))


def test_canonical_text_of_the_equations():
    text = [str(e) for e in eq.base_equations(1, 1)]
    assert text[0] == "-f_7_5*f_15_18 + f_10_8*f_12_15 + f_12_11*f_14_12"
    assert [parse(t) for t in text] == eq.base_equations(1, 1)


def test_remainders_vanish_on_the_special_fibre():
    # with every symbol zero the matrix degenerates to the monomial curve case
    tau = 2
    symbols = eq.matrix_symbols(1, tau)
    zero = {s: 0 for s in symbols}
    for e in eq.base_equations(1, tau):
        assert e.substitute(zero).is_zero()


@pytest.mark.parametrize("tau", [1, 2, 3])
@pytest.mark.parametrize("fid", [1, 2])
def test_quadratic_cone(fid, tau):
    assert eq.quadratic_cone_check(tau, fid)
    d = eq.quadratic_cone_data(fid, tau)
    assert d["entry_rank"] == 10 * tau
    assert len(d["complement_weights"]) == d["symbols"] - 10 * tau


def test_cone_complement_weights():
    assert eq.quadratic_cone_data(1, 1)["complement_weights"] == [2, 2, 3, 5, 6, 6, 8, 9, 12]
    assert eq.quadratic_cone_data(1, 3)["complement_weights"] == \
        [2, 2, 3, 5, 6, 6, 8, 9, 12, 12, 18]


@pytest.mark.parametrize("tau", [1, 2, 3])
def test_smoothing(tau):
    assert eq.verify_smoothing_solution(tau, 1, 2, 3)


def test_smoothing_reduces_to_initial_forms():
    assert eq.smoothing_forms(2, 0, 0, 0) == eq.initial_forms(1, 2)


def test_smoothing_rejects_common_roots():
    with pytest.raises(CoprimalityFailure, match="share a root"):
        eq.verify_smoothing_solution(1, 1, 1, 1)
    with pytest.raises(CoprimalityFailure):
        eq.verify_smoothing_solution(2, 0, 2, 3)


def test_normalization_is_configurable():
    alt = eq.matrix_symbols(1, 1, eq.ALT_NORMALIZATION_1)
    assert "f_8_6" in alt and "f_15_6" not in alt
    assert len(eq.base_equations(1, 1, eq.ALT_NORMALIZATION_1)) == 5
