import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from hh1solve import SolvabilityAnalyzer, check_group, check_prime
from hh1solve import catalog
from hh1solve.spec import SpecError


def test_params_roundtrip():
    est = SolvabilityAnalyzer(prime=2, full_oracle=True)
    assert est.get_params() == {"prime": 2, "full_oracle": True, "oracle_cap": 32}
    assert clone(est).set_params(prime=3).prime == 3


def test_fit_and_predict():
    est = SolvabilityAnalyzer(prime=3).fit(catalog.heisenberg(3))
    assert est.verdict_ == "SOLVABLE"
    assert est.gamma_.n_edges == 8 and est.reduced_gamma_.n_edges == 0 and est.gamma2_ is None
    preds = est.predict([catalog.sl23(), {"type": "catalog", "name": "modular", "params": {"p": 3}},
                         '{"type":"catalog","name":"c9_rtimes_c9","params":{}}'])
    assert preds == ["NOT_SOLVABLE", "SOLVABLE", "NOT_SOLVABLE"]


def test_predict_before_fit():
    with pytest.raises(NotFittedError):
        SolvabilityAnalyzer().predict([catalog.cyclic(3)])


def test_validation_helpers():
    assert check_prime(7) == 7
    for bad in (4, 1, True, 3.0):
        with pytest.raises(ValueError):
            check_prime(bad)
    with pytest.raises(TypeError):
        check_group(42)
    with pytest.raises(SpecError):
        check_group({"type": "bogus"})


def test_p2_inconclusive_without_oracle():
    assert SolvabilityAnalyzer(prime=2).fit_predict(catalog.cyclic(2)) == "INCONCLUSIVE"
    assert SolvabilityAnalyzer(prime=2, full_oracle=True).fit_predict(catalog.cyclic(2)) == "SOLVABLE"
