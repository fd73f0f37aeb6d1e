"""Estimator-style wrapper around :func:`hh1solve.report.analyze`.

``fit`` analyzes one group; ``predict`` maps a list of groups to verdicts
using the fitted configuration. The class follows the scikit-learn
conventions (constructor stores parameters untouched, fitted attributes end
with an underscore) so ``get_params``/``set_params``/``clone`` work.
"""

from __future__ import annotations

import json

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .derivations import ORACLE_CAP
from .fp import is_prime
from .groups import Group
from .report import Report, analyze
from .spec import GroupSpec, parse_spec, spec_from_obj


def check_prime(p) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"prime must be a prime integer, got {p!r}")
    return p


def check_group(x) -> Group | GroupSpec:
    """Accept a :class:`Group`, a :class:`GroupSpec`, a spec dict or a JSON string."""
    if isinstance(x, (Group, GroupSpec)):
        return x
    if isinstance(x, dict):
        return spec_from_obj(x)
    if isinstance(x, str):
        return parse_spec(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a group")


class SolvabilityAnalyzer(BaseEstimator):
    def __init__(self, prime: int = 3, full_oracle: bool = False, oracle_cap: int = ORACLE_CAP):
        self.prime = prime
        self.full_oracle = full_oracle
        self.oracle_cap = oracle_cap

    def _run(self, x) -> Report:
        return analyze(check_group(x), check_prime(self.prime),
                       full_oracle=self.full_oracle, oracle_cap=self.oracle_cap)

    def fit(self, X, y=None):
        self.report_ = self._run(X)
        self.gamma_ = self.report_.graphs["gamma"]
        self.reduced_gamma_ = self.report_.graphs["gamma_reduced"]
        self.gamma2_ = self.report_.graphs.get("gamma2")
        self.verdict_ = self.report_.verdict
        return self

    def predict(self, X) -> list[str]:
        check_is_fitted(self, "report_")
        return [self._run(x).verdict for x in X]

    def fit_predict(self, X, y=None) -> str:
        return self.fit(X).verdict_

    def to_json(self) -> str:
        check_is_fitted(self, "report_")
        return json.dumps(self.report_.to_dict(), indent=2)
