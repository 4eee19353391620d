"""Small-t coefficient extraction from sampled heat traces.

``K(t) t^{m/2} = sum_k a_k t^{k/2}`` is fitted by linear least squares on a
geometric grid.  Columns are rescaled to unit norm before solving and the
condition number of the scaled design is reported; a fit above
``max_condition`` raises instead of returning noise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from .heat import HeatTraceSample


class IllConditionedFitError(ValueError):
    pass


class HeatTraceExpansion(RegressorMixin, BaseEstimator):
    """Least-squares fit of K(t) ~ sum_{k < n_terms} a_k t^{(k-m)/2}.

    ``X`` holds t in a single column and ``y`` the sampled K(t).  After
    fitting, ``coef_[k]`` estimates a_k.
    """

    def __init__(self, m: int = 4, n_terms: int = 6, max_condition: float = 1e10):
        self.m = m
        self.n_terms = n_terms
        self.max_condition = max_condition

    def _design(self, t: np.ndarray) -> np.ndarray:
        return np.column_stack([t ** (k / 2) for k in range(self.n_terms)])

    def fit(self, X, y):
        X, y = check_X_y(X, y, y_numeric=True)
        t = X[:, 0]
        if np.any(t <= 0):
            raise ValueError("t must be positive")
        if len(t) < self.n_terms + 2:
            raise ValueError(f"need at least {self.n_terms + 2} samples for {self.n_terms} terms")
        A = self._design(t)
        scale = np.linalg.norm(A, axis=0)
        As = A / scale
        cond = float(np.linalg.cond(As))
        if not cond <= self.max_condition:
            raise IllConditionedFitError(f"design condition number {cond:.3g} exceeds {self.max_condition:.3g}")
        rhs = y * t ** (self.m / 2)
        sol, *_ = np.linalg.lstsq(As, rhs, rcond=None)
        self.coef_ = sol / scale
        self.condition_ = cond
        self.residual_rms_ = float(np.sqrt(np.mean((As @ sol - rhs) ** 2)))
        self.n_features_in_ = 1
        return self

    def predict(self, X):
        check_is_fitted(self)
        t = check_array(X)[:, 0]
        return (self._design(t) @ self.coef_) * t ** (-self.m / 2)


@dataclass(frozen=True)
class CoefficientExtract:
    a_hat: tuple[float, ...]
    error: tuple[float, ...]
    condition: float
    residual_rms: float
    n_samples: int
    n_terms: int


def extract_coefficients(samples: list[HeatTraceSample], m: int, k_fit: int = 5) -> CoefficientExtract:
    """Estimate a_0..a_3 from samples, fitting powers k = 0..k_fit.

    The error estimate is the change when one more power is added.
    """
    n_terms = max(k_fit, 3) + 1
    if len(samples) < k_fit + 3:
        raise ValueError(f"need at least {k_fit + 3} samples, got {len(samples)}")
    X = np.array([[s.t] for s in samples])
    y = np.array([s.value for s in samples])
    base = HeatTraceExpansion(m=m, n_terms=n_terms).fit(X, y)
    try:
        more = HeatTraceExpansion(m=m, n_terms=n_terms + 1).fit(X, y)
        err = tuple(float(abs(a - b)) for a, b in zip(base.coef_[:4], more.coef_[:4]))
    except (ValueError, IllConditionedFitError):
        err = (float("nan"),) * 4
    return CoefficientExtract(
        a_hat=tuple(float(c) for c in base.coef_[:4]),
        error=err,
        condition=base.condition_,
        residual_rms=base.residual_rms_,
        n_samples=len(samples),
        n_terms=n_terms,
    )


def geometric_grid(t_lo: float, t_hi: float, ratio: float = 2**0.5) -> np.ndarray:
    if not 0 < t_lo < t_hi:
        raise ValueError("need 0 < t_lo < t_hi")
    n = int(np.floor(np.log(t_hi / t_lo) / np.log(ratio) + 1e-9)) + 1
    return t_lo * ratio ** np.arange(n)
