"""Half-plane growth bound for genus-zero products with negative zeros.

For f(z) = f(0)·prod(1 + z/z_n) with z_n > 0 and convergence exponent
rho0 < 1, every z with |arg z| < pi/2 and every rho in (rho0, 1) satisfy

    1 <= f(Re z)/f(0) <= |f(z)/f(0)| <= exp(E),
    E = (rho/e)^rho |z|^rho J(rho) / (cos^{1-rho}(arg z) Gamma(1+rho)),

where J(rho) = int_0^inf (f'(x)/f(x)) x^{-rho} dx.  This module computes
J by singular quadrature, both the final exponent E and the sharper
intermediate exponent from which it is derived, optimizes over rho, and
packages a full evaluation of the inequality chain as a BoundReport.

J(rho) and the weighted-phi supremum are memoized per model (keyed by the
exact rho bits) so that sweeping many z against one model costs one
quadrature per distinct rho.
"""

from __future__ import annotations

import cmath
import math
import weakref
from dataclasses import dataclass

from .errors import ConvergenceError, DivergenceError, DomainError
from .numerics import QuadratureResult, gamma, integrate_singular, minimize_scalar
from .zeros import FunctionModel, sup_weighted_phi

__all__ = [
    "BoundReport",
    "midpoint_rho",
    "log_ratio_integral",
    "bound_exponent",
    "intermediate_exponent",
    "optimize_rho",
    "evaluate_chain",
]

# chain_ok slacks: the upper comparison inherits quadrature error, the lower
# comparisons only evaluation round-off
_UPPER_SLACK = 1e-9
_LOWER_SLACK = 1e-12

# rho-optimization keeps away from both genuine endpoint singularities and
# snaps its evaluation points to a lattice so the J memo is shared across z
_RHO_MARGIN = 1e-3
_RHO_LATTICE = 5e-4

_J_CACHE: "weakref.WeakKeyDictionary[FunctionModel, dict]" = weakref.WeakKeyDictionary()
_SUP_CACHE: "weakref.WeakKeyDictionary[FunctionModel, dict]" = weakref.WeakKeyDictionary()


@dataclass(frozen=True)
class BoundReport:
    """One evaluated instance of the inequality chain at (z, rho).

    `lower` and `mid` are the measured ratios |f(Re z)/f(0)| and |f(z)/f(0)|,
    `bound` = exp(exponent_thm) the certified ceiling, `slack` how much
    head-room the ceiling leaves over the measured value in log scale.
    `j_source` records which route produced J (always "quadrature"; the
    zero-sum identity serves as an independent cross-check, never as the
    producer).
    """

    z: complex
    rho: float
    J: float
    exponent_thm: float
    exponent_intermediate: float
    bound: float
    lower: float
    mid: float
    chain_ok: bool
    slack: float
    j_source: str = "quadrature"

    def to_json_dict(self) -> dict:
        return {
            "z": {"re": self.z.real, "im": self.z.imag},
            "rho": self.rho,
            "J": self.J,
            "exponent_thm": self.exponent_thm,
            "exponent_intermediate": self.exponent_intermediate,
            "bound": self.bound,
            "lower": self.lower,
            "mid": self.mid,
            "chain_ok": bool(self.chain_ok),
            "slack": self.slack,
            "j_source": self.j_source,
        }


def midpoint_rho(model: FunctionModel) -> float:
    """Midpoint of the admissible exponent range (rho0, 1)."""
    return 0.5 * (model.order_rho0 + 1.0)


def _check_rho(model: FunctionModel, rho: float) -> float:
    rho = float(rho)
    if not rho < 1.0:
        raise DomainError(f"rho must lie in ({model.order_rho0:g}, 1), got {rho!r}")
    if not rho > model.order_rho0:
        raise DivergenceError(
            f"J(rho) diverges for rho <= rho0 = {model.order_rho0:g} "
            f"(integrand tail ~ x^(rho0-1-rho)); got rho = {rho!r}")
    return rho


def _check_halfplane(z: complex) -> complex:
    zc = complex(z)
    if zc == 0:
        raise DomainError("z = 0 has no argument; the chain needs |arg z| < pi/2")
    if abs(cmath.phase(zc)) >= 0.5 * math.pi:
        raise DomainError(
            f"z = {zc} lies outside the open right half-plane (|arg z| < pi/2)")
    return zc


def log_ratio_integral(model: FunctionModel, rho: float) -> QuadratureResult:
    """J(rho) = int_0^inf (f'(x)/f(x)) x^{-rho} dx for rho0 < rho < 1.

    Computed by singular quadrature of the model's log-derivative; results
    are memoized per model and exact rho.
    """
    rho = _check_rho(model, rho)
    memo = _J_CACHE.setdefault(model, {})
    hit = memo.get(rho)
    if hit is not None:
        return hit
    res = integrate_singular(model.log_derivative, rho, rel_tol=1e-8)
    memo[rho] = res
    return res


def bound_exponent(model: FunctionModel, z: complex, rho: float, J: float) -> float:
    """Certified exponent E = (rho/e)^rho |z|^rho J / (cos^{1-rho}(arg z) Gamma(1+rho))."""
    zc = _check_halfplane(z)
    rho = _check_rho(model, rho)
    if not J >= 0.0:
        raise DomainError(f"J must be nonnegative, got {J!r}")
    theta = cmath.phase(zc)
    log_scale = rho * (math.log(rho) - 1.0) + rho * math.log(abs(zc)) \
        + (rho - 1.0) * math.log(math.cos(theta))
    return float(math.exp(log_scale) * J / gamma(1.0 + rho))


def _sup_cached(model: FunctionModel, rho: float) -> float:
    memo = _SUP_CACHE.setdefault(model, {})
    hit = memo.get(rho)
    if hit is None:
        hit = sup_weighted_phi(model.zeros(), rho)
        memo[rho] = hit
    return hit


def intermediate_exponent(model: FunctionModel, z: complex, rho: float) -> float:
    """Sharper chain exponent (Re z)^rho sup_t t^rho phi(t) Gamma(1-rho)/(rho cos(arg z)).

    phi(t) = sum_n e^{-z_n t} over the model's zeros.  Always at most
    bound_exponent for the same inputs, since sup_t t^rho phi(t) <=
    (rho/e)^rho sum z_n^{-rho} and (Re z)^rho / cos = |z|^rho cos^{rho-1}.
    """
    zc = _check_halfplane(z)
    rho = _check_rho(model, rho)
    theta = cmath.phase(zc)
    sup = _sup_cached(model, rho)
    return float((zc.real ** rho) * sup * gamma(1.0 - rho) / (rho * math.cos(theta)))


def _lattice_rho(rho: float, lo: float, hi: float) -> float:
    snapped = round(rho / _RHO_LATTICE) * _RHO_LATTICE
    return min(hi, max(lo, snapped))


def optimize_rho(model: FunctionModel, z: complex):
    """Best exponent over rho in [rho0 + 1e-3, 1 - 1e-3]; returns (rho*, E*).

    Scan plus golden-section, with every evaluation snapped to the rho
    lattice so the J memo absorbs repeat visits (both within one search and
    across different z for the same model); non-computable rho count as +inf.
    """
    zc = _check_halfplane(z)
    lo = model.order_rho0 + _RHO_MARGIN
    hi = 1.0 - _RHO_MARGIN
    if not lo < hi:
        raise DomainError(f"empty rho range for rho0 = {model.order_rho0:g}")

    def objective(r: float) -> float:
        r_snap = _lattice_rho(r, lo, hi)
        try:
            J = log_ratio_integral(model, r_snap).value
            return bound_exponent(model, zc, r_snap, J)
        except (ConvergenceError, DivergenceError):
            return math.inf

    x, _ = minimize_scalar(objective, lo, hi, tol=1e-4)
    rho_star = _lattice_rho(x, lo, hi)
    exponent_star = objective(rho_star)
    if not math.isfinite(exponent_star):
        raise ConvergenceError(
            f"no admissible rho produced a finite exponent for {model.model_id}")
    return rho_star, exponent_star


def evaluate_chain(model: FunctionModel, z: complex, rho: float) -> BoundReport:
    """Evaluate every member of the inequality chain at (z, rho).

    chain_ok is true when 1 <= lower <= mid <= bound up to the documented
    slacks (1e-12 relative on the two lower comparisons, 1e-9 on the upper).
    """
    zc = _check_halfplane(z)
    rho = _check_rho(model, rho)
    j_res = log_ratio_integral(model, rho)
    exponent = bound_exponent(model, zc, rho, j_res.value)
    exponent_mid = intermediate_exponent(model, zc, rho)
    lower = abs(model.value_ratio(float(zc.real)))
    mid = abs(model.value_ratio(zc))
    bound = math.exp(exponent) if exponent < 709.0 else math.inf
    chain_ok = (
        lower >= 1.0 - _LOWER_SLACK
        and lower <= mid * (1.0 + _LOWER_SLACK)
        and mid <= bound * (1.0 + _UPPER_SLACK)
    )
    return BoundReport(
        z=zc,
        rho=rho,
        J=float(j_res.value),
        exponent_thm=exponent,
        exponent_intermediate=exponent_mid,
        bound=bound,
        lower=float(lower),
        mid=float(mid),
        chain_ok=bool(chain_ok),
        slack=float(exponent - math.log(mid)),
    )
