"""Quasi-exact series solutions of the radial equation.

Bound states are sought in the form

    R(r) = r^(beta + 1/2) * exp(q r + p r^2 / 2) * sum_{n=0}^{s} a_n r^n

whose coefficients obey the three-term recurrence

    A_n a_n + B_{n+1} a_{n+1} + C_{n+2} a_{n+2} = 0
    A_n = -eps^2 + q^2 + 2 p (n + beta + 1)
    B_n = g' + q (2 n + 2 beta + 1)
    C_n = n (n + 2 beta).

A degree-s polynomial factor exists only when eps^2 closes the chain
(A_s = 0, fixing the energy) and the potential parameters make the
(s+1) x (s+1) banded coefficient determinant vanish.  The determinant is
evaluated through its own three-term recurrence with per-row scaling, so
the returned residual is dimensionless and overflow-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np
from scipy.integrate import quad

from .model import RadialParams


class ConstraintViolation(ValueError):
    """The potential parameters do not admit a degree-s polynomial solution.

    Carries the scaled determinant residual; callers may fall back to the
    per-model closed-form energies, which do not require the constraint.
    """

    def __init__(self, s: int, residual: float):
        super().__init__(
            f"no degree-{s} polynomial solution: scaled determinant residual "
            f"{residual:.3e} exceeds 1e-8"
        )
        self.s = s
        self.residual = residual


@dataclass(frozen=True)
class SeriesSolution:
    """A closed bound-state solution of polynomial degree s.

    ``params`` holds the effective radial parameters, including the
    degree-dependent q chosen on the purely Coulombic branch.  ``coeffs``
    are the polynomial coefficients a_0..a_s with a_0 = 1; physical
    normalization is a separate step (:func:`normalize`).
    """

    s: int
    coeffs: tuple
    params: RadialParams
    epsilon2: float
    energy: float


def recurrence_coeffs(
    params: RadialParams, epsilon2: float, n: int
) -> tuple[float, float, float]:
    """Return (A_n, B_n, C_n) of the three-term recurrence."""
    if n < 0:
        raise ValueError(f"recurrence index must be non-negative, got {n}")
    beta, p, q = params.beta, params.p, params.q
    A = q * q + 2.0 * p * (n + beta + 1.0) - epsilon2
    B = params.gprime + q * (2.0 * n + 2.0 * beta + 1.0)
    C = n * (n + 2.0 * beta)
    return A, B, C


def _row_scale(params: RadialParams, epsilon2: float, i: int, s: int) -> float:
    """Magnitude scale of determinant row i from its constituent terms."""
    beta, p, q = params.beta, params.p, params.q
    terms = [abs(params.gprime), abs(q) * (2.0 * i + 2.0 * beta + 1.0)]
    if i > 0:
        terms += [q * q, abs(epsilon2), 2.0 * abs(p) * (i + beta)]
    if i < s:
        terms.append((i + 1.0) * (i + 1.0 + 2.0 * beta))
    scale = max(terms)
    return scale if scale > 0 else 1.0


def determinant_residual(params: RadialParams, epsilon2: float, s: int) -> float:
    """Scaled determinant of the (s+1) x (s+1) recurrence coefficient matrix.

    The matrix has diagonal B_0..B_s, superdiagonal C_1..C_s and
    subdiagonal A_0..A_{s-1}; its determinant obeys
    D_k = B_k D_{k-1} - A_{k-1} C_k D_{k-2} with D_{-1} = 1, D_0 = B_0.
    Each row is divided by the magnitude of its largest constituent term,
    so the result is a dimensionless residual whose vanishing (|.| <= 1e-10
    in well-scaled cases) signals that a degree-s polynomial solution exists.
    """
    if s < 0:
        raise ValueError(f"degree must be non-negative, got {s}")
    scale0 = _row_scale(params, epsilon2, 0, s)
    d_prev2 = 1.0
    d_prev1 = recurrence_coeffs(params, epsilon2, 0)[1] / scale0
    scale_prev = scale0
    for k in range(1, s + 1):
        scale_k = _row_scale(params, epsilon2, k, s)
        A_km1 = recurrence_coeffs(params, epsilon2, k - 1)[0]
        B_k = recurrence_coeffs(params, epsilon2, k)[1]
        C_k = recurrence_coeffs(params, epsilon2, k)[2]
        d_k = (B_k / scale_k) * d_prev1 - (A_km1 / scale_k) * (C_k / scale_prev) * d_prev2
        d_prev2, d_prev1 = d_prev1, d_k
        scale_prev = scale_k
    return d_prev1


def closure_epsilon2(params: RadialParams, s: int) -> float:
    """Energy-parameter eps^2 closing the recurrence at degree s (A_s = 0)."""
    return params.q * params.q + 2.0 * params.p * (s + params.beta + 1.0)


def effective_params(params: RadialParams, s: int) -> RadialParams:
    """Resolve the degree-dependent exponential coefficient q.

    On the purely Coulombic branch (gamma = 0) the decay constant is fixed
    by the termination condition B_s = 0, giving q = -g'/(2s + 2 beta + 1).
    Elsewhere the parameters are returned unchanged.
    """
    if not params.coulomb_branch:
        return params
    q = -params.gprime / (2.0 * s + 2.0 * params.beta + 1.0)
    return replace(params, q=q, coulomb_branch=False)


def solve_series(params: RadialParams, s: int) -> SeriesSolution:
    """Construct the degree-s series solution, or fail with its residual.

    The closure condition fixes eps^2 = q^2 + 2p(s + beta + 1); the
    coefficients are then built forward from a_0 = 1.  If the scaled
    determinant residual at that eps^2 exceeds 1e-8 the parameters do not
    satisfy the solvability constraint and :class:`ConstraintViolation`
    is raised.
    """
    if s < 0:
        raise ValueError(f"degree must be non-negative, got {s}")
    eff = effective_params(params, s)
    epsilon2 = closure_epsilon2(eff, s)
    residual = determinant_residual(eff, epsilon2, s)
    if abs(residual) > 1e-8:
        raise ConstraintViolation(s, residual)

    coeffs = [1.0]
    for j in range(1, s + 3):
        A_jm2 = recurrence_coeffs(eff, epsilon2, j - 2)[0] if j >= 2 else 0.0
        B_jm1 = recurrence_coeffs(eff, epsilon2, j - 1)[1]
        C_j = recurrence_coeffs(eff, epsilon2, j)[2]
        prev2 = coeffs[j - 2] if j >= 2 else 0.0
        coeffs.append(-(A_jm2 * prev2 + B_jm1 * coeffs[j - 1]) / C_j)
    peak = max(abs(c) for c in coeffs[: s + 1])
    if max(abs(coeffs[s + 1]), abs(coeffs[s + 2])) > 1e-8 * peak:
        raise ConstraintViolation(s, residual)

    energy = energy_from_epsilon(eff, epsilon2)
    return SeriesSolution(
        s=s,
        coeffs=tuple(coeffs[: s + 1]),
        params=eff,
        epsilon2=epsilon2,
        energy=energy,
    )


def energy_from_epsilon(params: RadialParams, epsilon2: float) -> float:
    """Invert the energy scaling: E = d + hbar omega_c m'/2 - eps^2/(2mu/hbar^2)."""
    return (
        params.dprime / params.twomu
        + 0.5 * params.hbar_omega_c * params.mprime
        - epsilon2 / params.twomu
    )


def s1_g_strengths(params: RadialParams) -> tuple[float, float]:
    """The two Coulomb strengths g (eV*A) admitting a degree-1 solution.

    For gamma > 0 the degree-1 determinant B_0 B_1 - A_0 C_1 vanishes iff

        g' = 2 v (beta + 1) +/- sqrt(v^2 + 2 gamma (2 beta + 1)),  v = b'/(2 gamma)

    returned here in energy units (g = g' hbar^2/2mu).  Both roots are
    returned; callers select by physical admissibility (typically g > 0).
    """
    if params.gamma <= 0:
        raise ValueError("degree-1 strength relation requires gamma > 0")
    v = params.bprime / (2.0 * params.gamma)
    root = math.sqrt(v * v + 2.0 * params.gamma * (2.0 * params.beta + 1.0))
    base = 2.0 * v * (params.beta + 1.0)
    return ((base + root) / params.twomu, (base - root) / params.twomu)


def eval_radial_wavefunction(
    sol: SeriesSolution, r, form: Literal["R", "u"] = "R"
):
    """Evaluate the solution at radius r (scalar or array), unnormalized.

    ``form="R"`` returns the one-dimensional reduced function
    R(r) = r^(beta+1/2) exp(q r + p r^2/2) P(r); ``form="u"`` returns the
    planar radial factor u(r) = R(r)/sqrt(r).
    """
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("radius must be positive")
    params = sol.params
    power = params.beta + (0.5 if form == "R" else 0.0)
    if form not in ("R", "u"):
        raise ValueError(f"unknown wavefunction form: {form!r}")
    poly = np.zeros_like(r)
    for c in reversed(sol.coeffs):
        poly = poly * r + c
    value = r**power * np.exp(params.q * r + 0.5 * params.p * r * r) * poly
    return value if value.shape else float(value)


def normalize(sol: SeriesSolution, r_max: float) -> float:
    """Normalization constant N with integral of |N u|^2 r dr = 1 on (0, r_max).

    The planar measure integral equals the integral of |R|^2 dr, evaluated
    by adaptive quadrature to 1e-10 relative.  Requires the solution to have
    decayed at r_max: |u(r_max)|^2 < 1e-16 * peak.
    """
    samples = np.linspace(r_max * 1e-6, r_max, 2001)
    u2 = eval_radial_wavefunction(sol, samples, form="u") ** 2
    peak = float(np.max(u2))
    if peak <= 0 or u2[-1] >= 1e-16 * peak:
        raise ValueError(
            f"solution has not decayed at r_max={r_max}: "
            f"|u|^2 ratio {u2[-1] / peak if peak else math.inf:.2e}"
        )

    def integrand(r: float) -> float:
        return eval_radial_wavefunction(sol, r, form="R") ** 2

    total, _ = quad(integrand, 0.0, r_max, epsabs=0.0, epsrel=1e-10, limit=200)
    if total <= 0:
        raise ValueError("non-positive norm integral")
    return 1.0 / math.sqrt(total)
