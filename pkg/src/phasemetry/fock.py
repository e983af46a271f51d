"""Single-mode bosonic states and operators in a truncated Fock basis.

Conventions used throughout the package:

* the basis is ``|0>, ..., |n_max - 1>``, all matrices are dense complex
  ``n_max x n_max`` arrays;
* quadratures are ``X = (a + a†)/sqrt(2)`` and ``Y = i(a† - a)/sqrt(2)``,
  so the vacuum variance is 1/2 per quadrature;
* the squeezing operator is ``S(r) = exp(r/2 (a†² - a²))`` with real ``r``;
  for ``r > 0`` it amplifies Var(X) to ``e^{2r}/2`` and reduces Var(Y) to
  ``e^{-2r}/2``;
* the displacement operator is ``D(alpha) = exp(alpha a† - alpha* a)``;
* the phase shifter is ``U(theta) = exp(-i theta a†a)``.

Unitaries are built by eigendecomposition of their (skew-)Hermitian
generators rather than by Pade scaling-and-squaring: the generators are
normal, the result is exactly unitary up to rounding, and the spectral
factorisation doubles as a diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TruncationError

__all__ = [
    "TruncationConfig",
    "ProbeParams",
    "paper_profile",
    "desk_profile",
    "annihilation_op",
    "creation_op",
    "number_op",
    "quadrature_op",
    "squeezing_op",
    "displacement_op",
    "phase_shift_op",
    "vacuum_state",
    "fock_state",
    "coherent_amplitudes",
    "squeezed_vacuum_amplitudes",
    "squeezed_displaced_vector",
    "squeezed_displaced_state",
    "expectation",
    "tail_population",
    "check_density_matrix",
]


@dataclass(frozen=True)
class TruncationConfig:
    """Hilbert-space truncation: dimension and admissible top-tail population.

    ``tail_tol`` bounds the population allowed in the top 5% of Fock levels
    of any constructed state; states that exceed it are rejected rather than
    silently degraded.
    """

    n_max: int
    tail_tol: float = 1e-8

    def __post_init__(self) -> None:
        if self.n_max < 2:
            raise ValueError(f"n_max must be >= 2, got {self.n_max}")
        if not 0.0 <= self.tail_tol < 1.0:
            raise ValueError(f"tail_tol must be in [0, 1), got {self.tail_tol}")

    @property
    def tail_start(self) -> int:
        """First Fock level counted as 'tail' (top 5% of the basis)."""
        return int(np.ceil(0.95 * self.n_max))


def paper_profile() -> TruncationConfig:
    """Full-accuracy profile: 600 levels, tight tail bound."""
    return TruncationConfig(n_max=600, tail_tol=1e-8)


def desk_profile() -> TruncationConfig:
    """Desk-scale profile for quick runs with alpha <= 4, |r| <= 1.

    The loose tail bound admits the most energetic desk-scale states
    (alpha = 4, r = 1 leaves ~1.4e-2 in the top 5% at 200 levels); use
    :func:`paper_profile` when absolute accuracy at the top of that range
    matters.
    """
    return TruncationConfig(n_max=200, tail_tol=2e-2)


@dataclass(frozen=True)
class ProbeParams:
    """Coherent amplitude and squeezing parameter of the probe, both real."""

    alpha: float
    r: float

    def __post_init__(self) -> None:
        # Real alpha and r maximise the phase sensitivity of the probe; the
        # package does not support complex values anywhere downstream.
        if isinstance(self.alpha, complex) or isinstance(self.r, complex):
            raise ValueError("alpha and r must be real")


# ---------------------------------------------------------------------------
# ladder operators


def annihilation_op(cfg: TruncationConfig) -> np.ndarray:
    """Lowering operator: <m|a|n> = sqrt(n) delta_{m,n-1}."""
    return np.diag(np.sqrt(np.arange(1, cfg.n_max, dtype=float)), k=1).astype(complex)


def creation_op(cfg: TruncationConfig) -> np.ndarray:
    """Raising operator, the adjoint of :func:`annihilation_op`."""
    return annihilation_op(cfg).conj().T


def number_op(cfg: TruncationConfig) -> np.ndarray:
    """Photon-number operator a†a, exactly diagonal in the truncated basis."""
    return np.diag(np.arange(cfg.n_max, dtype=float)).astype(complex)


def quadrature_op(phi: float, cfg: TruncationConfig) -> np.ndarray:
    """Rotated quadrature X_phi = (a e^{-i phi} + a† e^{i phi})/sqrt(2).

    ``phi = 0`` gives X, ``phi = pi/2`` gives Y.
    """
    a = annihilation_op(cfg)
    return (a * np.exp(-1j * phi) + a.conj().T * np.exp(1j * phi)) / np.sqrt(2.0)


# ---------------------------------------------------------------------------
# unitaries


def _expm_skew_hermitian(generator: np.ndarray) -> np.ndarray:
    """exp(K) for skew-Hermitian K, via eigendecomposition of iK.

    iK is Hermitian, so exp(K) = V diag(exp(-i w)) V† with real w; the
    result is unitary to machine precision by construction.
    """
    w, v = np.linalg.eigh(1j * generator)
    return (v * np.exp(-1j * w)) @ v.conj().T


def squeezing_op(r: float, cfg: TruncationConfig) -> np.ndarray:
    """Squeezing unitary S(r) = exp(r/2 (a†² - a²)) for real r.

    Raises :class:`TruncationError` when S(r)|0> leaves more than
    ``cfg.tail_tol`` population in the top 5% of levels, i.e. when the
    truncated matrix no longer represents the operator faithfully.
    """
    a = annihilation_op(cfg)
    ad = a.conj().T
    s = _expm_skew_hermitian(0.5 * r * (ad @ ad - a @ a))
    _require_tail(np.abs(s[:, 0]) ** 2, cfg, f"S({r})|0>")
    return s


def displacement_op(alpha: float, cfg: TruncationConfig) -> np.ndarray:
    """Displacement unitary D(alpha) = exp(alpha a† - alpha a) for real alpha."""
    a = annihilation_op(cfg)
    d = _expm_skew_hermitian(alpha * (a.conj().T - a))
    _require_tail(np.abs(d[:, 0]) ** 2, cfg, f"D({alpha})|0>")
    return d


def phase_shift_op(theta: float, cfg: TruncationConfig) -> np.ndarray:
    """Phase shifter U(theta) = diag(exp(-i theta n))."""
    return np.diag(np.exp(-1j * theta * np.arange(cfg.n_max)))


# ---------------------------------------------------------------------------
# states


def vacuum_state(cfg: TruncationConfig) -> np.ndarray:
    """Density matrix |0><0|."""
    return fock_state(0, cfg)


def fock_state(n: int, cfg: TruncationConfig) -> np.ndarray:
    """Density matrix |n><n|."""
    if not 0 <= n < cfg.n_max:
        raise ValueError(f"Fock level {n} outside basis of size {cfg.n_max}")
    rho = np.zeros((cfg.n_max, cfg.n_max), dtype=complex)
    rho[n, n] = 1.0
    return rho


def coherent_amplitudes(alpha: float, n_max: int) -> np.ndarray:
    """Closed-form Fock amplitudes of |alpha>: e^{-alpha²/2} alpha^n / sqrt(n!).

    Independent oracle for the matrix-exponential construction; evaluated
    by a stable running product.
    """
    c = np.empty(n_max)
    c[0] = np.exp(-0.5 * alpha * alpha)
    for n in range(1, n_max):
        c[n] = c[n - 1] * alpha / np.sqrt(n)
    return c


def squeezed_vacuum_amplitudes(r: float, n_max: int) -> np.ndarray:
    """Closed-form Fock amplitudes of S(r)|0>.

    Only even levels are populated:
    c_{2m} = (tanh r / 2)^m sqrt((2m)!) / m! / sqrt(cosh r),
    evaluated by the ratio recurrence c_{2m+2}/c_{2m} = tanh(r) sqrt((2m+1)(2m+2))/(2m+2).
    """
    c = np.zeros(n_max)
    c[0] = 1.0 / np.sqrt(np.cosh(r))
    t = np.tanh(r)
    for m in range(0, (n_max - 2) // 2 + 1):
        n = 2 * m
        if n + 2 >= n_max:
            break
        c[n + 2] = c[n] * t * np.sqrt((n + 1) * (n + 2)) / (n + 2)
    return c


def squeezed_displaced_vector(p: ProbeParams, cfg: TruncationConfig) -> np.ndarray:
    """State vector S(r) D(alpha) |0> (displacement acts first)."""
    d_col = displacement_op(p.alpha, cfg)[:, 0]
    psi = squeezing_op(p.r, cfg) @ d_col
    psi = psi / np.linalg.norm(psi)
    _require_tail(np.abs(psi) ** 2, cfg, f"S({p.r})D({p.alpha})|0>")
    return psi


def squeezed_displaced_state(p: ProbeParams, cfg: TruncationConfig) -> np.ndarray:
    """Rank-one density matrix of the squeezed displaced probe."""
    psi = squeezed_displaced_vector(p, cfg)
    return np.outer(psi, psi.conj())


# ---------------------------------------------------------------------------
# functionals and checks


def expectation(rho: np.ndarray, op: np.ndarray) -> complex:
    """Tr[rho op]."""
    if rho.shape != op.shape or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"dimension mismatch: rho {rho.shape} vs op {op.shape}")
    return complex(np.einsum("ij,ji->", rho, op))


def tail_population(state: np.ndarray, cfg: TruncationConfig) -> float:
    """Population in the top 5% of Fock levels of a vector or density matrix."""
    if state.ndim == 1:
        pops = np.abs(state) ** 2
    else:
        pops = np.diag(state).real
    return float(np.sum(pops[cfg.tail_start:]))


def _require_tail(pops: np.ndarray, cfg: TruncationConfig, label: str) -> None:
    tail = float(np.sum(pops[cfg.tail_start:]))
    if tail > cfg.tail_tol:
        raise TruncationError(
            f"{label}: population {tail:.3e} in levels >= {cfg.tail_start} "
            f"exceeds tail_tol {cfg.tail_tol:.1e}; increase n_max"
        )


def check_density_matrix(
    rho: np.ndarray,
    cfg: TruncationConfig,
    *,
    check_psd: bool = True,
) -> None:
    """Validate the density-matrix contract, raising on violation.

    Checks Hermiticity (1e-12 entrywise), unit trace (1e-10), truncation
    adequacy against ``cfg.tail_tol`` and, optionally, positive
    semidefiniteness (minimum eigenvalue >= -1e-10).  The PSD check costs a
    full eigendecomposition, so hot paths may skip it.
    """
    if rho.shape != (cfg.n_max, cfg.n_max):
        raise ValueError(f"shape {rho.shape} does not match n_max {cfg.n_max}")
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > 1e-12:
        raise ValueError(f"not Hermitian: max |rho - rho†| = {herm:.3e}")
    tr = np.trace(rho)
    if abs(tr - 1.0) > 1e-10:
        raise ValueError(f"trace deviates from 1 by {abs(tr - 1.0):.3e}")
    _require_tail(np.diag(rho).real, cfg, "density matrix")
    if check_psd:
        w_min = float(np.linalg.eigvalsh(rho)[0])
        if w_min < -1e-10:
            raise ValueError(f"not positive semidefinite: min eigenvalue {w_min:.3e}")
