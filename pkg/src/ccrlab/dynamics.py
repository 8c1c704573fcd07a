"""Excitation-exchange dynamics of two two-level atoms coupled to field modes.

The coupling Hamiltonian has the block form ``H = R^dag (x) A + R (x) A^dag``
with ``R`` the atomic lowering operator, so its unitary is available in
closed form: cosine blocks of ``A A^dag`` and ``A^dag A`` on the diagonal,
sinc blocks off it. Everything else in the module is built on top of that
identity: the two-atom Jaynes-Cummings-type Hamiltonian, brute-force state
evolution, and the closed-form atomic density matrices of the irreducible,
finite-ensemble, and infinite-ensemble cases.

Conventions: coupling constant and hbar are 1, time is a dimensionless
phase. Atom basis index 0 is the excited state |+>, index 1 the ground
state |->. Two-atom density matrices use the product basis
(|++>, |+->, |-+>, |-->).
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .exceptions import ConfigError, DomainError, ValidationError
from .linalg import (
    HilbertFactorization,
    StateVector,
    as_complex_matrix,
    expm_generator,
    kron,
    matrix_function_psd,
    require_square,
    sinc_scaled,
)
from .representations import (
    Representation,
    binomial_support,
    kron_vector,
    log_binomial_weights,
    log_joint_weights,
)

#: Atomic lowering operator R: |+> -> |->, R^2 = 0.
ATOM_LOWERING = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)
#: Excited and ground kets in the (|+>, |->) basis.
KET_EXCITED = np.array([1.0, 0.0], dtype=complex)
KET_GROUND = np.array([0.0, 1.0], dtype=complex)

#: Indices into the two-atom basis (|++>, |+->, |-+>, |-->).
IDX_PP, IDX_PM, IDX_MP, IDX_MM = 0, 1, 2, 3

#: Maximum ensemble size accepted by the closed-form density matrix.
MAX_ENSEMBLE = 10**6

#: Row-chunk budget for the joint sector sum (entries per chunk).
_JOINT_CHUNK = 4_000_000


def closed_form_evolution(a, t: float) -> np.ndarray:
    """Closed-form unitary exp(-i H t) for ``H = R^dag (x) A + R (x) A^dag``.

    Returns the block matrix

        [[cos(t sqrt(A A^dag)),        -i t sinc(t sqrt(A A^dag)) A   ],
         [-i t sinc(t sqrt(A^dag A)) A^dag,  cos(t sqrt(A^dag A))     ]]

    which is exact for any square ``A`` (both square roots act on positive
    operators). The atom factor is ordered (|+>, |->).
    """
    arr = require_square(a, "coupling operator")
    t = float(t)
    aad = arr @ arr.conj().T
    ada = arr.conj().T @ arr
    cos_up = matrix_function_psd(aad, lambda x: math.cos(t * math.sqrt(x)))
    cos_dn = matrix_function_psd(ada, lambda x: math.cos(t * math.sqrt(x)))
    sinc_up = matrix_function_psd(aad, lambda x: sinc_scaled(x, t))
    sinc_dn = matrix_function_psd(ada, lambda x: sinc_scaled(x, t))
    return np.block(
        [
            [cos_up, -1j * t * (sinc_up @ arr)],
            [-1j * t * (sinc_dn @ arr.conj().T), cos_dn],
        ]
    )


def coupled_factorization(rep: Representation) -> HilbertFactorization:
    """Factorization of the full atom1 (x) atom2 (x) field space."""
    atoms = HilbertFactorization((("atom1", 2), ("atom2", 2)))
    return atoms.joined_with(rep.factorization)


def _atom_operator(op: np.ndarray, slot: int) -> np.ndarray:
    eye = np.eye(2, dtype=complex)
    if slot == 0:
        return kron(op, eye)
    if slot == 1:
        return kron(eye, op)
    raise ConfigError(f"atom slot must be 0 or 1, got {slot}")


def jc_hamiltonian(
    rep: Representation, mode_atom_pairs: Sequence[tuple[str, int]]
) -> np.ndarray:
    """Excitation-conserving coupling H = sum_k (R_k^dag (x) i a_k - h.c.).

    ``mode_atom_pairs`` assigns each coupled atom (slot 0 or 1) to one
    field mode of ``rep``; an atom may appear at most once. The result is
    a Hermitian matrix on atom1 (x) atom2 (x) field that commutes with
    the total excitation number.
    """
    seen_atoms: set[int] = set()
    dim_f = rep.dim
    h = np.zeros((4 * dim_f, 4 * dim_f), dtype=complex)
    for mode, atom in mode_atom_pairs:
        if atom in seen_atoms:
            raise ConfigError(f"atom slot {atom} assigned to more than one mode")
        seen_atoms.add(atom)
        a_k = rep.lowering_of(mode)
        r = _atom_operator(ATOM_LOWERING, atom)
        h += kron(r.conj().T, 1j * a_k) + kron(r, -1j * a_k.conj().T)
    return h


def excitation_number_operator(rep: Representation) -> np.ndarray:
    """Total excitation number: atomic populations plus photon number."""
    eye_f = np.eye(rep.dim, dtype=complex)
    r_up = ATOM_LOWERING.conj().T @ ATOM_LOWERING
    n_atoms = kron(_atom_operator(r_up, 0), eye_f) + kron(
        _atom_operator(r_up, 1), eye_f
    )
    return n_atoms + kron(np.eye(4, dtype=complex), rep.number_op)


def single_photon_initial_state(
    rep: Representation, modes: tuple[str, str]
) -> StateVector:
    """Both atoms in the ground state, one photon shared by two modes.

    The field part is ``(a_k1^dag + a_k2^dag)/sqrt(2)`` applied to the
    representation's vacuum and then normalized explicitly (for the
    ensemble vacuum the raw norm is sqrt((Z_1 + Z_2)/2), compare
    :func:`normalization_constant`).
    """
    k1, k2 = modes
    photon = (
        (rep.raising(k1) + rep.raising(k2)) @ rep.vacuum.amplitudes
    ) / math.sqrt(2.0)
    field = StateVector(photon, rep.factorization).normalized()
    full = kron_vector(KET_GROUND, KET_GROUND, field.amplitudes)
    return StateVector(full, coupled_factorization(rep))


def evolve(
    rep: Representation,
    h,
    psi0: StateVector,
    t: float,
    renormalize: bool = False,
) -> StateVector:
    """Propagate ``psi0`` with exp(-i H_eff t).

    With ``renormalize`` the generator is H / sqrt(Z), Z being the largest
    vacuum probability of the representation's profile (the ensemble
    dynamics runs on the renormalized generator); otherwise H itself.
    """
    h = as_complex_matrix(h, "hamiltonian")
    if h.shape[0] != psi0.dim:
        raise ValidationError(
            f"dimension mismatch: hamiltonian is {h.shape[0]}, state is {psi0.dim}"
        )
    if renormalize:
        if rep.profile is None:
            raise ConfigError(
                "renormalized evolution needs a representation with a vacuum profile"
            )
        h = h / math.sqrt(rep.profile.z_max)
    u = expm_generator(h, float(t))
    return StateVector(u @ psi0.amplitudes, psi0.factorization)


def normalization_constant(z1: float, z2: float) -> float:
    """Prefactor sqrt(2 / (Z1 + Z2)) normalizing the shared-photon state."""
    total = float(z1) + float(z2)
    if total <= 0.0:
        raise DomainError(f"z1 + z2 must be positive, got {total}")
    return math.sqrt(2.0 / total)


def rho_atoms_irreducible(t: float) -> np.ndarray:
    """Two-atom density matrix after time t, any irreducible representation.

    cos^2(t) on |--><--| plus a symmetric one-excitation block of weight
    sin^2(t); maximally entangled at t = pi/2.
    """
    t = float(t)
    rho = np.zeros((4, 4), dtype=complex)
    c2 = math.cos(t) ** 2
    s2 = math.sin(t) ** 2
    rho[IDX_MM, IDX_MM] = c2
    rho[IDX_PM, IDX_PM] = s2 / 2.0
    rho[IDX_MP, IDX_MP] = s2 / 2.0
    rho[IDX_PM, IDX_MP] = s2 / 2.0
    rho[IDX_MP, IDX_PM] = s2 / 2.0
    return rho


def _check_ensemble_params(n: int, z1: float, z2: float, z: float) -> tuple:
    n = int(n)
    if n < 1:
        raise DomainError(f"ensemble size must be >= 1, got {n}")
    if n > MAX_ENSEMBLE:
        raise DomainError(f"ensemble size {n} exceeds the supported {MAX_ENSEMBLE}")
    z1, z2, z = float(z1), float(z2), float(z)
    if z1 <= 0.0 or z2 <= 0.0:
        raise DomainError(f"mode probabilities must be positive, got {z1}, {z2}")
    if z1 + z2 > 1.0 + 1e-12:
        raise DomainError(f"z1 + z2 must be <= 1, got {z1 + z2}")
    if z < max(z1, z2) - 1e-12:
        raise DomainError(
            f"renormalization constant z = {z} must be >= max(z1, z2) = {max(z1, z2)}"
        )
    return n, z1, z2, z


def rho_atoms_reducible(
    t: float, n: int, z1: float, z2: float, z: float
) -> np.ndarray:
    """Two-atom density matrix for the N-oscillator reducible representation.

    Sector sums over the spectrum {s/N} of the central elements: diagonal
    terms carry binomial vacuum weights per mode, the |+-><-+| coherence
    carries the joint multinomial weight (which vanishes identically for
    s + s' > N, killing the coherence at N = 1). Oscillation frequencies
    are sqrt(s/(N Z)) as produced by the H/sqrt(Z) generator.
    """
    n, z1, z2, z = _check_ensemble_params(n, z1, z2, z)
    t = float(t)

    def sector_values(support: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        ratio = support / n
        theta = t * np.sqrt(ratio / z)
        return ratio, theta

    s1 = binomial_support(n, z1)
    s2 = binomial_support(n, z2)
    w1 = np.exp(log_binomial_weights(n, s1, z1))
    w2 = np.exp(log_binomial_weights(n, s2, z2))
    ratio1, theta1 = sector_values(s1)
    ratio2, theta2 = sector_values(s2)

    norm = 1.0 / (z1 + z2)
    pop_mm = norm * (
        float(np.sum(np.cos(theta1) ** 2 * ratio1 * w1))
        + float(np.sum(np.cos(theta2) ** 2 * ratio2 * w2))
    )
    pop_pm = norm * float(np.sum(np.sin(theta1) ** 2 * ratio1 * w1))
    pop_mp = norm * float(np.sum(np.sin(theta2) ** 2 * ratio2 * w2))

    # Joint multinomial sum, chunked over rows to bound memory at large N.
    f1 = np.sin(theta1) * np.sqrt(ratio1)
    f2 = np.sin(theta2) * np.sqrt(ratio2)
    coherence = 0.0
    step = max(1, _JOINT_CHUNK // max(1, s2.size))
    for start in range(0, s1.size, step):
        stop = min(start + step, s1.size)
        logw = log_joint_weights(n, s1[start:stop], s2, z1, z2)
        coherence += float(f1[start:stop] @ np.exp(logw) @ f2)
    coherence *= norm

    rho = np.zeros((4, 4), dtype=complex)
    rho[IDX_MM, IDX_MM] = pop_mm
    rho[IDX_PM, IDX_PM] = pop_pm
    rho[IDX_MP, IDX_MP] = pop_mp
    rho[IDX_PM, IDX_MP] = coherence
    rho[IDX_MP, IDX_PM] = coherence
    return rho


def rho_atoms_limit(t: float, z1: float, z2: float, z: float) -> np.ndarray:
    """Large-ensemble limit of :func:`rho_atoms_reducible`.

    The sector sums concentrate at s/N = Z_k, leaving mode frequencies
    sqrt(Z_k / Z); with Z1 = Z2 = Z this reduces to
    :func:`rho_atoms_irreducible`.
    """
    _, z1, z2, z = _check_ensemble_params(1, z1, z2, z)
    t = float(t)
    w1 = z1 / (z1 + z2)
    w2 = z2 / (z1 + z2)
    th1 = t * math.sqrt(z1 / z)
    th2 = t * math.sqrt(z2 / z)
    rho = np.zeros((4, 4), dtype=complex)
    rho[IDX_MM, IDX_MM] = w1 * math.cos(th1) ** 2 + w2 * math.cos(th2) ** 2
    rho[IDX_PM, IDX_PM] = w1 * math.sin(th1) ** 2
    rho[IDX_MP, IDX_MP] = w2 * math.sin(th2) ** 2
    coherence = math.sqrt(w1 * w2) * math.sin(th1) * math.sin(th2)
    rho[IDX_PM, IDX_MP] = coherence
    rho[IDX_MP, IDX_PM] = coherence
    return rho
