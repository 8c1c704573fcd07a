"""Builders for three representations of the canonical commutation relations.

Each builder returns a :class:`Representation`: per-mode lowering operators
``a_k``, the central elements ``I_k`` with ``[a_m, a_n^dag] = delta_mn I_m``,
a vacuum vector annihilated by every ``a_k``, and the declared tensor
factorization of the field space.

Three constructions are provided:

* the familiar two-mode irreducible representation (one oscillator per
  mode, ``I_k`` the identity),
* the symmetric Fock space over an abstract orthonormal one-particle
  basis, built directly in the occupation-number basis with a total
  occupation cutoff (``I_k`` again the identity, vacuum unique),
* the reducible finite-ensemble representation: N oscillators, each
  carrying every mode, with collective operators
  ``a_k = (1/sqrt(N)) sum_n a_k^(n)`` whose central element has spectrum
  {s/N}. Its vacuum is a tensor power of a single-oscillator vacuum with
  per-mode probabilities Z_k.

The binomial/multinomial vacuum weights that govern the reducible
representation are evaluated in log space so they stay usable up to
ensembles of 10^6 oscillators.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, xlogy

from . import fock
from .exceptions import ConfigError, DomainError, SizeLimitError, ValidationError
from .linalg import (
    HilbertFactorization,
    StateVector,
    embed_operator,
    kron,
)

#: Profiles must carry unit total probability to this tolerance.
TOL_PROFILE = 1e-12
#: Default total-dimension ceiling for brute-force ensemble constructions.
BRUTE_FORCE_CEILING = 4096
#: Sums over ensemble sectors are exact up to this N; beyond it the
#: binomial support is windowed (tail mass < 1e-20).
EXACT_SUPPORT_LIMIT = 4000


@dataclass(frozen=True)
class VacuumProfile:
    """Vacuum amplitude O_k per wave-vector label, with Z_k = |O_k|^2.

    The probabilities must sum to one; ``z_max`` (the largest Z_k) is the
    renormalization constant of the reducible dynamics.
    """

    labels: tuple[str, ...]
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        labels = tuple(str(lab) for lab in self.labels)
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if len(labels) != amps.size:
            raise ValidationError(
                f"profile has {len(labels)} labels but {amps.size} amplitudes"
            )
        if len(set(labels)) != len(labels):
            raise ValidationError(f"profile labels must be unique, got {labels}")
        total = float(np.sum(np.abs(amps) ** 2))
        if abs(total - 1.0) > TOL_PROFILE:
            raise ValidationError(
                f"profile probabilities must sum to 1, got {total!r}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    @property
    def z_max(self) -> float:
        return float(np.max(self.probabilities))

    def probability(self, label: str) -> float:
        return float(self.probabilities[self.labels.index(label)])

    @classmethod
    def from_probabilities(cls, labels, probabilities) -> "VacuumProfile":
        """Profile with the conventional real nonnegative O_k = sqrt(Z_k)."""
        probs = np.asarray(probabilities, dtype=float)
        if np.any(probs < 0):
            raise ValidationError("probabilities must be nonnegative")
        return cls(tuple(labels), np.sqrt(probs).astype(complex))

    @classmethod
    def uniform(cls, n_modes: int) -> "VacuumProfile":
        """Flat profile Z_k = 1/n_modes over labels k1..k<n>."""
        if n_modes < 1:
            raise ValidationError("uniform profile needs at least one mode")
        labels = tuple(f"k{i + 1}" for i in range(n_modes))
        return cls.from_probabilities(labels, np.full(n_modes, 1.0 / n_modes))

    @classmethod
    def plateau(
        cls, n_modes: int, window: tuple[int, int] = (0, 1), rate: float = 1.0
    ) -> "VacuumProfile":
        """Plateau of height 1 over an index window with exponential rolloff.

        ``window`` gives inclusive start/stop indices; outside it the
        unnormalized weight decays as exp(-rate * distance). The result is
        normalized so the probabilities sum to one.
        """
        if n_modes < 1:
            raise ValidationError("plateau profile needs at least one mode")
        lo, hi = int(window[0]), int(window[1])
        if not (0 <= lo <= hi < n_modes):
            raise ValidationError(
                f"plateau window {window} out of range for {n_modes} modes"
            )
        if rate < 0:
            raise ValidationError(f"rolloff rate must be >= 0, got {rate}")
        idx = np.arange(n_modes)
        dist = np.where(idx < lo, lo - idx, np.where(idx > hi, idx - hi, 0))
        weights = np.exp(-rate * dist.astype(float))
        labels = tuple(f"k{i + 1}" for i in range(n_modes))
        return cls.from_probabilities(labels, weights / weights.sum())


@dataclass(frozen=True, eq=False)
class Representation:
    """A concrete realization of the mode algebra on a finite space.

    ``lowering[k]`` and ``central[k]`` act on the full field space whose
    tensor structure is ``factorization``; ``number_op`` is the total
    photon-number operator used for excitation bookkeeping, and
    ``below_cutoff_mask`` flags the basis states with one quantum of
    headroom everywhere (the subspace on which the commutation relations
    hold exactly despite truncation).
    """

    kind: str
    mode_labels: tuple[str, ...]
    lowering: dict[str, np.ndarray]
    central: dict[str, np.ndarray]
    vacuum: StateVector
    factorization: HilbertFactorization
    number_op: np.ndarray
    below_cutoff_mask: np.ndarray
    n_max: int | None = None
    total_cutoff: int | None = None
    n_oscillators: int | None = None
    profile: VacuumProfile | None = None

    @property
    def dim(self) -> int:
        return self.factorization.dim

    def raising(self, mode: str) -> np.ndarray:
        return self.lowering_of(mode).conj().T

    def lowering_of(self, mode: str) -> np.ndarray:
        try:
            return self.lowering[mode]
        except KeyError:
            raise ConfigError(
                f"representation has no mode {mode!r}; built modes: "
                f"{sorted(self.lowering)}"
            ) from None


@dataclass(frozen=True, eq=False)
class CentralSpectrum:
    """Spectral decomposition of a central element: I_k = sum_s (s/N) E_k(s)."""

    mode: str
    eigenvalues: np.ndarray
    projectors: tuple[np.ndarray, ...]


@dataclass(frozen=True)
class CcrReport:
    """Measured deviations from the mode algebra, per operator pair.

    ``commutator`` holds max |([a_m, a_n^dag] - delta_mn I_m) Q| with Q the
    projector onto the below-cutoff subspace; ``centrality`` the unrestricted
    commutators of I_k with every ladder operator; ``vacuum_annihilation``
    the norms |a_k vacuum|.
    """

    commutator: dict[tuple[str, str], float]
    centrality: dict[tuple[str, str], float]
    vacuum_annihilation: dict[str, float]

    @property
    def max_deviation(self) -> float:
        pools = (
            list(self.commutator.values())
            + list(self.centrality.values())
            + list(self.vacuum_annihilation.values())
        )
        return max(pools) if pools else 0.0


def build_infinity_two_mode(n_max: int) -> Representation:
    """Two-mode irreducible representation: a1 = a (x) I, a2 = I (x) a.

    Each mode owns one truncated oscillator factor; the central elements
    are identities and the vacuum is the joint ground state.
    """
    n_max = int(n_max)
    if n_max < 1:
        raise ConfigError(f"two-mode build needs n_max >= 1, got {n_max}")
    a = fock.annihilation(n_max)
    m = n_max + 1
    eye = np.eye(m, dtype=complex)
    fact = HilbertFactorization((("mode1", m), ("mode2", m)))
    lowering = {"mode1": kron(a, eye), "mode2": kron(eye, a)}
    identity = np.eye(m * m, dtype=complex)
    central = {"mode1": identity, "mode2": identity}
    vac = np.zeros(m * m, dtype=complex)
    vac[0] = 1.0
    number = kron(fock.number_operator(n_max), eye) + kron(
        eye, fock.number_operator(n_max)
    )
    occ = np.indices((m, m)).reshape(2, -1)
    mask = np.all(occ <= n_max - 1, axis=0)
    return Representation(
        kind="infinity",
        mode_labels=("mode1", "mode2"),
        lowering=lowering,
        central=central,
        vacuum=StateVector(vac, fact),
        factorization=fact,
        number_op=number,
        below_cutoff_mask=mask,
        n_max=n_max,
    )


def occupation_basis(n_modes: int, total_cutoff: int) -> list[tuple[int, ...]]:
    """All occupation tuples (n_1..n_d) with sum <= total_cutoff, lexicographic."""
    return [
        tup
        for tup in itertools.product(range(total_cutoff + 1), repeat=n_modes)
        if sum(tup) <= total_cutoff
    ]


def build_berezin(
    d: int, total_cutoff: int, selected_modes: list[int] | None = None
) -> Representation:
    """Symmetric Fock space over d abstract orthonormal modes, total cutoff.

    The field is a single tensor factor spanned by occupation tuples; the
    creation operator for mode n connects tuples differing by one quantum
    in slot n with matrix element sqrt(n_n + 1). The vacuum is the unique
    all-zero tuple. ``selected_modes`` are 1-based indices into the mode
    basis; operators are built only for those (default: all of them).
    """
    d = int(d)
    total_cutoff = int(total_cutoff)
    if d < 1:
        raise ConfigError(f"need at least one mode, got d={d}")
    if total_cutoff < 1:
        raise ConfigError(f"total cutoff must be >= 1, got {total_cutoff}")
    if selected_modes is None:
        selected_modes = list(range(1, d + 1))
    for n in selected_modes:
        if not 1 <= int(n) <= d:
            raise ConfigError(f"selected mode {n} out of range 1..{d}")

    basis = occupation_basis(d, total_cutoff)
    index = {tup: i for i, tup in enumerate(basis)}
    dim = len(basis)
    fact = HilbertFactorization((("field", dim),))

    lowering: dict[str, np.ndarray] = {}
    central: dict[str, np.ndarray] = {}
    identity = np.eye(dim, dtype=complex)
    labels = []
    for n in selected_modes:
        slot = int(n) - 1
        raising = np.zeros((dim, dim), dtype=complex)
        for tup, col in index.items():
            if sum(tup) + 1 > total_cutoff:
                continue
            bumped = tup[:slot] + (tup[slot] + 1,) + tup[slot + 1 :]
            raising[index[bumped], col] = math.sqrt(tup[slot] + 1)
        label = f"f{int(n)}"
        labels.append(label)
        lowering[label] = raising.conj().T
        central[label] = identity

    vac = np.zeros(dim, dtype=complex)
    vac[index[(0,) * d]] = 1.0
    totals = np.array([sum(tup) for tup in basis])
    number = np.diag(totals.astype(float)).astype(complex)
    mask = totals <= total_cutoff - 1
    return Representation(
        kind="berezin",
        mode_labels=tuple(labels),
        lowering=lowering,
        central=central,
        vacuum=StateVector(vac, fact),
        factorization=fact,
        number_op=number,
        below_cutoff_mask=mask,
        total_cutoff=total_cutoff,
    )


def _single_oscillator_mode_ops(
    profile: VacuumProfile, n_max: int
) -> tuple[dict[str, np.ndarray], dict[str, np.ndarray], np.ndarray, np.ndarray]:
    """One-oscillator building blocks on the |k, n> basis (k-major order)."""
    m = len(profile.labels)
    ladder_dim = n_max + 1
    a = fock.annihilation(n_max)
    eye_ladder = np.eye(ladder_dim, dtype=complex)
    lowering = {}
    projectors = {}
    for i, label in enumerate(profile.labels):
        pk = np.zeros((m, m), dtype=complex)
        pk[i, i] = 1.0
        lowering[label] = kron(pk, a)
        projectors[label] = kron(pk, eye_ladder)
    vac = kron_vector(profile.amplitudes, _ground_state(ladder_dim))
    number = kron(np.eye(m, dtype=complex), fock.number_operator(n_max))
    return lowering, projectors, vac, number


def _ground_state(dim: int) -> np.ndarray:
    e0 = np.zeros(dim, dtype=complex)
    e0[0] = 1.0
    return e0


def kron_vector(*vectors) -> np.ndarray:
    """Kronecker product of one or more vectors."""
    out = np.asarray(vectors[0], dtype=complex).reshape(-1)
    for v in vectors[1:]:
        out = np.kron(out, np.asarray(v, dtype=complex).reshape(-1))
    return out


def build_reducible(
    n_oscillators: int,
    profile: VacuumProfile,
    n_max: int = 1,
    selected_modes: list[str] | None = None,
    ceiling: int = BRUTE_FORCE_CEILING,
) -> Representation:
    """Reducible ensemble representation of N oscillators carrying all modes.

    Each factor is a copy of the |k, n> space (wave-vector label times
    ladder level); the built mode operators are the collective
    ``(1/sqrt(N)) sum_n a_k^(n)`` and ``(1/N) sum_n I_k^(n)``, and the
    vacuum is the N-fold tensor power of ``sum_k O_k |k, 0>``. Intended
    for brute-force work at small N; dimensions above ``ceiling`` raise.
    """
    n_osc = int(n_oscillators)
    if n_osc < 1:
        raise ConfigError(f"need at least one oscillator, got N={n_osc}")
    n_max = int(n_max)
    if n_max < 0:
        raise ConfigError(f"n_max must be >= 0, got {n_max}")
    labels = list(profile.labels) if selected_modes is None else list(selected_modes)
    for label in labels:
        if label not in profile.labels:
            raise ConfigError(
                f"selected mode {label!r} not in profile labels {profile.labels}"
            )

    m = len(profile.labels)
    factor_dim = m * (n_max + 1)
    total_dim = factor_dim**n_osc
    if total_dim > ceiling:
        raise SizeLimitError(
            f"field dimension {factor_dim}^{n_osc} = {total_dim} exceeds the "
            f"brute-force ceiling {ceiling}"
        )

    one_lowering, one_proj, one_vac, one_number = _single_oscillator_mode_ops(
        profile, n_max
    )
    dims = [factor_dim] * n_osc
    lowering = {}
    central = {}
    for label in labels:
        coll_a = np.zeros((total_dim, total_dim), dtype=complex)
        coll_i = np.zeros((total_dim, total_dim), dtype=complex)
        for slot in range(n_osc):
            coll_a += embed_operator(one_lowering[label], dims, slot)
            coll_i += embed_operator(one_proj[label], dims, slot)
        lowering[label] = coll_a / math.sqrt(n_osc)
        central[label] = coll_i / n_osc

    vac = kron_vector(*[one_vac] * n_osc)
    number = np.zeros((total_dim, total_dim), dtype=complex)
    for slot in range(n_osc):
        number += embed_operator(one_number, dims, slot)

    fact = HilbertFactorization(
        tuple((f"osc{i + 1}", factor_dim) for i in range(n_osc))
    )
    photon_level = np.arange(factor_dim) % (n_max + 1)
    factor_mask = photon_level <= n_max - 1
    mask = np.array([True])
    for _ in range(n_osc):
        mask = np.kron(mask, factor_mask)
    return Representation(
        kind="reducible",
        mode_labels=tuple(labels),
        lowering=lowering,
        central=central,
        vacuum=StateVector(vac, fact),
        factorization=fact,
        number_op=number,
        below_cutoff_mask=mask.astype(bool),
        n_max=n_max,
        n_oscillators=n_osc,
        profile=profile,
    )


def central_spectral_projectors(rep: Representation, mode: str) -> CentralSpectrum:
    """Spectral projectors E_k(s) of a collective central element.

    E_k(s) sums, over all s-subsets S of the N oscillators, the products
    of mode-k projectors on S and their complements elsewhere; the
    corresponding eigenvalue of I_k is s/N.
    """
    if rep.kind != "reducible":
        raise ConfigError(
            f"central spectral projectors require the reducible kind, got {rep.kind!r}"
        )
    if mode not in rep.mode_labels:
        raise ConfigError(f"unknown mode {mode!r}; built modes: {rep.mode_labels}")
    assert rep.profile is not None and rep.n_oscillators is not None
    assert rep.n_max is not None
    n_osc = rep.n_oscillators
    _, one_proj, _, _ = _single_oscillator_mode_ops(rep.profile, rep.n_max)
    pk = one_proj[mode]
    qk = np.eye(pk.shape[0], dtype=complex) - pk
    dims = [pk.shape[0]] * n_osc

    projectors = []
    for s in range(n_osc + 1):
        total = np.zeros((rep.dim, rep.dim), dtype=complex)
        for subset in itertools.combinations(range(n_osc), s):
            chosen = set(subset)
            parts = [pk if slot in chosen else qk for slot in range(n_osc)]
            total += kron(*parts)
        projectors.append(total)
    eigenvalues = np.arange(n_osc + 1) / n_osc
    return CentralSpectrum(
        mode=mode, eigenvalues=eigenvalues, projectors=tuple(projectors)
    )


def _check_probability(z: float, name: str) -> float:
    z = float(z)
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {z}")
    return z


def _check_count(n: int, s: int, name: str) -> int:
    s = int(s)
    if not 0 <= s <= n:
        raise DomainError(f"{name} must lie in 0..{n}, got {s}")
    return s


# Sector counts at or below this go through the exact small-coefficient
# table; larger ones through the Stirling branch (series error < 1e-15
# from 25 upward).
_SMALL_SECTOR = 24
_LD = np.longdouble


def _xlogy_ld(x: np.ndarray, y) -> np.ndarray:
    """x * log(y) with the 0 * log(0) = 0 convention, in extended precision."""
    x = np.asarray(x, dtype=_LD)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = x * np.log(np.asarray(y, dtype=_LD))
    return np.where(x == 0, _LD(0), out)


def _log_binom_small(n: int, k_max: int) -> np.ndarray:
    """ln C(n, k) for k = 0..k_max, by the exact product recurrence."""
    k_max = min(k_max, n)
    k = np.arange(1, k_max + 1, dtype=_LD)
    steps = np.log(_LD(n) - k + 1) - np.log(k)
    return np.concatenate([np.zeros(1, dtype=_LD), np.cumsum(steps)])


def _log_binom_stirling(n, s):
    """Half-log and correction pieces of Stirling's series for ln C(n, s).

    The entropy-like leading terms are assembled by the caller. Used only
    with min(s, n - s) > _SMALL_SECTOR, where the truncated series is
    accurate to ~1e-16. Arguments are extended-precision arrays.
    """
    r = n - s

    def corrections(x):
        inv = 1.0 / x
        inv2 = inv * inv
        return inv / 12 - inv * inv2 / 360 + inv * inv2 * inv2 / 1260 - inv * inv2**3 / 1680

    half = 0.5 * np.log(n / (_LD(2 * np.pi) * s * r))
    corr = corrections(n) - corrections(s) - corrections(r)
    return half, corr


def log_binomial_weights(n: int, s: np.ndarray, z: float) -> np.ndarray:
    """log of C(n, s) z^s (1-z)^(n-s), vectorized over s.

    Evaluated in extended precision with a cancellation-free Stirling
    form (a relative-entropy term plus corrections) in the bulk and exact
    small-coefficient logs near the edges, so weight sums stay within
    1e-12 of unity even at n = 10^6.
    """
    s = np.asarray(s)
    n_ld = _LD(n)
    z_ld = _LD(z)
    q_ld = _LD(1) - z_ld
    s_ld = s.astype(_LD)
    out = np.empty(s.shape, dtype=_LD)

    lo = s <= _SMALL_SECTOR
    hi = ~lo & (n - s <= _SMALL_SECTOR)
    mid = ~(lo | hi)

    if lo.any() or hi.any():
        table = _log_binom_small(n, _SMALL_SECTOR)
        edge = lo | hi
        idx = np.where(lo, s, n - s)[edge]
        out[edge] = (
            table[idx]
            + _xlogy_ld(s_ld[edge], z_ld)
            + _xlogy_ld(n_ld - s_ld[edge], q_ld)
        )
    if mid.any():
        sm = s_ld[mid]
        rm = n_ld - sm
        with np.errstate(divide="ignore", invalid="ignore"):
            # s ln(s/(nZ)) + (n-s) ln((n-s)/(n(1-Z))), the only large terms,
            # via log1p around the binomial mean to avoid cancellation
            t1 = sm * np.log1p((sm - n_ld * z_ld) / (n_ld * z_ld))
            t2 = rm * np.log1p((n_ld * z_ld - sm) / (n_ld * q_ld))
        half, corr = _log_binom_stirling(n_ld, sm)
        out[mid] = -(t1 + t2) + half + corr
    return out


def binomial_weights(n: int, s: np.ndarray, z: float) -> np.ndarray:
    """Binomial vacuum weights C(n, s) z^s (1-z)^(n-s) over an s array."""
    return np.exp(log_binomial_weights(n, s, z)).astype(float)


def log_joint_weights(
    n: int, s: np.ndarray, s_prime: np.ndarray, z1: float, z2: float
) -> np.ndarray:
    """log multinomial weight matrix over the outer grid s (rows) x s' (cols).

    Entries with s + s' > n are -inf (the coefficient vanishes there).
    """
    s = np.asarray(s, dtype=float)[:, None]
    sp = np.asarray(s_prime, dtype=float)[None, :]
    rest = n - s - sp
    rest_prob = max(1.0 - z1 - z2, 0.0)  # roundoff guard when z1 + z2 ~ 1
    with np.errstate(invalid="ignore"):
        out = (
            gammaln(n + 1)
            - gammaln(s + 1)
            - gammaln(sp + 1)
            - gammaln(np.where(rest >= 0, rest, 0) + 1)
            + xlogy(s, z1)
            + xlogy(sp, z2)
            + xlogy(np.where(rest >= 0, rest, 0), rest_prob)
        )
    return np.where(rest >= 0, out, -np.inf)


def binomial_support(n: int, z: float) -> np.ndarray:
    """Sector indices s carrying essentially all binomial mass.

    Exact (0..n) up to EXACT_SUPPORT_LIMIT; beyond that a window of ten
    standard deviations plus margin around the mean, whose excluded tail
    mass is below 1e-20.
    """
    if n <= EXACT_SUPPORT_LIMIT:
        return np.arange(n + 1)
    mean = n * z
    sigma = math.sqrt(n * z * (1.0 - z))
    lo = max(0, int(math.floor(mean - 10.0 * sigma - 25.0)))
    hi = min(n, int(math.ceil(mean + 10.0 * sigma + 25.0)))
    return np.arange(lo, hi + 1)


def vacuum_weight(
    n: int,
    s: int,
    z1: float,
    s_prime: int | None = None,
    z2: float | None = None,
) -> float:
    """Vacuum sector weight of the reducible representation.

    With only ``s``: the binomial C(n, s) z1^s (1-z1)^(n-s). With
    ``s_prime`` and ``z2``: the joint multinomial
    C(n; s, s') z1^s z2^s' (1-z1-z2)^(n-s-s'), exactly zero when s + s'
    exceeds n. Evaluated via log-gamma, stable up to n = 10^6.
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    s = _check_count(n, s, "s")
    z1 = _check_probability(z1, "z1")
    if (s_prime is None) != (z2 is None):
        raise DomainError("s_prime and z2 must be given together")
    if s_prime is None:
        return float(np.exp(log_binomial_weights(n, np.array([s]), z1))[0])
    s_prime = _check_count(n, s_prime, "s_prime")
    z2 = _check_probability(z2, "z2")
    if z1 + z2 > 1.0 + TOL_PROFILE:
        raise DomainError(f"z1 + z2 must be <= 1, got {z1 + z2}")
    if s + s_prime > n:
        return 0.0
    logw = log_joint_weights(n, np.array([s]), np.array([s_prime]), z1, z2)
    return float(np.exp(logw)[0, 0])


def mode_excitation_state(rep: Representation, mode: str) -> StateVector:
    """Normalized single-quantum state a_k^dag |vacuum> of one mode."""
    raised = rep.raising(mode) @ rep.vacuum.amplitudes
    state = StateVector(raised, rep.factorization)
    if state.norm < 1e-15:
        raise ValidationError(f"mode {mode!r} creates nothing from the vacuum")
    return state.normalized()


def ccr_check(rep: Representation) -> CcrReport:
    """Measure how well the built operators satisfy the mode algebra.

    Commutator deviations are evaluated with columns restricted to the
    below-cutoff subspace, where truncation is invisible; centrality and
    vacuum annihilation are unrestricted. Returns magnitudes only, never
    raises.
    """
    q = np.diag(rep.below_cutoff_mask.astype(float))
    commutator = {}
    centrality = {}
    vacuum = {}
    for m_lab in rep.mode_labels:
        a_m = rep.lowering[m_lab]
        vacuum[m_lab] = float(np.linalg.norm(a_m @ rep.vacuum.amplitudes))
        for n_lab in rep.mode_labels:
            ad_n = rep.raising(n_lab)
            comm = a_m @ ad_n - ad_n @ a_m
            if m_lab == n_lab:
                comm = comm - rep.central[m_lab]
            commutator[(m_lab, n_lab)] = float(np.max(np.abs(comm @ q)))
        i_m = rep.central[m_lab]
        for n_lab in rep.mode_labels:
            a_n = rep.lowering[n_lab]
            dev_a = float(np.max(np.abs(i_m @ a_n - a_n @ i_m)))
            dev_ad = float(
                np.max(np.abs(i_m @ a_n.conj().T - a_n.conj().T @ i_m))
            )
            centrality[(m_lab, n_lab)] = max(dev_a, dev_ad)
    return CcrReport(
        commutator=commutator,
        centrality=centrality,
        vacuum_annihilation=vacuum,
    )
