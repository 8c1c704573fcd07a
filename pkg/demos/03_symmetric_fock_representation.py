"""Symmetric Fock space over abstract modes: same physics, no photon entanglement.

Quantizing with a single symmetric Fock factor (occupation tuples over an
orthonormal one-particle basis, unique vacuum), the same one-photon
superposition is a plain basis vector of one tensor factor: the initial
state is an explicit product of three subsystems, and there is nothing
for an entanglement measure to see. The atoms still reach the same Bell
state, because here the propagator is NOT a product across any split that
separates the atoms.
"""

import math

import numpy as np

from ccrlab import (
    Bipartition,
    build_berezin,
    build_infinity_two_mode,
    jc_hamiltonian,
    operator_schmidt_coefficients,
    rho_atoms_irreducible,
    schmidt_coefficients,
    single_photon_initial_state,
    trace_distance,
    expm_generator,
)
from ccrlab.dynamics import coupled_factorization
from ccrlab.scenarios import simulated_atomic_density

rep = build_berezin(2, 1)
print(f"field dimension (occupation tuples with at most one quantum): {rep.dim}")

psi0 = single_photon_initial_state(rep, ("f1", "f2"))
sv = schmidt_coefficients(psi0, Bipartition(("atom1", "atom2")))
print(f"initial atoms|field Schmidt coefficients: {np.round(sv, 12)}")
print("  -> rank 1: a product state, no entanglement to account for")
print()

h = jc_hamiltonian(rep, [("f1", 0), ("f2", 1)])
fact = coupled_factorization(rep)
print(" t/pi   op-Schmidt #2 (atom1 | rest)   op-Schmidt #2 (atom1+field | atom2)")
for frac in (0.125, 0.25, 0.5):
    t = frac * math.pi
    u = expm_generator(h, t)
    s_a = operator_schmidt_coefficients(u, fact, Bipartition(("atom1",)))[1]
    s_af = operator_schmidt_coefficients(u, fact, Bipartition(("atom1", "field")))[1]
    print(f" {frac:4.3f}   {s_a:28.6f}   {s_af:33.6f}")
print("  -> nonzero: the dynamics is not a product across any atom split")
print()

rep_two_osc = build_infinity_two_mode(1)
worst = max(
    trace_distance(
        simulated_atomic_density(rep, t, ("f1", "f2")),
        rho_atoms_irreducible(t),
    )
    for t in (0.0, math.pi / 4, math.pi / 2)
)
print(f"atomic density vs closed form, worst over grid: {worst:.2e}")
print("Identical atomic physics, opposite entanglement bookkeeping: the")
print("question 'was the photon entangled with vacuum' has no")
print("representation-independent answer.")
