"""Is a single-mode excitation entangled with the vacuum? Ask the representation.

The same physical state -- one quantum in one mode -- is a product state
in the two-oscillator representation, trivially unentangled in the
symmetric Fock space (whose vacuum is unique), and genuinely entangled
across the oscillator cuts of the reducible ensemble representation for
N > 1. The bipartite entropy below is exact; comparisons of the *degree*
of entanglement between representations remain measure-dependent, since
the subsystem counts differ.
"""

import numpy as np

from ccrlab import (
    Bipartition,
    VacuumProfile,
    build_infinity_two_mode,
    build_reducible,
    mode_excitation_state,
    schmidt_coefficients,
)
from ccrlab.entanglement import marginal_entropy

rep_inf = build_infinity_two_mode(1)
psi_inf = mode_excitation_state(rep_inf, "mode1")
s_inf = marginal_entropy(psi_inf, Bipartition(("mode1",)))
print(f"two-oscillator representation: S(mode1 | mode2) = {s_inf:.12f} nats")
print("  -> a product state; no entanglement with the other mode's vacuum")
print()

profile = VacuumProfile.uniform(2)
print("reducible ensemble: S(osc1 | remaining N-1 oscillators) for the")
print("normalized collective one-quantum state")
print(" N    entropy [nats]    Schmidt coefficients")
for n in (1, 2, 3, 4):
    rep = build_reducible(n, profile, n_max=1)
    psi = mode_excitation_state(rep, "k1")
    s = marginal_entropy(psi, Bipartition(("osc1",)))
    sv = schmidt_coefficients(psi, Bipartition(("osc1",)))
    shown = np.round(sv[sv > 1e-12], 6)
    print(f" {n}    {s:14.12f}    {shown}")
print()
print("The excitation is spread evenly over the N oscillators (a W-type")
print("structure), so the 1|(N-1) cut carries entropy -1/N ln 1/N -")
print("(N-1)/N ln (N-1)/N: zero only in the degenerate N = 1 case.")
