#!/usr/bin/env python3
"""How much entanglement the conditional phase creates from a product state.

Applies the gate to the uniform two-qubit superposition and tracks the
concurrence, which follows |sin 2*phi1| exactly.
"""

import math

import numpy as np

from toricgate import (DiagonalTwoQubitGate, GatePlacement, apply_cphase,
                       concurrence, uniform_superposition)

base = uniform_superposition(2)
placement = GatePlacement(control=1, target=2)

print(f"{'phi1':>10} {'concurrence':>12} {'|sin 2*phi1|':>13}")
for k in range(13):
    phi1 = k * math.pi / 12.0
    out = apply_cphase(base, DiagonalTwoQubitGate.from_phi1(phi1), placement)
    c = concurrence(out)
    print(f"{phi1:10.4f} {c:12.6f} {abs(math.sin(2 * phi1)):13.6f}")

print()
print("maximally entangling at phi1 = pi/4:")
out = apply_cphase(base, DiagonalTwoQubitGate.from_phi1(math.pi / 4), placement)
print("  amplitudes:", np.round(out.amplitudes, 6))
print("  concurrence:", concurrence(out))

# The identity (phi1 = 0) and the full turn (phi1 = pi) both leave the state
# separable even though the full turn is not the identity gate.
for phi1 in (0.0, math.pi):
    out = apply_cphase(base, DiagonalTwoQubitGate.from_phi1(phi1), placement)
    print(f"  phi1 = {phi1:.4f}: concurrence = {concurrence(out):.12f}")
