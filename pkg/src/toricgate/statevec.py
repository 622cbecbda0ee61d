"""Dense multi-qubit state vectors and the diagonal controlled-phase action.

States are plain numpy amplitude arrays of length 2^n with the bit
convention of `bits` (qubit 1 is the most significant bit). A diagonal
(a, b, b, a) gate placed on any control/target pair multiplies each
amplitude by `a` where the two bits agree and by `b` where they differ,
which is why the placement is symmetric under swapping control and target.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .bits import MAX_QUBITS, bitstring
from .spin_model import DiagonalTwoQubitGate

_NORM_TOL = 1e-9
_HEADER = re.compile(r"n=(\d+)$")


@dataclass(frozen=True)
class GatePlacement:
    """Control/target qubit slots (1-based) a two-qubit gate occupies."""

    control: int
    target: int

    def __post_init__(self) -> None:
        if self.control < 1 or self.target < 1:
            raise ValueError("qubit slots are 1-based")
        if self.control == self.target:
            raise ValueError("control and target must be distinct")


class StateVector:
    """Normalized n-qubit amplitude vector, immutable after construction."""

    __slots__ = ("amplitudes", "n_qubits")

    def __init__(self, amplitudes) -> None:
        amps = np.array(amplitudes, dtype=complex)
        if amps.ndim != 1:
            raise ValueError("amplitudes must form a one-dimensional array")
        size = amps.size
        n = size.bit_length() - 1
        if size < 2 or size != 1 << n:
            raise ValueError("amplitude count must be a power of two, at least 2")
        if n > MAX_QUBITS:
            raise ValueError(f"dense representation is capped at {MAX_QUBITS} qubits")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > _NORM_TOL:
            raise ValueError(f"state is not normalized: |psi|^2 = {norm_sq!r}")
        amps.flags.writeable = False
        self.amplitudes = amps
        self.n_qubits = n

    def __repr__(self) -> str:
        return f"StateVector(n_qubits={self.n_qubits})"


def uniform_superposition(n_qubits: int) -> StateVector:
    """Hadamard-on-every-qubit state: all 2^n amplitudes equal to 2^(-n/2)."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ValueError(f"n_qubits must lie in 1..{MAX_QUBITS}")
    amp = 1.0 / math.sqrt(2 ** n_qubits)
    return StateVector(np.full(1 << n_qubits, amp, dtype=complex))


def _check_placement(placement: GatePlacement, n_qubits: int) -> None:
    if placement.control > n_qubits or placement.target > n_qubits:
        raise ValueError(
            f"placement {placement} is out of range for {n_qubits} qubits")


def apply_cphase(state: StateVector, gate: DiagonalTwoQubitGate,
                 placement: GatePlacement) -> StateVector:
    """Apply a diagonal (a, b, b, a) gate on the given control/target pair.

    Amplitudes whose control and target bits agree are scaled by the gate's
    equal-bits factor, the rest by the unequal-bits factor. Norm is
    preserved and gates on disjoint placements commute.
    """
    n = state.n_qubits
    _check_placement(placement, n)
    idx = np.arange(state.amplitudes.size)
    control_bits = (idx >> (n - placement.control)) & 1
    target_bits = (idx >> (n - placement.target)) & 1
    factors = np.where(control_bits == target_bits,
                       gate.equal_bits_factor, gate.unequal_bits_factor)
    return StateVector(state.amplitudes * factors)


def concurrence(state: StateVector) -> float:
    """Pure-state concurrence 2*|a00*a11 - a01*a10| of a two-qubit state."""
    if state.n_qubits != 2:
        raise ValueError("concurrence requires exactly two qubits")
    a = state.amplitudes
    value = 2.0 * abs(a[0] * a[3] - a[1] * a[2])
    # unit-norm states bound this by 1 up to roundoff
    return min(value, 1.0)


def extract_phase_classes(state: StateVector,
                          tolerance: float = 1e-9) -> list[frozenset[int]]:
    """Group basis indices whose amplitudes coincide within `tolerance`.

    Indices with amplitude within `tolerance` of zero are left out. Matching
    is greedy against the first member of each class, scanning indices in
    ascending order, which is unambiguous whenever distinct amplitude values
    are separated by more than twice the tolerance. Classes come back
    ordered by their smallest member.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    members: list[list[int]] = []
    reps: list[complex] = []
    for index, amp in enumerate(state.amplitudes):
        value = complex(amp)
        if abs(value) <= tolerance:
            continue
        for k, rep in enumerate(reps):
            if abs(value - rep) <= tolerance:
                members[k].append(index)
                break
        else:
            members.append([index])
            reps.append(value)
    return [frozenset(group) for group in members]


def state_to_text(state: StateVector) -> str:
    """Serialize as `n=<int>` then one `<bits> <re> <im>` line per basis index."""
    lines = [f"n={state.n_qubits}"]
    for index in range(state.amplitudes.size):
        amp = state.amplitudes[index]
        lines.append(f"{bitstring(index, state.n_qubits)} "
                     f"{amp.real:.17g} {amp.imag:.17g}")
    return "\n".join(lines) + "\n"


def state_from_text(text: str) -> StateVector:
    """Parse the `state_to_text` format; every basis index must appear exactly once."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty state text")
    header = _HEADER.match(lines[0])
    if header is None:
        raise ValueError(f"expected 'n=<int>' header, got {lines[0]!r}")
    n = int(header.group(1))
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count must lie in 1..{MAX_QUBITS}")
    size = 1 << n
    if len(lines) - 1 != size:
        raise ValueError(f"expected {size} amplitude lines, got {len(lines) - 1}")
    amps = np.zeros(size, dtype=complex)
    seen: set[int] = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"malformed amplitude line {line!r}")
        bits, re_part, im_part = parts
        if len(bits) != n or set(bits) - {"0", "1"}:
            raise ValueError(f"malformed bit string {bits!r}")
        index = int(bits, 2)
        if index in seen:
            raise ValueError(f"duplicate basis index {bits!r}")
        seen.add(index)
        amps[index] = float(re_part) + 1j * float(im_part)
    return StateVector(amps)
