"""Bit-ordering convention shared across the package.

A basis index x encodes the string x1 x2 ... xn with qubit 1 as the most
significant bit, so |x1 x2 ... xn> sits at index sum_k x_k * 2^(n-k).
Every module reads bits through these helpers so the convention cannot
drift between the state vectors, the partitions, and the renderers.
"""
from __future__ import annotations

MAX_QUBITS = 24


def bit_at(index: int, qubit: int, n_qubits: int) -> int:
    """Bit of `qubit` (1-based, most significant first) in an n-qubit basis index."""
    return (index >> (n_qubits - qubit)) & 1


def bitstring(index: int, n_qubits: int) -> str:
    """Basis index rendered as its n-character bit string."""
    return format(index, f"0{n_qubits}b")


def index_of(bits: str) -> int:
    """Inverse of `bitstring`."""
    return int(bits, 2)
