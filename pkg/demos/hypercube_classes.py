#!/usr/bin/env python3
"""The two phase classes of a placed gate form diagonal sub-hypercubes.

For every qubit count and placement the class on either phase, walked by
free-bit flips plus the joint control-target flip, is a copy of Q_(n-1).
"""

from toricgate import (GatePlacement, class_graph, drop_target_bit,
                       intersection_summary, is_connected,
                       is_hypercube_isomorphic, partition_to_text,
                       partition_vertices)

partition = partition_vertices(3, GatePlacement(control=2, target=3))
print(partition_to_text(partition))

graph = class_graph(partition, "phi1")
print("phi1 class edges:", graph.edges)
print("diagonal edges:  ", graph.diagonal_edges())
print("connected:       ", is_connected(graph))
print()

match = is_hypercube_isomorphic(graph)
print(f"isomorphic to Q_{match.dimension}: {match.is_isomorphic}")
print("witness (vertex -> cube label):")
for vertex, label in match.vertex_map:
    print(f"  {vertex:03b} -> {label:02b}")
print()

# The witness just deletes the target bit.
print("drop_target_bit(0b110, 3, target=3) =",
      format(drop_target_bit(0b110, 3, 3), "02b"))
print()

summary = intersection_summary(partition)
print(f"shared vertices: {summary.shared_vertices}")
print(f"crossing edges:  {summary.crossing_edges} of {summary.ambient_edges} ambient")
print()

print("crossing-edge law 2^n across sizes and placements:")
for n in (2, 3, 4, 6, 8):
    counts = set()
    for control in range(1, n + 1):
        for target in range(1, n + 1):
            if control == target:
                continue
            p = partition_vertices(n, GatePlacement(control, target))
            counts.add(intersection_summary(p).crossing_edges)
    print(f"  n = {n}: crossing counts {sorted(counts)} (2^n = {2 ** n})")
