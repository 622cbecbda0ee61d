"""Command-line front end.

Subcommands: gate (Berry phases and gate angles), apply (run the gate on a
state), concurrence, partition (phase classes, optionally checked against
the hypercube), fan (charts, rays, cones, moment polytope), render (SVG or
DOT figure). Exit codes: 0 success, 1 usage error, 2 domain error. Floats
are printed with 17 significant digits.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .phase_partition import (class_graph, intersection_summary,
                              is_hypercube_isomorphic, partition_to_text,
                              partition_vertices)
from .render import RenderSpec, render_partition_dot, render_partition_svg
from .spin_model import (BerryPhaseResult, DegenerateDrive, DiagonalTwoQubitGate,
                         PhysicalParams, berry_phases, cphase_gate)
from .statevec import (GatePlacement, apply_cphase, concurrence,
                       state_from_text, state_to_text, uniform_superposition)
from .toric_geometry import (NonSimplicialCone, NotFullDimensional, fan_to_text,
                             moment_polytope, polytope_to_text, product_p1_charts,
                             product_p1_fan)

USAGE_EXIT = 1
DOMAIN_EXIT = 2

_GATE_FLAGS = ("omega_i", "omega_j", "j", "omega", "omega1")


class UsageError(Exception):
    """Well-formed parse, but the flag combination makes no sense."""


class _Parser(argparse.ArgumentParser):
    # argparse defaults to exit code 2 on bad flags; usage errors are 1 here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _add_gate_flags(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--omega-i", dest="omega_i", type=float, required=required)
    parser.add_argument("--omega-j", dest="omega_j", type=float, required=required)
    parser.add_argument("--j", dest="j", type=float, required=required)
    parser.add_argument("--omega", dest="omega", type=float, required=required)
    parser.add_argument("--omega1", dest="omega1", type=float, required=required)


def _phases_from_args(args: argparse.Namespace) -> BerryPhaseResult:
    params = PhysicalParams(args.omega_i, args.omega_j, args.j,
                            args.omega, args.omega1)
    return berry_phases(params)


def _gate_from_args(args: argparse.Namespace) -> DiagonalTwoQubitGate:
    given = [getattr(args, name) is not None for name in _GATE_FLAGS]
    if args.phi1 is not None:
        if any(given):
            raise UsageError("pass either --phi1 or the spin drive flags, not both")
        return DiagonalTwoQubitGate.from_phi1(args.phi1)
    if all(given):
        return cphase_gate(_phases_from_args(args))
    if any(given):
        missing = [f"--{name.replace('_', '-')}"
                   for name, got in zip(_GATE_FLAGS, given) if not got]
        raise UsageError("spin drive flags are all-or-none; missing "
                         + " ".join(missing))
    raise UsageError("a gate is required: pass --phi1 or all of "
                     "--omega-i --omega-j --j --omega --omega1")


def _cmd_gate(args: argparse.Namespace) -> int:
    result = _phases_from_args(args)
    pairs = [
        ("cos_theta_plus", result.cos_theta_plus),
        ("cos_theta_minus", result.cos_theta_minus),
        ("theta_plus", result.theta_plus),
        ("theta_minus", result.theta_minus),
        ("gamma_plus", result.gamma_plus),
        ("gamma_minus", result.gamma_minus),
        ("shift", result.shift),
        ("phi1", result.phi_1),
        ("phi2", result.phi_2),
    ]
    if args.json:
        body = ", ".join(f'"{name}": {_fmt(value)}' for name, value in pairs)
        print("{" + body + "}")
    else:
        for name, value in pairs:
            print(f"{name} = {_fmt(value)}")
    return 0


def _cmd_apply(args: argparse.Namespace) -> int:
    if args.input is not None:
        state = state_from_text(Path(args.input).read_text())
        if args.n is not None and args.n != state.n_qubits:
            raise UsageError(
                f"--n {args.n} conflicts with the {state.n_qubits}-qubit input file")
    else:
        if args.n is None:
            raise UsageError("--n is required unless --input provides a state")
        state = uniform_superposition(args.n)
    gate = _gate_from_args(args)
    placement = GatePlacement(args.control, args.target)
    out = apply_cphase(state, gate, placement)
    sys.stdout.write(state_to_text(out))
    return 0


def _cmd_concurrence(args: argparse.Namespace) -> int:
    if args.input is not None:
        state = state_from_text(Path(args.input).read_text())
    else:
        gate = DiagonalTwoQubitGate.from_phi1(args.phi1)
        state = apply_cphase(uniform_superposition(2), gate, GatePlacement(1, 2))
    print(_fmt(concurrence(state)))
    return 0


def _cmd_partition(args: argparse.Namespace) -> int:
    partition = partition_vertices(args.n, GatePlacement(args.control, args.target))
    sys.stdout.write(partition_to_text(partition))
    if args.check_hypercube:
        for which in ("phi1", "phi2"):
            match = is_hypercube_isomorphic(class_graph(partition, which))
            verdict = "yes" if match.is_isomorphic else f"no ({match.failure})"
            print(f"{which} isomorphic to Q{match.dimension}: {verdict}")
        summary = intersection_summary(partition)
        print(f"crossing edges: {summary.crossing_edges}")
    return 0


def _cmd_fan(args: argparse.Namespace) -> int:
    n = args.n
    charts = product_p1_charts(n)
    fan = product_p1_fan(n)
    polytope = moment_polytope(n)
    lines = [f"dim={n}"]
    lines += ["chart " + " ".join(chart.tokens()) for chart in charts]
    lines += fan_to_text(fan).splitlines()[1:]
    lines += polytope_to_text(polytope).splitlines()[1:]
    print("\n".join(lines))
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    partition = partition_vertices(args.n, GatePlacement(args.control, args.target))
    if args.format == "svg":
        text = render_partition_svg(partition, RenderSpec.for_partition(partition))
    else:
        text = render_partition_dot(partition)
    Path(args.out).write_text(text)
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toricgate",
                     description="holonomic controlled-phase gates and the "
                                 "cube/toric structure of their phase classes")
    sub = parser.add_subparsers(dest="command", required=True)

    gate = sub.add_parser("gate", parents=[], help="Berry phases and gate angles")
    _add_gate_flags(gate, required=True)
    gate.add_argument("--json", action="store_true")
    gate.set_defaults(handler=_cmd_gate)

    apply_p = sub.add_parser("apply", help="apply the gate to a state")
    apply_p.add_argument("--n", type=int)
    apply_p.add_argument("--control", type=int, required=True)
    apply_p.add_argument("--target", type=int, required=True)
    apply_p.add_argument("--phi1", type=float)
    _add_gate_flags(apply_p, required=False)
    apply_p.add_argument("--input", type=str,
                         help="state file (defaults to the uniform superposition)")
    apply_p.set_defaults(handler=_cmd_apply)

    conc = sub.add_parser("concurrence", help="two-qubit concurrence")
    group = conc.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", type=str)
    group.add_argument("--phi1", type=float,
                       help="gate angle applied to the uniform two-qubit state")
    conc.set_defaults(handler=_cmd_concurrence)

    part = sub.add_parser("partition", help="phase classes of the n-cube")
    part.add_argument("--n", type=int, required=True)
    part.add_argument("--control", type=int, required=True)
    part.add_argument("--target", type=int, required=True)
    part.add_argument("--check-hypercube", action="store_true",
                      dest="check_hypercube")
    part.set_defaults(handler=_cmd_partition)

    fan = sub.add_parser("fan", help="charts, fan, and moment polytope of (P^1)^n")
    fan.add_argument("--n", type=int, required=True)
    fan.set_defaults(handler=_cmd_fan)

    render = sub.add_parser("render", help="draw a partition as SVG or DOT")
    render.add_argument("--n", type=int, required=True)
    render.add_argument("--control", type=int, required=True)
    render.add_argument("--target", type=int, required=True)
    render.add_argument("--format", choices=("svg", "dot"), required=True)
    render.add_argument("--out", type=str, required=True)
    render.set_defaults(handler=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (DegenerateDrive, NonSimplicialCone, NotFullDimensional,
            ValueError, OSError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return DOMAIN_EXIT


def run() -> None:
    sys.exit(main())
