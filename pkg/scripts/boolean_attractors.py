#!/usr/bin/env python3
"""Survey a Boolean network: fixed points, attractors and basin sizes.

For every 0/1 assignment of the network's parameters this prints the fixed
points (computed algebraically and cross-checked by enumeration) and the
attractor census of the full 2^n state graph.

Usage:
    python3 scripts/boolean_attractors.py [model.bn]

With no argument the bundled lac network is analyzed.
"""

import argparse
import itertools
import sys

from operon import load_network, model_path


def bits(state) -> str:
    return "".join(str(b) for b in state)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("model", nargs="?", default=model_path("lac.bn"),
                    help="network file (default: bundled lac model)")
    args = ap.parse_args(argv)

    net = load_network(args.model)
    print(f"network {net.name}: {len(net.vars)} variables "
          f"({', '.join(net.vars)}), parameters: {', '.join(net.params) or 'none'}")
    print()

    for combo in itertools.product((0, 1), repeat=len(net.params)):
        setting = dict(zip(net.params, combo))
        label = ",".join(f"{k}={v}" for k, v in setting.items()) or "(no parameters)"

        algebra = net.fixed_points(setting, method="groebner")
        brute = net.fixed_points(setting, method="enumerate")
        if algebra != brute:
            print(f"{label}: METHOD DISAGREEMENT {algebra} vs {brute}", file=sys.stderr)
            return 1

        graph = net.state_graph(setting)
        print(f"{label}:")
        shown = " ".join(bits(p) for p in algebra) or "(none)"
        print(f"  fixed points: {shown}")
        for cycle, basin in zip(graph.attractors, graph.basin_sizes):
            states = " -> ".join(graph.bitstring(c) for c in cycle)
            kind = "fixed point" if len(cycle) == 1 else f"cycle of length {len(cycle)}"
            print(f"  {kind}: {states} (basin {basin}/{len(graph.successors)})")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
