"""Canonical demonstration instances.

Each demo assembles a named fixture (maximal two-setting correlations,
Heisenberg exchange coupling, anticommuting generator ladders, the
single-edge instance showing why edge domination cannot be dropped, and
star/chain graph layouts) together with its graph when one applies.
"""

from __future__ import annotations

import math

import numpy as np

from .bounds import TensorSumInstance
from .families import clifford_generators, pauli
from .graphs import InteractionGraph, chain_graph, star_graph

DEMO_NAMES = ("chsh", "heisenberg", "clifford", "two-spin", "counterexample", "star", "chain")

# demos that take a size parameter
PARAMETRIC = ("clifford", "star", "chain")


def build_demo(name: str, m: int | None = None) -> tuple[TensorSumInstance, InteractionGraph | None]:
    if name in PARAMETRIC:
        if m is None:
            raise ValueError(f"demo {name!r} needs a size m")
        if m < 2:
            raise ValueError(f"demo {name!r} needs m >= 2, got {m}")
    elif m is not None:
        raise ValueError(f"demo {name!r} does not take a size parameter")

    z = pauli("z")
    x = pauli("x")

    if name == "chsh":
        b0 = (z + x) / math.sqrt(2.0)
        b1 = (z - x) / math.sqrt(2.0)
        return TensorSumInstance([z, z, x, x], [b0, b1, b0, -b1]), None
    if name == "heisenberg":
        ops = [pauli("x"), pauli("y"), pauli("z")]
        return TensorSumInstance(ops, ops), None
    if name == "two-spin":
        return TensorSumInstance([z, x], [z, x]), None
    if name == "counterexample":
        zero = np.zeros((2, 2), dtype=complex)
        ops = [z, zero, x]
        return TensorSumInstance(ops, ops), InteractionGraph(3, [(1, 2)])
    if name == "clifford":
        gens = clifford_generators(m)
        return TensorSumInstance(gens, gens), None
    if name == "star":
        gens = clifford_generators(m)
        return TensorSumInstance(gens, gens), star_graph(m)
    if name == "chain":
        gens = clifford_generators(m)
        return TensorSumInstance(gens, gens), chain_graph(m)
    raise ValueError(f"unknown demo {name!r}, expected one of {DEMO_NAMES}")


def default_filename(name: str, m: int | None = None) -> str:
    if name == "counterexample":
        return "counterexample.json"
    if name in PARAMETRIC:
        return f"demo-{name}-{m}.json"
    return f"demo-{name}.json"
