"""Norm bounds for weighted bipartite tensor sums B = sum_i c_i x_i (x) y_i.

The bounds depend on the operators only through the pairwise interaction
magnitudes

    phi_ij = (||[x_i,x_j]|| ||[y_i,y_j]|| + ||{x_i,x_j}|| ||{y_i,y_j}||) / 2

and never assemble the product space, so they are dimension-free. The
exact reference path does assemble it (under the dimension cap) and
diagonalizes, giving ground truth to compare the bounds against.

Index convention: operators are stored 0-based (Python); pairs in reports
and error messages are 1-based to match the graph module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .families import validate
from .graphs import InteractionGraph, IsolatedVertexError, graph_constant, non_edges
from .linalg import (
    DEFAULT_DIM_CAP,
    SpectralSummary,
    anticommutator,
    as_operator,
    commutator,
    hermitian_eig,
    kron,
    spectral_norm,
)

# Absolute slack on the edge-domination comparison; phi values are O(1).
DOM_TOL = 1e-12

# Tolerance on the anticommutation precondition of the two-term identity.
ANTICOMM_TOL = 1e-9


class InstanceValidationError(ValueError):
    """An operator or weight vector fails the instance invariants."""


class DominationError(ValueError):
    """Edge domination fails, so the graph-restricted bound is not proven.

    Carries the full DominationReport as ``report``.
    """

    def __init__(self, message: str, report: "DominationReport"):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True, eq=False)
class TensorSumInstance:
    """A weighted tensor-sum problem: x_i on H, y_i on K, real weights c_i.

    Every operator must be a self-adjoint contraction (checked on
    construction); weights default to all ones and are otherwise
    unconstrained finite reals.
    """

    x: tuple[np.ndarray, ...]
    y: tuple[np.ndarray, ...]
    weights: np.ndarray

    def __init__(self, x, y, weights=None):
        x = tuple(as_operator(a) for a in x)
        y = tuple(as_operator(b) for b in y)
        if len(x) != len(y) or not x:
            raise InstanceValidationError(
                f"need equally many x and y operators, got {len(x)} and {len(y)}"
            )
        m = len(x)
        if weights is None:
            w = np.ones(m)
        else:
            w = np.asarray(weights, dtype=float)
            if w.shape != (m,):
                raise InstanceValidationError(
                    f"expected {m} weights, got shape {w.shape}"
                )
            if not np.all(np.isfinite(w)):
                raise InstanceValidationError("weights must be finite reals")
        for side, ops in (("x", x), ("y", y)):
            dim = ops[0].shape[0]
            for idx, op in enumerate(ops):
                if op.shape[0] != dim:
                    raise InstanceValidationError(
                        f"{side} operator {idx + 1} of {len(ops)}: dimension "
                        f"{op.shape[0]} differs from the first {side} operator's "
                        f"dimension {dim}"
                    )
                cert = validate(op)
                if not cert.is_hermitian:
                    raise InstanceValidationError(
                        f"{side} operator {idx + 1} of {len(ops)}: not self-adjoint, "
                        f"hermiticity defect {cert.hermiticity_defect:.3e}"
                    )
                if not cert.is_contraction:
                    raise InstanceValidationError(
                        f"{side} operator {idx + 1} of {len(ops)}: not a contraction, "
                        f"norm {cert.norm:.12g} > 1"
                    )
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "weights", w)

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def dim_h(self) -> int:
        return self.x[0].shape[0]

    @property
    def dim_k(self) -> int:
        return self.y[0].shape[0]


def pairs(m: int):
    """All 0-based index pairs i < j in lexicographic order."""
    return ((i, j) for i in range(m) for j in range(i + 1, m))


@dataclass(frozen=True, eq=False)
class PhiTable:
    """Symmetric table of pairwise interaction magnitudes with the
    commutator/anticommutator norm breakdown that produced each entry.

    Arrays are (m, m), 0-based; diagonals are filler and never read.
    """

    m: int
    values: np.ndarray
    comm_x: np.ndarray
    comm_y: np.ndarray
    anti_x: np.ndarray
    anti_y: np.ndarray

    def phi(self, i: int, j: int) -> float:
        """Entry for a 1-based pair (i, j), i != j."""
        return float(self.values[i - 1, j - 1])


def phi_table(inst: TensorSumInstance) -> PhiTable:
    """Interaction magnitudes phi_ij for all pairs of an instance."""
    m = inst.m
    values = np.zeros((m, m))
    comm_x = np.zeros((m, m))
    comm_y = np.zeros((m, m))
    anti_x = np.zeros((m, m))
    anti_y = np.zeros((m, m))
    for i, j in pairs(m):
        cx = spectral_norm(commutator(inst.x[i], inst.x[j]))
        cy = spectral_norm(commutator(inst.y[i], inst.y[j]))
        ax = spectral_norm(anticommutator(inst.x[i], inst.x[j]))
        ay = spectral_norm(anticommutator(inst.y[i], inst.y[j]))
        phi = 0.5 * (cx * cy + ax * ay)
        for table, val in (
            (values, phi),
            (comm_x, cx),
            (comm_y, cy),
            (anti_x, ax),
            (anti_y, ay),
        ):
            table[i, j] = val
            table[j, i] = val
    return PhiTable(m=m, values=values, comm_x=comm_x, comm_y=comm_y,
                    anti_x=anti_x, anti_y=anti_y)


def weighted_pair_sum(phi: PhiTable, weights: np.ndarray) -> float:
    """sum over all pairs i < j of |c_i c_j| phi_ij."""
    total = 0.0
    for i, j in pairs(phi.m):
        total += abs(float(weights[i]) * float(weights[j])) * float(phi.values[i, j])
    return total


def weighted_edge_sum(phi: PhiTable, weights: np.ndarray, g: InteractionGraph) -> float:
    """sum over graph edges of |c_i c_j| phi_ij (edges are 1-based)."""
    total = 0.0
    for i, j in g.edges:
        total += abs(float(weights[i - 1]) * float(weights[j - 1])) * float(phi.values[i - 1, j - 1])
    return total


def complete_bound(inst: TensorSumInstance, phi: PhiTable | None = None) -> float:
    """All-pairs bound on ||B_c||^2: sum c_i^2 + sum_{i<j} |c_i c_j| phi_ij."""
    if phi is None:
        phi = phi_table(inst)
    return float(np.sum(inst.weights ** 2)) + weighted_pair_sum(phi, inst.weights)


@dataclass(frozen=True)
class DominationCheck:
    """One non-edge comparison; pair is 1-based, slack = rhs - lhs."""

    pair: tuple[int, int]
    lhs: float
    rhs: float
    slack: float


@dataclass(frozen=True)
class DominationReport:
    """Outcome of the edge-domination check for every non-edge.

    A non-edge violates when lhs > rhs + DOM_TOL. ``checks`` records the
    numbers for every non-edge, violating or not.
    """

    weighted: bool
    checks: tuple[DominationCheck, ...]
    violations: tuple[DominationCheck, ...]

    @property
    def satisfied(self) -> bool:
        return not self.violations


def check_domination(
    inst: TensorSumInstance,
    g: InteractionGraph,
    weighted: bool = True,
    phi: PhiTable | None = None,
) -> DominationReport:
    """Test, for every non-edge (i, j), whether its interaction is dominated
    by the degree-averaged interactions along the incident edges:

        w_ij phi_ij <= avg_{k in N(i)} w_ik phi_ik + avg_{k in N(j)} w_jk phi_jk

    with w_ij = |c_i c_j| in weighted mode and 1 otherwise. A vertex with
    no neighbors contributes an empty average, i.e. zero, to the right side.
    """
    if g.m != inst.m:
        raise ValueError(f"graph has {g.m} vertices but instance has m={inst.m}")
    if phi is None:
        phi = phi_table(inst)
    w = inst.weights

    def pair_weight(i: int, j: int) -> float:
        return abs(float(w[i - 1]) * float(w[j - 1])) if weighted else 1.0

    def neighborhood_average(i: int) -> float:
        nbrs = g.neighbors(i)
        if not nbrs:
            return 0.0
        return sum(pair_weight(i, k) * phi.phi(i, k) for k in sorted(nbrs)) / len(nbrs)

    checks = []
    for i, j in non_edges(g):
        lhs = pair_weight(i, j) * phi.phi(i, j)
        rhs = neighborhood_average(i) + neighborhood_average(j)
        checks.append(DominationCheck(pair=(i, j), lhs=lhs, rhs=rhs, slack=rhs - lhs))
    violations = tuple(c for c in checks if c.lhs > c.rhs + DOM_TOL)
    return DominationReport(weighted=weighted, checks=tuple(checks), violations=violations)


def require_domination(
    inst: TensorSumInstance,
    g: InteractionGraph,
    phi: PhiTable | None = None,
) -> DominationReport:
    """Run the weighted edge-domination check, raising DominationError
    (with the full report attached) when it fails."""
    report = check_domination(inst, g, weighted=True, phi=phi)
    if not report.satisfied:
        worst = min(report.violations, key=lambda c: c.slack)
        raise DominationError(
            f"edge domination fails at {len(report.violations)} non-edge(s); "
            f"worst at pair {worst.pair}: lhs {worst.lhs:.12g} > rhs {worst.rhs:.12g}",
            report,
        )
    return report


def sparse_bound(
    inst: TensorSumInstance,
    g: InteractionGraph,
    phi: PhiTable | None = None,
) -> float:
    """Graph-restricted bound sum c_i^2 + C(G) * sum_edges |c_i c_j| phi_ij.

    Only proven under edge domination: if the weighted check fails this
    raises DominationError instead of returning an unproven number, and a
    graph with an isolated vertex has no finite C(G).
    """
    if phi is None:
        phi = phi_table(inst)
    require_domination(inst, g, phi=phi)
    c_of_g = graph_constant(g)  # IsolatedVertexError when min degree is 0
    return float(np.sum(inst.weights ** 2)) + c_of_g * weighted_edge_sum(
        phi, inst.weights, g
    )


def exact_reference(
    inst: TensorSumInstance, *, dim_cap: int = DEFAULT_DIM_CAP
) -> SpectralSummary:
    """Assemble B_c = sum c_i x_i (x) y_i and diagonalize it.

    ``lambda_max`` is the largest state correlator sup_rho tr(rho B_c),
    attained at the top eigenvector; ``spectral_norm`` is ||B_c||.
    """
    total = inst.dim_h * inst.dim_k
    b = np.zeros((total, total), dtype=complex)
    for c, xi, yi in zip(inst.weights, inst.x, inst.y):
        b += c * kron(xi, yi, dim_cap=dim_cap)
    return hermitian_eig(b)


# ---------------------------------------------------------------------------
# Structural identities for self-adjoint involutions


def _require_involutions(named_ops) -> list[np.ndarray]:
    ops = []
    for name, op in named_ops:
        op = as_operator(op)
        cert = validate(op)
        if not cert.is_unitary_involution:
            raise ValueError(
                f"{name} must be a self-adjoint unitary involution "
                f"(hermiticity defect {cert.hermiticity_defect:.3e}, "
                f"||a^2 - I|| = {cert.involution_defect:.3e})"
            )
        ops.append(op)
    return ops


def chsh_identity_residual(a0, a1, b0, b1) -> float:
    """Residual of the algebraic square identity behind the 2*sqrt(2) bound.

    For self-adjoint unitaries, S = a0(x)b0 + a0(x)b1 + a1(x)b0 - a1(x)b1
    satisfies S^2 = 4 I - [a0,a1](x)[b0,b1]; returns the norm of the
    difference between the two sides.
    """
    a0, a1, b0, b1 = _require_involutions(
        [("a0", a0), ("a1", a1), ("b0", b0), ("b1", b1)]
    )
    s = kron(a0, b0) + kron(a0, b1) + kron(a1, b0) - kron(a1, b1)
    total = s.shape[0]
    rhs = 4.0 * np.eye(total) - kron(commutator(a0, a1), commutator(b0, b1))
    return spectral_norm(s @ s - rhs)


@dataclass(frozen=True)
class TwoTermSharpness:
    norm_s: float
    w_is_involution: bool
    identity_residual: float


def two_term_sharpness(x1, x2, y1, y2) -> TwoTermSharpness:
    """Verify the exact two-term case: for anticommuting self-adjoint
    unitary pairs, S = x1(x)y1 + x2(x)y2 satisfies S^2 = 2(I + W) with
    W = x1x2 (x) y1y2 a self-adjoint unitary, hence ||S|| = 2.
    """
    x1, x2, y1, y2 = _require_involutions(
        [("x1", x1), ("x2", x2), ("y1", y1), ("y2", y2)]
    )
    ax = spectral_norm(anticommutator(x1, x2))
    ay = spectral_norm(anticommutator(y1, y2))
    if ax > ANTICOMM_TOL or ay > ANTICOMM_TOL:
        raise ValueError(
            f"pairs must anticommute: ||{{x1,x2}}|| = {ax:.3e}, "
            f"||{{y1,y2}}|| = {ay:.3e}"
        )
    s = kron(x1, y1) + kron(x2, y2)
    w = kron(x1 @ x2, y1 @ y2)
    residual = spectral_norm(s @ s - 2.0 * (np.eye(s.shape[0]) + w))
    return TwoTermSharpness(
        norm_s=spectral_norm(s),
        w_is_involution=validate(w).is_unitary_involution,
        identity_residual=residual,
    )


# ---------------------------------------------------------------------------
# Aggregated report

PROVENANCE = {
    "baseline_bound": "all-pairs baseline: sum(c_i^2) + sum_{i<j} |c_i c_j| phi_ij",
    "complete_bound": "complete-graph bound: sum(c_i^2) + sum_{i<j} |c_i c_j| phi_ij",
    "sparse_bound": "graph-restricted bound: sum(c_i^2) + C(G) * sum_edges |c_i c_j| phi_ij, valid under edge domination",
    "graph_constant": "connectivity factor C(G) = 2(m-1)/min_degree - 1",
    "exact_norm_squared": "squared spectral norm of the assembled tensor sum (dense diagonalization)",
}


@dataclass(frozen=True)
class BoundReport:
    """Everything the engine can say about one instance.

    ``baseline_bound`` and ``complete_bound`` share the same all-pairs
    formula; both are reported so the graph path shows what restricting
    to edges buys or costs. ``sparse_bound`` is present only when a graph
    was supplied, has minimum degree >= 1, and passes edge domination.
    ``exact_norm_squared`` is present only under the dimension cap.
    """

    m: int
    dim_h: int
    dim_k: int
    sum_c_squared: float
    total_phi_sum: float
    baseline_bound: float
    complete_bound: float
    graph_constant: float | None = None
    edge_phi_sum: float | None = None
    sparse_bound: float | None = None
    domination: DominationReport | None = None
    exact_norm_squared: float | None = None
    exact_lambda_max: float | None = None
    provenance: tuple[tuple[str, str], ...] = tuple(sorted(PROVENANCE.items()))


def build_report(
    inst: TensorSumInstance,
    g: InteractionGraph | None = None,
    *,
    dim_cap: int = DEFAULT_DIM_CAP,
) -> BoundReport:
    """Compute every applicable bound (and the exact reference when the
    product dimension is under the cap) for one instance.

    Never raises on domination failure or an oversized product space; the
    corresponding fields simply stay None, with the domination report
    recording any violations.
    """
    phi = phi_table(inst)
    sum_c_sq = float(np.sum(inst.weights ** 2))
    total = weighted_pair_sum(phi, inst.weights)
    all_pairs_bound = sum_c_sq + total

    c_of_g = None
    edge_sum = None
    sparse = None
    domination = None
    if g is not None:
        domination = check_domination(inst, g, weighted=True, phi=phi)
        edge_sum = weighted_edge_sum(phi, inst.weights, g)
        try:
            c_of_g = graph_constant(g)
        except IsolatedVertexError:
            c_of_g = None
        if domination.satisfied and c_of_g is not None:
            sparse = sum_c_sq + c_of_g * edge_sum

    exact_sq = None
    lam_max = None
    if inst.dim_h * inst.dim_k <= dim_cap:
        summary = exact_reference(inst, dim_cap=dim_cap)
        exact_sq = summary.spectral_norm ** 2
        lam_max = summary.lambda_max

    return BoundReport(
        m=inst.m,
        dim_h=inst.dim_h,
        dim_k=inst.dim_k,
        sum_c_squared=sum_c_sq,
        total_phi_sum=total,
        baseline_bound=all_pairs_bound,
        complete_bound=all_pairs_bound,
        graph_constant=c_of_g,
        edge_phi_sum=edge_sum,
        sparse_bound=sparse,
        domination=domination,
        exact_norm_squared=exact_sq,
        exact_lambda_max=lam_max,
    )
