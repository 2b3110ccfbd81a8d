"""Noncommutativity certificates from an observed correlation value.

These invert the norm bounds: if a bipartite experiment reports a value
beta for the weighted sum, then beta^2 - sum(c_i^2), when positive,
forces a minimum amount of weighted interaction mass and therefore a
minimum number of pairs (or graph edges) whose interaction magnitude
clears a threshold. A negative beta certifies just as well since only
beta^2 enters.

All counts are conservative lower bounds and never negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import TensorSumInstance, require_domination
from .graphs import InteractionGraph, graph_constant

# Ceilings are taken with this much absolute slack so that double-precision
# noise in beta^2 cannot push an exact integer ratio up to the next integer
# (which would overstate the certified count).
CEIL_GUARD = 1e-9

DOMINATION_VERIFIED = "verified"
DOMINATION_ASSERTED = "asserted, not verified"


def _as_weights(weights) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or w.size < 1:
        raise ValueError(f"weights must be a nonempty vector, got shape {w.shape}")
    if not np.all(np.isfinite(w)):
        raise ValueError("weights must be finite reals")
    return w


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not math.isfinite(beta):
        raise ValueError(f"observed value must be finite, got {beta}")
    return beta


def excess_mass(beta: float, weights) -> float:
    """max(0, beta^2 - sum c_i^2): the interaction mass beta forces."""
    w = _as_weights(weights)
    return max(0.0, _check_beta(beta) ** 2 - float(np.sum(w ** 2)))


def _guarded_ceil(v: float) -> int:
    return max(0, math.ceil(v - CEIL_GUARD))


@dataclass(frozen=True)
class CountingBound:
    """Lower bounds on how many pairs (and edges, when a graph applies)
    carry weighted interaction mass at least ``threshold``.

    ``pairs``/``edges`` are the integer certificates; the raw ratios are
    kept alongside for transparency.
    """

    threshold: float
    pairs_raw: float
    pairs: int
    edges_raw: float | None = None
    edges: int | None = None


def counting_certificate(
    beta: float, weights, t: float, g: InteractionGraph | None = None
) -> CountingBound:
    """Certified minimum number of pairs with |c_i c_j| phi_ij >= t.

    With a graph (minimum degree >= 1, edge domination assumed or
    verified by the caller), also bounds the number of such edges, paying
    the connectivity factor C(G).
    """
    if t <= 0:
        raise ValueError(f"threshold must be positive, got {t}")
    excess = excess_mass(beta, weights)
    pairs_raw = excess / t
    edges_raw = None
    edges = None
    if g is not None:
        edges_raw = excess / (graph_constant(g) * t)
        edges = _guarded_ceil(edges_raw)
    return CountingBound(
        threshold=float(t),
        pairs_raw=pairs_raw,
        pairs=_guarded_ceil(pairs_raw),
        edges_raw=edges_raw,
        edges=edges,
    )


@dataclass(frozen=True)
class PhiThresholdBound:
    """Counting certificate restated for the unweighted magnitudes: given
    |c_i| <= c_max, pairs with phi_ij >= phi_threshold are counted by
    applying the weighted count at effective_threshold = c_max^2 * phi_threshold.
    """

    phi_threshold: float
    c_max: float
    effective_threshold: float
    pairs_raw: float
    pairs: int
    edges_raw: float | None = None
    edges: int | None = None


def phi_threshold_certificate(
    beta: float,
    weights,
    t_prime: float,
    c_max: float,
    g: InteractionGraph | None = None,
) -> PhiThresholdBound:
    """Certified minimum number of pairs with phi_ij >= t_prime, for
    weight vectors bounded by c_max in absolute value."""
    if t_prime <= 0:
        raise ValueError(f"phi threshold must be positive, got {t_prime}")
    if c_max <= 0:
        raise ValueError(f"c_max must be positive, got {c_max}")
    w = _as_weights(weights)
    too_big = [i for i, c in enumerate(w) if abs(c) > c_max]
    if too_big:
        raise ValueError(
            f"|c| exceeds c_max = {c_max:.12g} at index "
            f"{too_big[0] + 1} (|c| = {abs(w[too_big[0]]):.12g})"
        )
    counts = counting_certificate(beta, w, c_max ** 2 * t_prime, g)
    return PhiThresholdBound(
        phi_threshold=float(t_prime),
        c_max=float(c_max),
        effective_threshold=counts.threshold,
        pairs_raw=counts.pairs_raw,
        pairs=counts.pairs,
        edges_raw=counts.edges_raw,
        edges=counts.edges,
    )


@dataclass(frozen=True)
class CertificateReport:
    """Everything certified from one observed value.

    ``aggregate_all_pairs`` bounds the total weighted interaction mass
    from below; ``aggregate_edges`` does the same for edge mass when a
    graph applies. ``domination`` records whether the edge-domination
    hypothesis behind the per-edge statements was actually checked
    (possible only when the full instance is available) or merely
    asserted by the caller.
    """

    beta: float
    beta_source: str  # 'supplied' or 'computed'
    sum_c_squared: float
    excess: float
    aggregate_all_pairs: float
    aggregate_edges: float | None = None
    graph_constant: float | None = None
    counting: tuple[CountingBound, ...] = ()
    phi_threshold_variant: PhiThresholdBound | None = None
    domination: str | None = None


def aggregate_certificate(
    beta: float,
    *,
    weights=None,
    instance: TensorSumInstance | None = None,
    g: InteractionGraph | None = None,
) -> CertificateReport:
    """Aggregate lower bounds on interaction mass from an observed value.

    Exactly one of ``weights`` / ``instance`` must be given. With an
    instance and a graph the edge-domination check runs (raising
    DominationError on failure); with bare weights and a graph the
    report records that domination was asserted, not verified.
    """
    return build_certificate_report(beta, weights=weights, instance=instance, g=g)


def build_certificate_report(
    beta: float,
    *,
    weights=None,
    instance: TensorSumInstance | None = None,
    g: InteractionGraph | None = None,
    thresholds=(),
    phi_threshold: float | None = None,
    c_max: float | None = None,
    beta_source: str = "supplied",
) -> CertificateReport:
    """Assemble the full certificate report (aggregates, counting bounds,
    and the bounded-coefficient variant when requested)."""
    if (weights is None) == (instance is None):
        raise ValueError("provide exactly one of weights or instance")
    if instance is not None:
        w = instance.weights
    else:
        w = _as_weights(weights)

    beta = _check_beta(beta)
    sum_c_sq = float(np.sum(w ** 2))
    excess = max(0.0, beta ** 2 - sum_c_sq)

    aggregate_edges = None
    c_of_g = None
    domination = None
    if g is not None:
        if instance is not None:
            require_domination(instance, g)
            domination = DOMINATION_VERIFIED
        else:
            domination = DOMINATION_ASSERTED
        c_of_g = graph_constant(g)
        aggregate_edges = excess / c_of_g

    counting = tuple(counting_certificate(beta, w, t, g) for t in thresholds)

    variant = None
    if phi_threshold is not None:
        if c_max is None:
            raise ValueError("phi_threshold requires c_max")
        variant = phi_threshold_certificate(beta, w, phi_threshold, c_max, g)

    return CertificateReport(
        beta=beta,
        beta_source=beta_source,
        sum_c_squared=sum_c_sq,
        excess=excess,
        aggregate_all_pairs=excess,
        aggregate_edges=aggregate_edges,
        graph_constant=c_of_g,
        counting=counting,
        phi_threshold_variant=variant,
        domination=domination,
    )
