"""Closed-form entanglement quantities for the compact state family.

For vacuum + single-excitation states every partial transpose splits
into a positive semidefinite single-excitation sector plus one
indefinite arrowhead pairing the vacuum with double excitations, so
each bipartite negativity reduces to the Frobenius norm B of one
off-diagonal coefficient block:

    negativity = ( sqrt(p0**2 + 4 B**2) - p0 ) / 2

which is exactly B when the vacuum weight p0 vanishes. Separability
across a cut is equivalent to B = 0, an exact structural property of
the coefficient matrix. None of these routines call an eigensolver;
the dense oracle module recomputes the same quantities by brute force.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, ShapeError
from .partitions import Bipartition, enumerate_bipartitions
from .states import PureGeneralizedW, WMixedState

SEPARABILITY_TOL = 1e-12
SUPPORT_TOL = 1e-12
MAX_ENUMERATED_PARTIES = 16


@dataclass(frozen=True)
class PtBlockSpectrum:
    """Nonzero eigenvalues +-B of the indefinite partial-transpose block.

    ``zeros`` is the kernel multiplicity of that block (its dimension
    minus the two nonzero eigenvalues), counted at zero vacuum weight.
    """

    plus: float
    minus: float
    zeros: int


@dataclass(frozen=True)
class SeparabilityVerdict:
    """Per-cut separability map plus the two global flags."""

    per_cut: dict[Bipartition, bool]
    fully_separable: bool
    genuine: bool


def _check_cut(state: WMixedState, cut: Bipartition) -> None:
    if cut.n_parties != state.shape.n_parties:
        raise ShapeError(
            f"cut covers {cut.n_parties} parties, state has {state.shape.n_parties}")


def cross_block_norm(state: WMixedState, cut: Bipartition) -> float:
    """Frobenius norm of the coefficient block linking the cut's sides."""
    _check_cut(state, cut)
    left = state.shape.labels_of_parties(cut.left)
    right = state.shape.labels_of_parties(cut.right)
    return float(np.linalg.norm(state.coeff[np.ix_(left, right)]))


def pt_block_eigenvalues(state: WMixedState, party: int) -> PtBlockSpectrum:
    """Spectrum of the indefinite block for the one-vs-rest transpose.

    B is the Frobenius norm of the focal party's off-diagonal row block
    (all levels at its position against every other label).
    """
    state.shape.check_party(party)
    shape = state.shape
    rows = shape.labels_of_parties([party])
    others = [p for p in range(1, shape.n_parties + 1) if p != party]
    cols = shape.labels_of_parties(others)
    b = float(np.linalg.norm(state.coeff[np.ix_(rows, cols)]))
    return PtBlockSpectrum(plus=b, minus=-b, zeros=len(rows) * len(cols) - 1)


def negativity_cut(state: WMixedState, cut: Bipartition) -> float:
    """Bipartite negativity of the state across ``cut``.

    Evaluates (sqrt(p0**2 + 4 B**2) - p0) / 2 with B the cross-block
    Frobenius norm; reduces to B for vanishing vacuum weight.
    """
    b = cross_block_norm(state, cut)
    p0 = state.vacuum_weight
    return 0.5 * (math.hypot(p0, 2.0 * b) - p0)


def _pair_blocks(state: WMixedState, party_a: int, party_b: int):
    if party_a == party_b:
        raise ValueError(f"parties must be distinct, got {party_a} twice")
    state.shape.check_party(party_a)
    state.shape.check_party(party_b)
    labels_a = state.shape.labels_of_parties([party_a])
    labels_b = state.shape.labels_of_parties([party_b])
    return labels_a, labels_b


def pairwise_negativity(state: WMixedState, party_a: int, party_b: int) -> float:
    """Negativity of the two-party reduced state, straight from coeff.

    Uses s = vacuum weight plus all diagonal mass outside the two focal
    parties, and the focal off-diagonal block; equals the negativity of
    the explicitly reduced state, computed without reducing.
    """
    labels_a, labels_b = _pair_blocks(state, party_a, party_b)
    diag = state.coeff.diagonal().real
    s = state.vacuum_weight + float(diag.sum() - diag[labels_a].sum() - diag[labels_b].sum())
    b = float(np.linalg.norm(state.coeff[np.ix_(labels_a, labels_b)]))
    return 0.5 * (math.hypot(s, 2.0 * b) - s)


def pairwise_upper_bound(state: WMixedState, party_a: int, party_b: int) -> float:
    """The focal block norm itself, an upper bound on pairwise negativity.

    Equality holds iff the spectator mass s vanishes or the block does.
    """
    labels_a, labels_b = _pair_blocks(state, party_a, party_b)
    return float(np.linalg.norm(state.coeff[np.ix_(labels_a, labels_b)]))


def is_ppt_cut(state: WMixedState, cut: Bipartition) -> bool:
    """Positive partial transpose across ``cut`` (exact block criterion)."""
    return cross_block_norm(state, cut) <= SEPARABILITY_TOL


def is_separable_cut(state: WMixedState, cut: Bipartition) -> bool:
    """Separability across ``cut``; coincides with PPT for this family."""
    return is_ppt_cut(state, cut)


def is_fully_separable(state: WMixedState) -> bool:
    """True iff the coefficient matrix is diagonal (vacuum permitted)."""
    off = state.coeff - np.diag(state.coeff.diagonal())
    return float(np.abs(off).max()) <= SEPARABILITY_TOL if off.size else True


def classify(state: WMixedState) -> SeparabilityVerdict:
    """Evaluate separability on every bipartition (N <= 16).

    ``genuine`` means no cut is separable; ``fully_separable`` is the
    diagonal test.
    """
    n = state.shape.n_parties
    if n > MAX_ENUMERATED_PARTIES:
        raise CapacityError(
            f"exhaustive cut enumeration capped at {MAX_ENUMERATED_PARTIES} parties;"
            f" got {n} (pass explicit cuts instead)")
    per_cut = {cut: is_separable_cut(state, cut) for cut in enumerate_bipartitions(n)}
    return SeparabilityVerdict(
        per_cut=per_cut,
        fully_separable=is_fully_separable(state),
        genuine=not any(per_cut.values()),
    )


def genuine_rank_of_pure(state: PureGeneralizedW) -> int:
    """Number of parties carrying amplitude (the entanglement rank t)."""
    shape = state.shape
    amps = state.amplitudes
    count = 0
    for position in range(1, shape.n_parties + 1):
        block = amps[shape.labels_at_positions([position])]
        if float(np.abs(block).max()) > SUPPORT_TOL:
            count += 1
    return count
