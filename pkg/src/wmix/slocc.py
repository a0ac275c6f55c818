"""Local filters mapping a generalized W state onto the uniform one.

Each party gets an invertible diagonal operator that rescales its
excited levels; applied jointly they carry any fully supported family
member onto the uniform single-excitation state, up to a scalar. The
filters are deliberately not trace-normalized: stochastic local
operations allow arbitrary invertible local factors, so the raw
proportionality scalar is returned instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolationError, RankDeficiencyError, ShapeError
from .oracle import DENSE_BUDGET, dense_vector
from .states import PureGeneralizedW, SystemShape, make_generalized_w

AMPLITUDE_TOL = 1e-12
PROPORTIONALITY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class LocalFilter:
    """Invertible diagonal operator on one party's local space."""

    party: int
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ShapeError(f"filter matrix must be square, got {mat.shape}")
        if float(np.abs(mat - np.diag(mat.diagonal())).max()) != 0.0:
            raise ShapeError("filter matrix must be diagonal")
        if float(np.abs(mat.diagonal()).min()) <= AMPLITUDE_TOL:
            raise ShapeError("filter matrix must be invertible")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @property
    def local_dim(self) -> int:
        return self.matrix.shape[0]


def uniform_state(shape: SystemShape) -> PureGeneralizedW:
    """The uniform single-excitation state: every amplitude 1/sqrt(N(d-1))."""
    k = shape.n_labels
    return make_generalized_w(np.full(k, 1.0 / math.sqrt(k)), shape)


def build_filters(state: PureGeneralizedW) -> list[LocalFilter]:
    """Diagonal filter per party sending ``state`` to the uniform state.

    Party i rescales its level-j component by 1/(a * sqrt(K)) where a is
    the state's amplitude at (position N+1-i, level j) and K = N(d-1).
    Every amplitude must be nonzero; otherwise the state is only
    t-partite entangled and the error reports the supported parties.
    """
    shape = state.shape
    amps = state.amplitudes
    dead = np.abs(amps) <= AMPLITUDE_TOL
    if dead.any():
        support = tuple(
            party for party in range(1, shape.n_parties + 1)
            if not dead[shape.labels_of_parties([party])].all()
        )
        raise RankDeficiencyError(
            "state has zero amplitudes; filters exist only on the support "
            f"parties {support} (restrict to them and retry)", support=support)

    root_k = math.sqrt(shape.n_labels)
    filters = []
    for party in range(1, shape.n_parties + 1):
        position = shape.position_of_party(party)
        diag = np.ones(shape.local_dim, dtype=complex)
        for level in range(1, shape.local_dim):
            diag[level] = 1.0 / (amps[shape.label_index(position, level)] * root_k)
        filters.append(LocalFilter(party, np.diag(diag)))
    return filters


def apply_and_verify(filters, state: PureGeneralizedW,
                     budget: int = DENSE_BUDGET) -> tuple[np.ndarray, complex]:
    """Apply the joint filter and check proportionality to the uniform state.

    Returns the transformed dense vector and the proportionality scalar
    c with transformed = c * uniform. Relative deviation beyond 1e-12 is
    a contract violation.
    """
    shape = state.shape
    filters = sorted(filters, key=lambda f: f.party)
    if [f.party for f in filters] != list(range(1, shape.n_parties + 1)):
        raise ShapeError("need exactly one filter per party")
    for f in filters:
        if f.local_dim != shape.local_dim:
            raise ShapeError(
                f"filter for party {f.party} has local dimension "
                f"{f.local_dim}, state has {shape.local_dim}")

    tensor = dense_vector(state, budget).reshape([shape.local_dim] * shape.n_parties)
    for f in filters:
        axis_shape = [1] * shape.n_parties
        axis_shape[f.party - 1] = shape.local_dim
        tensor = tensor * f.matrix.diagonal().reshape(axis_shape)
    transformed = tensor.reshape(shape.dense_dim)

    target = dense_vector(uniform_state(shape), budget)
    scalar = complex(np.vdot(target, transformed))
    deviation = float(np.linalg.norm(transformed - scalar * target))
    scale = float(np.linalg.norm(transformed))
    if deviation > PROPORTIONALITY_TOL * max(scale, 1e-300):
        raise ContractViolationError(
            f"filtered state is not proportional to the uniform state "
            f"(relative deviation {deviation / scale:.3e})")
    return transformed, scalar
