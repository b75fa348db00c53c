"""Exact analysis of the buffer-occupancy Markov chain under HRS.

With i.i.d. fading on all 2N links, each of the N^2 ordered (receive,
transmit) relay pairs is equally likely every interval, so the occupancy
vector (X_1, ..., X_N) performs a Markov chain on the compositions of the
conserved packet total N_e with parts bounded by L_b - 1.  Transition
probabilities are integer multiples of 1/N^2; the matrix is stored as exact
integer numerators over that common denominator, which makes the structural
checks (symmetry, double stochasticity, uniform stationary distribution)
exact equalities rather than float comparisons.

`p_brs_state` / `p_brs_total` give the probability that the hybrid policy
falls back to single-relay (BRS) operation: with f full and e empty buffers
in a state, (f + e) * N - f * e of the N^2 selection pairs trigger the
fallback.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.sparse

from .errors import InfeasibleConfigError, InternalInconsistencyError, UnsupportedConfigError

__all__ = [
    "StateSpace",
    "TransitionMatrix",
    "enumerate_states",
    "count_states",
    "count_states_closed_form",
    "classify_state",
    "p_brs_state",
    "p_brs_total",
    "p_mmrs_total",
    "build_transition_matrix",
    "stationary_distribution",
    "debug_dump",
    "dump_json",
]


def _check_feasible(n_relays: int, capacity: int, total_full: int) -> None:
    if n_relays < 1:
        raise ValueError(f"n_relays must be >= 1, got {n_relays}")
    if capacity < 1:
        raise ValueError(f"capacity must be >= 1, got {capacity}")
    if not 0 <= total_full <= n_relays * (capacity - 1):
        raise InfeasibleConfigError(
            f"total_full={total_full} outside [0, {n_relays * (capacity - 1)}] "
            f"for n_relays={n_relays}, capacity={capacity}"
        )


@dataclass(frozen=True)
class StateSpace:
    """All occupancy vectors with the given packet total, in lexicographic order."""

    n_relays: int
    capacity: int
    total_full: int
    states: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.states)})

    @property
    def size(self) -> int:
        return len(self.states)

    def index_of(self, state: tuple[int, ...]) -> int:
        return self._index[state]

    def __contains__(self, state: tuple[int, ...]) -> bool:
        return state in self._index


def enumerate_states(n_relays: int, capacity: int, total_full: int) -> StateSpace:
    """Enumerate every occupancy vector with sum total_full and parts <= capacity-1."""
    _check_feasible(n_relays, capacity, total_full)
    bound = capacity - 1
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            if 0 <= remaining <= bound:
                out.append(tuple(prefix) + (remaining,))
            return
        lo = max(0, remaining - bound * (slots - 1))
        hi = min(bound, remaining)
        for x in range(lo, hi + 1):
            prefix.append(x)
            rec(prefix, remaining - x, slots - 1)
            prefix.pop()

    rec([], total_full, n_relays)
    return StateSpace(n_relays, capacity, total_full, tuple(out))


def count_states(n_relays: int, capacity: int, total_full: int) -> int:
    """Exact state count for any N (bounded-composition count by inclusion-exclusion)."""
    _check_feasible(n_relays, capacity, total_full)
    total = 0
    for j in range(n_relays + 1):
        r = total_full - j * capacity
        if r < 0:
            break
        total += (-1) ** j * math.comb(n_relays, j) * math.comb(r + n_relays - 1, n_relays - 1)
    return total


def count_states_closed_form(n_relays: int, capacity: int, total_full: int) -> int:
    """Closed-form state count, available for N = 2 and N = 3 only.

    For N = 3 the count is a sum of two-relay counts after fixing the first
    coordinate x: with i = total_full - x + 1, valid x in [0, L_b - 1] means
    i runs from (total_full - L_b + 1)^+ + 1 to total_full + 1, and each term
    (i - 2 (i - L_b)^+)^+ is the number of bounded pairs summing to i - 1.
    """
    _check_feasible(n_relays, capacity, total_full)
    lb, ne = capacity, total_full
    if n_relays == 2:
        if ne <= lb - 1:
            return ne + 1
        return 2 * lb - ne - 1
    if n_relays == 3:
        lo = max(ne - lb + 1, 0) + 1
        total = 0
        for i in range(lo, ne + 2):
            total += max(i - 2 * max(i - lb, 0), 0)
        return total
    raise UnsupportedConfigError(
        f"closed-form state count is only defined for N in (2, 3), got N={n_relays}; "
        "use enumerate_states or count_states"
    )


def classify_state(state: tuple[int, ...], capacity: int) -> tuple[int, int]:
    """(number of full buffers, number of empty buffers) for one state.

    With capacity 1 every buffer is simultaneously full and empty.
    """
    n_full = sum(1 for x in state if x == capacity - 1)
    n_empty = sum(1 for x in state if x == 0)
    return n_full, n_empty


def p_brs_state(state: tuple[int, ...], n_relays: int, capacity: int) -> Fraction:
    """Probability of the BRS fallback in one state: ((f + e) N - f e) / N^2."""
    n_full, n_empty = classify_state(state, capacity)
    return Fraction((n_full + n_empty) * n_relays - n_full * n_empty, n_relays * n_relays)


def _interior_compositions(total: int, parts: int, capacity: int) -> int:
    # compositions of `total` into `parts` values each in [1, capacity - 2]
    if parts == 0:
        return 1 if total == 0 else 0
    hi = capacity - 2
    if hi < 1 or total < parts or total > parts * hi:
        return 0
    acc = 0
    for j in range(parts + 1):
        r = total - parts - j * hi
        if r < 0:
            break
        acc += (-1) ** j * math.comb(parts, j) * math.comb(r + parts - 1, parts - 1)
    return acc


def p_brs_total(n_relays: int, capacity: int, total_full: int) -> Fraction:
    """Long-run probability of the BRS fallback: the uniform average of
    p_brs_state over the state space (the stationary distribution is uniform).

    Computed by counting states per (full, empty) classification instead of
    materializing the space, so large configurations stay cheap; equality
    with the enumerated average is covered by tests.
    """
    _check_feasible(n_relays, capacity, total_full)
    n = n_relays
    if capacity == 1:
        return Fraction(1)
    n_states = 0
    weighted = 0
    for f in range(n + 1):
        if f * (capacity - 1) > total_full:
            break
        for e in range(n - f + 1):
            mid = n - f - e
            c = (
                math.comb(n, f)
                * math.comb(n - f, e)
                * _interior_compositions(total_full - f * (capacity - 1), mid, capacity)
            )
            if c == 0:
                continue
            n_states += c
            weighted += c * ((f + e) * n - f * e)
    if n_states == 0:
        raise InternalInconsistencyError(
            f"no states counted for feasible ({n_relays}, {capacity}, {total_full})"
        )
    return Fraction(weighted, n * n * n_states)


def p_mmrs_total(n_relays: int, capacity: int, total_full: int) -> Fraction:
    return 1 - p_brs_total(n_relays, capacity, total_full)


@dataclass(frozen=True)
class TransitionMatrix:
    """Exact transition matrix: probabilities are numerators[i, j] / denominator."""

    numerators: np.ndarray
    denominator: int

    @property
    def size(self) -> int:
        return self.numerators.shape[0]

    def as_float(self) -> np.ndarray:
        return self.numerators.astype(np.float64) / self.denominator


def build_transition_matrix(space: StateSpace) -> TransitionMatrix:
    """Accumulate the N^2 equally likely selection pairs for every state.

    A pair (rx, tx) moves one packet from tx to rx unless it fires the BRS
    fallback (rx full or tx empty) or rx == tx; those pairs keep the state
    unchanged.  When no trigger fires the move is always feasible.
    """
    n, bound = space.n_relays, space.capacity - 1
    numerators = np.zeros((space.size, space.size), dtype=np.int64)
    for i, state in enumerate(space.states):
        for rx in range(n):
            for tx in range(n):
                if rx == tx or state[rx] == bound or state[tx] == 0:
                    numerators[i, i] += 1
                else:
                    target = list(state)
                    target[rx] += 1
                    target[tx] -= 1
                    numerators[i, space.index_of(tuple(target))] += 1
    return TransitionMatrix(numerators, n * n)


def stationary_distribution(
    matrix: TransitionMatrix,
    *,
    check_power_iteration: bool = True,
    tol: float = 1e-12,
    max_iterations: int = 200_000,
) -> np.ndarray:
    """Uniform stationary distribution (1/N_s, ..., 1/N_s), verified.

    The exact check is that all rows and columns of the integer numerator
    matrix sum to the denominator (uniform pi then satisfies pi P = pi
    exactly in rational arithmetic).  The redundant numerical check runs
    power iteration from a point mass until it is within `tol` of uniform
    in the sup norm.
    """
    num = matrix.numerators
    if (num.sum(axis=1) != matrix.denominator).any() or (
        num.sum(axis=0) != matrix.denominator
    ).any():
        raise InternalInconsistencyError(
            "transition matrix is not doubly stochastic; construction bug"
        )
    size = matrix.size
    uniform = np.full(size, 1.0 / size)
    if check_power_iteration:
        p = scipy.sparse.csr_matrix(num.astype(np.float64) / matrix.denominator)
        v = np.zeros(size)
        v[0] = 1.0
        for _ in range(max_iterations):
            if np.max(np.abs(v - uniform)) < tol:
                break
            v = v @ p
        else:
            raise InternalInconsistencyError(
                f"power iteration did not converge within {max_iterations} iterations"
            )
    return uniform


def debug_dump(space: StateSpace, matrix: TransitionMatrix | None = None) -> dict:
    """JSON-serializable dump of a state space and (optionally) its matrix."""
    doc: dict = {
        "n_relays": space.n_relays,
        "capacity": space.capacity,
        "total_full": space.total_full,
        "states": [list(s) for s in space.states],
    }
    if matrix is not None:
        doc["numerators"] = matrix.numerators.tolist()
        doc["denominator"] = matrix.denominator
    return doc


def dump_json(space: StateSpace, matrix: TransitionMatrix | None = None) -> str:
    return json.dumps(debug_dump(space, matrix), sort_keys=True)
