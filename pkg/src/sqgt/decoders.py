"""Zero-error decoders for the three code families.

All three share the same support-recovery step: a base column survives
iff its nonzero coordinates are contradicted by the result vector in at
most e places.  They differ in how the multiplier subset per support is
recovered: an ordered subset-sum table for quantized B_h codes, and a
witness-coordinate majority plus a linear-time knapsack call for the
SQLO families.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .channel import TestOutcome
from .codebook import SqgtCode
from .errors import DecodingFailure, InvalidBase, InvalidInput, UnsupportedKind
from .quantization import bin_bounds
from .sequences import QUANTIZED_BH, SQLO_L, SQLO_S, knapsack_solve, subset_sums


@dataclass(frozen=True)
class DecodedResult:
    defectives: frozenset[int]  # column indices into the code
    per_support: tuple[tuple[int, tuple[int, ...]], ...]  # (base col, multipliers)
    warning: str | None = None


def recover_support(y, base_matrix: np.ndarray, e: int) -> list[int]:
    """Base columns whose nonzero coordinates exceed y in at most e places."""
    y = np.asarray(_y_values(y))
    if y.shape[0] != base_matrix.shape[0]:
        raise InvalidInput(
            f"result length {y.shape[0]} != base row count {base_matrix.shape[0]}"
        )
    violations = (base_matrix > y[:, None]).sum(axis=0)
    return [int(i) for i in np.nonzero(violations <= e)[0]]


def select_witness_coords(y, support: list[int], e: int) -> list[int]:
    """The 2e+1 support coordinates with the smallest result values,
    ties broken by ascending coordinate index."""
    need = 2 * e + 1
    if len(support) < need:
        raise InvalidBase(
            f"support of size {len(support)} cannot supply {need} witness coordinates"
        )
    yv = _y_values(y)
    return sorted(support, key=lambda j: (yv[j], j))[:need]


def _y_values(y):
    return y.y if isinstance(y, TestOutcome) else tuple(int(v) for v in y)


def _empty_result() -> DecodedResult:
    return DecodedResult(
        frozenset(), (), warning="no defectives recovered or contract violated"
    )


def _columns_for(code: SqgtCode, base_col: int, multipliers) -> set[int]:
    value_to_block = {a: j for j, a in enumerate(code.sequence.values)}
    return {value_to_block[a] * code.base_n + base_col for a in multipliers}


def dec_qbh(y, code: SqgtCode) -> DecodedResult:
    """Table decoder: per recovered support, pick the largest subset sum
    consistent (up to e exceptions) with the upper thresholds of the
    observed bins."""
    if code.sequence.kind != QUANTIZED_BH:
        raise UnsupportedKind(f"code built from a {code.sequence.kind} sequence")
    yv = _y_values(y)
    supports = recover_support(yv, code.base.matrix, code.e)
    if not supports:
        return _empty_result()
    table = subset_sums(code.sequence, code.d)
    eta = code.thresholds.eta
    upper = [eta[v + 1] for v in yv]
    defectives: set[int] = set()
    per_support = []
    for i in supports:
        coords = [j for j in range(code.m) if code.base.matrix[j, i]]
        chosen = None
        for total, subset in reversed(table):
            # beta * x_i(j) < u(j) restricted to the support; zero
            # coordinates satisfy it vacuously.
            bad = sum(1 for j in coords if total >= upper[j])
            if bad <= code.e:
                chosen = (total, subset)
                break
        if chosen is None:
            raise DecodingFailure(
                f"no subset sum consistent with support column {i}"
            )
        multipliers = tuple(sorted(chosen[1]))
        per_support.append((i, multipliers))
        defectives |= _columns_for(code, i, multipliers)
    return DecodedResult(frozenset(defectives), tuple(per_support))


def _dec_sqlo(y, code: SqgtCode, kind: str) -> DecodedResult:
    if code.sequence.kind != kind:
        raise UnsupportedKind(
            f"code built from a {code.sequence.kind} sequence, expected {kind}"
        )
    yv = _y_values(y)
    supports = recover_support(yv, code.base.matrix, code.e)
    if not supports:
        return _empty_result()
    th = code.thresholds
    defectives: set[int] = set()
    per_support = []
    for i in supports:
        coords = [j for j in range(code.m) if code.base.matrix[j, i]]
        witnesses = select_witness_coords(yv, coords, code.e)
        votes: Counter[int] = Counter()
        for j in witnesses:
            lo, hi = bin_bounds(th, yv[j])
            # The quantized B_d property makes at most one integer per bin
            # representable; scan order is immaterial.
            for beta in range(max(lo, 1), hi):
                if knapsack_solve(code.sequence, code.d, beta) is not None:
                    votes[beta] += 1
                    break
        threshold = code.e + 1
        winners = [b for b, c in votes.items() if c >= threshold]
        if len(winners) != 1:
            raise DecodingFailure(
                f"support column {i}: {len(winners)} candidate sums reached "
                f"{threshold} witness votes"
            )
        beta_t = winners[0]
        subset = knapsack_solve(code.sequence, code.d, beta_t)
        multipliers = tuple(sorted(subset))
        per_support.append((i, multipliers))
        defectives |= _columns_for(code, i, multipliers)
    return DecodedResult(frozenset(defectives), tuple(per_support))


def dec_sqlo_s(y, code: SqgtCode) -> DecodedResult:
    return _dec_sqlo(y, code, SQLO_S)


def dec_sqlo_l(y, code: SqgtCode) -> DecodedResult:
    return _dec_sqlo(y, code, SQLO_L)


DECODERS = {QUANTIZED_BH: dec_qbh, SQLO_S: dec_sqlo_s, SQLO_L: dec_sqlo_l}


def decode(y, code: SqgtCode) -> DecodedResult:
    """Dispatch to the decoder matching the code's sequence kind."""
    return DECODERS[code.sequence.kind](y, code)


def oracle_decode(y, code: SqgtCode) -> frozenset[int]:
    """Exhaustive maximum-agreement search over all candidate defective
    sets of size <= d; the independent reference for every decoder."""
    from itertools import combinations

    from .channel import syndrome
    from .errors import OutOfRange

    yv = np.asarray(_y_values(y))
    best: tuple[int, frozenset[int]] | None = None
    tied = False
    for size in range(1, code.d + 1):
        for subset in combinations(range(code.n), size):
            try:
                s = syndrome(code, subset)
            except OutOfRange:
                continue
            agree = int((np.asarray(s.y) == yv).sum())
            if best is None or agree > best[0]:
                best = (agree, frozenset(subset))
                tied = False
            elif agree == best[0]:
                tied = True
    if best is None or best[0] < code.m - code.e or tied:
        raise DecodingFailure("no unique candidate set within the error budget")
    return best[1]
