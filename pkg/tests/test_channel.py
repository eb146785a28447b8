from types import SimpleNamespace

import numpy as np
import pytest

from sqgt import (
    InvalidInput,
    OutOfRange,
    TestOutcome,
    inject_exhaustive,
    inject_explicit,
    inject_random,
    support_signature,
    syndrome,
    unit_thresholds,
)
from sqgt.channel import code_support_signature


def _entry(code_corpus, name):
    return dict(code_corpus)[name]


def test_syndrome_single_block(code_corpus):
    code = _entry(code_corpus, "qbh-i2-d2")
    # columns 0 and 2 are base column 0 scaled by 3 and 6: sums (9, 0)
    assert syndrome(code, [0, 2]).y == (3, 0)
    assert syndrome(code, [0]).y == (1, 0)


def test_syndrome_mixed_rows(code_corpus):
    code = _entry(code_corpus, "qbh-i3-d2")
    # sums (21, 18, 3) -> bins (7, 6, 1) under the step-3 thresholds
    outcome = syndrome(code, [0, 3, 6, 4, 7, 2])
    assert outcome.y == (7, 6, 1)
    assert outcome.clean


def test_syndrome_input_checks(code_corpus):
    code = _entry(code_corpus, "qbh-i2-d2")
    with pytest.raises(InvalidInput):
        syndrome(code, [])
    with pytest.raises(InvalidInput):
        syndrome(code, [99])


def test_syndrome_overflow_names_coordinate():
    fake = SimpleNamespace(
        matrix=np.array([[3], [4]]), thresholds=unit_thresholds(4)
    )
    with pytest.raises(OutOfRange, match="coordinate 1"):
        syndrome(fake, [0])


def test_support_signature_collapses_scalings():
    vectors = [[2, 0, 2, 2], [6, 0, 6, 6], [2, 0, 2, 0]]
    assert support_signature(vectors) == {(1, 0, 1, 1), (1, 0, 1, 0)}


def test_code_support_signature(code_corpus):
    code = _entry(code_corpus, "qbh-i3-d2")
    assert code_support_signature(code, [0, 3, 6]) == {0}
    assert code_support_signature(code, [0, 4, 8]) == {0, 1, 2}


def test_inject_explicit():
    clean = TestOutcome((3, 0, 1))
    hit = inject_explicit(clean, [(1, 5)], Q=8)
    assert hit.y == (3, 5, 1)
    assert hit.error_positions == (1,)
    assert not hit.clean
    with pytest.raises(InvalidInput):
        inject_explicit(clean, [(1, 0)], Q=8)  # unchanged value
    with pytest.raises(InvalidInput):
        inject_explicit(clean, [(9, 5)], Q=8)
    with pytest.raises(InvalidInput):
        inject_explicit(clean, [(1, 8)], Q=8)


def test_inject_exhaustive_counts():
    clean = TestOutcome((3, 0))
    outcomes = list(inject_exhaustive(clean, 1, Q=8))
    # clean first, then 2 coordinates x 7 alternative values
    assert outcomes[0] is clean
    assert len(outcomes) == 1 + 2 * 7
    assert all(not o.clean for o in outcomes[1:])
    assert len({o.y for o in outcomes}) == len(outcomes)


def test_inject_exhaustive_two_errors():
    clean = TestOutcome((0, 0, 0))
    outcomes = list(inject_exhaustive(clean, 2, Q=3))
    # 1 + 3*2 + C(3,2)*2^2
    assert len(outcomes) == 1 + 6 + 12


def test_inject_random_deterministic():
    clean = TestOutcome((3, 0, 1, 2))
    a = [o.y for o in inject_random(clean, 1, Q=8, seed=5, count=20)]
    b = [o.y for o in inject_random(clean, 1, Q=8, seed=5, count=20)]
    assert a == b
    assert all(sum(x != y for x, y in zip(clean.y, o)) <= 1 for o in a)


def test_outcome_json():
    hit = TestOutcome((3, 5, 1), (1,), clean=False)
    assert '"errors": [[1, 5]]' in hit.to_json()
