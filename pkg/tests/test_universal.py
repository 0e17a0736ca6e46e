import numpy as np
import pytest
from scipy.special import comb
from unbreak.framework import BudgetExceededError, InputFileError
from unbreak.universal import (
    UniversalFamily,
    build_universal_set,
    constraint_count,
    format_universal_set,
    verify_universal_set,
)
from unbreak.universal.readwrite import parse_universal_set


@pytest.mark.order(40)
@pytest.mark.parametrize(
    "n,k,p", [(4, 2, 1), (6, 3, 1), (7, 4, 2), (8, 3, 3), (5, 5, 0), (9, 4, 2)]
)
def test_built_family_is_universal(n, k, p):
    f = build_universal_set(n, k, p)
    assert f.functions.shape[1] == n
    assert verify_universal_set(f).ok
    assert len(f) <= comb(n, p, exact=True)


@pytest.mark.order(41)
@pytest.mark.parametrize("strategy", ["greedy", "random", "indicator"])
def test_each_strategy_is_universal(strategy):
    f = build_universal_set(7, 3, 1, seed=3, strategy=strategy)
    assert f.strategy == strategy
    assert verify_universal_set(f).ok


@pytest.mark.order(42)
def test_indicator_family_size():
    f = build_universal_set(6, 4, 2, strategy="indicator")
    assert len(f) == 15
    assert (f.functions.sum(axis=1) == 2).all()


@pytest.mark.order(43)
def test_missing_vector_reports_witness():
    empty = UniversalFamily(3, 2, 1, np.zeros((0, 3), dtype=np.uint8))
    result = verify_universal_set(empty)
    assert not result.ok
    assert result.witness == ((1, 2), (0, 1))


@pytest.mark.order(44)
def test_dropping_any_vector_breaks_indicator_family():
    f = build_universal_set(4, 4, 2, strategy="indicator")
    for i in range(len(f)):
        kept = np.delete(f.functions, i, axis=0)
        assert not verify_universal_set(UniversalFamily(4, 4, 2, kept)).ok


@pytest.mark.order(45)
def test_restriction_stays_universal():
    f = build_universal_set(9, 3, 1)
    assert verify_universal_set(f.restrict(5)).ok


@pytest.mark.order(46)
def test_parallel_verification_agrees():
    f = build_universal_set(8, 3, 1)
    assert verify_universal_set(f, jobs=2) == verify_universal_set(f)
    broken = UniversalFamily(8, 3, 1, f.functions[1:])
    assert verify_universal_set(broken, jobs=2) == verify_universal_set(broken)


@pytest.mark.order(47)
@pytest.mark.parametrize("n,k,p", [(3, 4, 1), (3, 2, 3), (0, 0, 0), (63, 2, 1)])
def test_bad_parameters(n, k, p):
    with pytest.raises(ValueError):
        build_universal_set(n, k, p)


@pytest.mark.order(48)
def test_greedy_refuses_large_instances():
    with pytest.raises(BudgetExceededError):
        build_universal_set(30, 13, 1, strategy="greedy")


@pytest.mark.order(49)
def test_constraint_count():
    assert constraint_count(5, 3, 1) == 30
    assert constraint_count(4, 4, 2) == 6


@pytest.mark.order(50)
def test_family_text_format():
    f = build_universal_set(5, 2, 1, strategy="indicator")
    text = format_universal_set(f)
    assert text.splitlines()[0] == "u 5 2 1"
    parsed = parse_universal_set(text.splitlines())
    assert (parsed.functions == f.functions).all()
    with pytest.raises(InputFileError) as exc:
        parse_universal_set(["u 3 2 1", "012"])
    assert exc.value.lineno == 2
    with pytest.raises(InputFileError):
        parse_universal_set(["x 3 2 1"])
