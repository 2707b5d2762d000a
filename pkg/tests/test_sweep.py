"""Sweep machinery: per-algebra checks, merging, process-count invariance."""

from lieform import (
    ALL_SOLUBLE,
    NILPOTENT,
    SweepConfig,
    SweepResult,
    check_algebra,
    sweep_run,
)
from lieform.sweep import sweep_summary_lines
from support import r2


def test_check_algebra_counts():
    result = check_algebra(r2(), [NILPOTENT, ALL_SOLUBLE])
    assert result.algebras == 1
    # 4 maximals classified per formation; 3 nilpotent normalisers + L itself
    assert result.maximals_classified == 8
    assert result.normalisers_checked == 4
    assert result.ok


def test_sweep_run_small():
    result = sweep_run(SweepConfig(field="GF(3)", max_dim=2))
    assert result.algebras == 4
    assert result.ok
    assert result.elapsed > 0.0


def test_result_roundtrip_excludes_elapsed():
    result = sweep_run(SweepConfig(field="GF(2)", max_dim=2))
    data = result.to_dict()
    assert "elapsed" not in data
    back = SweepResult.from_dict(data)
    assert back.to_dict() == data
    assert back.ok == result.ok


def test_merge_adds_counts():
    first = check_algebra(r2(), [NILPOTENT])
    second = check_algebra(r2("GF(2)"), [NILPOTENT])
    merged = SweepResult()
    merged.merge(first)
    merged.merge(second)
    assert merged.algebras == 2
    assert merged.maximals_classified == first.maximals_classified + second.maximals_classified


def test_process_count_does_not_change_output():
    config = SweepConfig(field="GF(2)", max_dim=3)
    single = sweep_run(config, threads=1)
    forked = sweep_run(config, threads=3)
    assert single.to_dict() == forked.to_dict()


def test_summary_lines_shape():
    result = sweep_run(SweepConfig(field="GF(2)", max_dim=2))
    lines = sweep_summary_lines(result)
    assert len(lines) == 8
    assert lines[0] == "algebras checked: 3"
    assert lines[-1] == "result: ok"
