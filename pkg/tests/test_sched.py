import re

import numpy as np
import pytest

from hatlm import infer
from hatlm.infer import (
    BatchRunner,
    BoundarySync,
    FixedByteStride,
    GenSession,
    SamplingConfig,
    StepPlan,
    prefill,
    schedule,
    step_byte,
)


def solo_run(params, cfg, prompt, budget=20, sampling=None):
    s = GenSession(params, cfg, sampling or SamplingConfig("greedy"), max_new_bytes=budget)
    infer.generate(s, prompt)
    return s


def batch_run(params, cfg, prompts, policy, budget=20, samplings=None):
    sessions = [GenSession(params, cfg, (samplings[i] if samplings else SamplingConfig("greedy")),
                           max_new_bytes=budget) for i in range(len(prompts))]
    runner = BatchRunner(sessions, policy)
    runner.prefill_all(prompts)
    runner.run_to_completion()
    return sessions, runner


def test_step_plan_disjoint_lists():
    with pytest.raises(ValueError):
        StepPlan(byte_steps=(0, 1), word_steps=(1,))


def test_schedule_requires_sessions():
    with pytest.raises(ValueError):
        schedule([], BoundarySync())


def test_batch_of_one_equals_unbatched(micro_cfg, micro_params):
    prompt = b"single session "
    solo = solo_run(micro_params, micro_cfg, prompt)
    for policy in (BoundarySync(), FixedByteStride(1), FixedByteStride(4)):
        batch, _ = batch_run(micro_params, micro_cfg, [prompt], policy)
        assert bytes(batch[0].generated) == bytes(solo.generated)
        assert np.array_equal(batch[0].cur_logits, solo.cur_logits)


def test_boundary_sync_waits_for_all(micro_cfg, micro_params):
    # session 0 closes a word on its first sampled byte (space after "wo"),
    # session 1 stays mid-word; the next plan must schedule byte steps only
    s0 = GenSession(micro_params, micro_cfg, SamplingConfig("forced", forced=b" x"),
                    max_new_bytes=8)
    s1 = GenSession(micro_params, micro_cfg, SamplingConfig("forced", forced=b"bcdef"),
                    max_new_bytes=8)
    prefill(s0, b"wo")
    prefill(s1, b"a")
    from hatlm.infer import byte_phase
    byte_phase(s0)   # hits the boundary, blocks on the backbone
    assert s0.status == "at_boundary"
    plan = schedule([s0, s1], BoundarySync())
    assert plan.word_steps == ()
    assert plan.byte_steps == (1,)
    byte_phase(s1)
    plan2 = schedule([s0, s1], BoundarySync())   # still only s1 can advance
    assert 0 not in plan2.byte_steps


def test_batch_invariance_under_both_policies(micro_cfg, micro_params):
    prompts = [b"alpha beta ", b"x", b"Hello, wor", b"3.14 "]
    solos = [bytes(solo_run(micro_params, micro_cfg, p).generated) for p in prompts]
    for policy in (BoundarySync(), FixedByteStride(1), FixedByteStride(3)):
        batch, _ = batch_run(micro_params, micro_cfg, prompts, policy)
        assert [bytes(s.generated) for s in batch] == solos


def test_batch_invariance_with_temperature(micro_cfg, micro_params):
    prompts = [b"one ", b"two "]
    samplings = [SamplingConfig("temperature", temperature=0.9, seed=i) for i in range(2)]
    solos = [bytes(solo_run(micro_params, micro_cfg, p, sampling=s).generated)
             for p, s in zip(prompts, samplings)]
    batch, _ = batch_run(micro_params, micro_cfg, prompts, BoundarySync(),
                         samplings=samplings)
    assert [bytes(s.generated) for s in batch] == solos


def test_backbone_call_accounting_over_batch(micro_cfg, micro_params):
    prompts = [b"a few words here ", b"tiny", b"x y z ", b"Hello, world! "]
    batch, _ = batch_run(micro_params, micro_cfg, prompts, BoundarySync())
    calls = sum(s.backbone_calls for s in batch)
    closes = sum(s.gen_closes for s in batch)
    prefill_words = sum(s.prefill_words for s in batch)
    assert calls == closes + prefill_words + len(batch)


def test_backbone_reduction_vs_per_byte(micro_cfg, micro_params):
    # forcing natural English text: backbone advances once per word, not per
    # byte, so bytes-per-call approximates the mean chunk length
    text = b"the quick brown fox jumps over the lazy dog again and again "
    s = GenSession(micro_params, micro_cfg, SamplingConfig("forced", forced=text),
                   max_new_bytes=len(text))
    prefill(s, b"")
    while not s.finished:
        step_byte(s)
    gen_bytes = len(s.generated)
    word_calls = s.gen_closes
    per_byte_calls = gen_bytes          # the naive per-byte-consultation baseline
    assert word_calls < per_byte_calls / 2
    mean_word_len = gen_bytes / max(1, word_calls)
    assert 2.0 < mean_word_len < 12.0


def test_trace_log_format_and_determinism(micro_cfg, micro_params):
    prompts = [b"tick ", b"tock"]
    _, r1 = batch_run(micro_params, micro_cfg, prompts, BoundarySync(), budget=6)
    _, r2 = batch_run(micro_params, micro_cfg, prompts, BoundarySync(), budget=6)
    assert r1.trace_text() == r2.trace_text()
    line_re = re.compile(r"^\d+\t(s\d+=(P|W|B(:[0-9a-f]{2})?))( s\d+=(P|W|B(:[0-9a-f]{2})?))*$")
    for line in r1.trace_text().splitlines():
        assert line_re.match(line), line
    first = r1.trace_text().splitlines()[0]
    assert first == "0\ts0=P s1=P"


def test_trace_byte_actions_match_emitted(micro_cfg, micro_params):
    prompts = [b"zz "]
    batch, runner = batch_run(micro_params, micro_cfg, prompts, FixedByteStride(2), budget=5)
    emitted = []
    for line in runner.trace:
        for m in re.finditer(r"s0=B:([0-9a-f]{2})", line):
            emitted.append(int(m.group(1), 16))
    # the final EOS byte (if any) is logged but not committed
    committed = list(bytes(batch[0].generated))
    assert emitted[:len(committed)] == committed


def test_word_phase_requires_boundary(micro_cfg, micro_params):
    s = prefill(GenSession(micro_params, micro_cfg, SamplingConfig("greedy"),
                           max_new_bytes=4), b"q")
    with pytest.raises(infer.SessionError):
        infer.word_phase(s)
