"""Toy-scale training: cross-entropy loss, analytic gradients, Adam with a
warmup-stable-decay schedule, and per-group freezing / learning-rate
multipliers.

Gradients come from the reverse-mode graph in :mod:`hatlm.autodiff`; the
test suite validates them against central finite differences in float64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import autodiff as ad
from .config import HatConfig
from .model import PARAM_GROUPS, forward, group_of, init_params

WEIGHT_DECAY_EXEMPT_SUFFIX = "norm.gain"
WEIGHT_DECAY_EXEMPT_NAMES = ("encoder.byte_embedding", "backbone.bos")


@dataclass(frozen=True)
class LrSchedule:
    """Piecewise warmup-stable-decay: linear 0 -> stable_lr over
    warmup_steps, constant for stable_steps, linear to final_lr over
    decay_steps."""
    warmup_steps: int
    stable_lr: float
    stable_steps: int
    decay_steps: int
    final_lr: float = 0.0


def lr_at(schedule: LrSchedule, step: int) -> float:
    w, s, d = schedule.warmup_steps, schedule.stable_steps, schedule.decay_steps
    if step < 0:
        raise ValueError("negative step")
    if step < w:
        return schedule.stable_lr * step / w
    if step < w + s:
        return schedule.stable_lr
    if step < w + s + d:
        frac = (step - w - s) / d
        return schedule.stable_lr + (schedule.final_lr - schedule.stable_lr) * frac
    return schedule.final_lr


@dataclass(frozen=True)
class GroupPolicy:
    """Per parameter group: no updates before frozen_until_step, and an
    effective learning rate of lr * lr_multiplier afterwards."""
    frozen_until_step: dict = field(default_factory=dict)
    lr_multiplier: dict = field(default_factory=dict)

    def __post_init__(self):
        for g in list(self.frozen_until_step) + list(self.lr_multiplier):
            if g not in PARAM_GROUPS:
                raise ValueError(f"unknown parameter group {g!r}")
        if any(m <= 0 for m in self.lr_multiplier.values()):
            raise ValueError("lr multipliers must be positive")

    def frozen_at(self, group: str, step: int) -> bool:
        return step < self.frozen_until_step.get(group, 0)

    def multiplier(self, group: str) -> float:
        return self.lr_multiplier.get(group, 1.0)

    def to_text(self) -> str:
        items = {}
        for g in PARAM_GROUPS:
            items[f"{g}.frozen_until_step"] = self.frozen_until_step.get(g, 0)
            items[f"{g}.lr_multiplier"] = self.lr_multiplier.get(g, 1.0)
        return "".join(f"{k}={items[k]}\n" for k in sorted(items))

    @classmethod
    def from_text(cls, text: str) -> "GroupPolicy":
        frozen, mult = {}, {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            k, _, v = line.partition("=")
            group, _, what = k.strip().partition(".")
            if what == "frozen_until_step":
                frozen[group] = int(v)
            elif what == "lr_multiplier":
                mult[group] = float(v)
            else:
                raise ValueError(f"unknown policy key {k!r}")
        return cls(frozen, mult)


def hatification_policy(frozen_steps: int = 2000,
                        backbone_multiplier: float = 0.1) -> GroupPolicy:
    """Backbone delayed and slowed (pretrained part), everything else full rate."""
    return GroupPolicy(frozen_until_step={"backbone": frozen_steps},
                       lr_multiplier={"backbone": backbone_multiplier})


# ---------------------------------------------------------------------------
# loss and gradients

def loss(params, cfg: HatConfig, data: bytes) -> float:
    """Mean next-byte cross-entropy over the len(data)-1 predictable positions."""
    if len(data) < 2:
        raise ValueError("need at least 2 bytes to form a prediction target")
    trace = forward(params, cfg, data)
    logits = trace.logits[:-1]
    targets = np.frombuffer(data, dtype=np.uint8)[1:].astype(np.int64)
    m = logits.max(axis=-1, keepdims=True)
    lse = m.squeeze(-1) + np.log(np.exp(logits - m).sum(-1))
    return float((lse - logits[np.arange(len(targets)), targets]).mean())


def loss_and_grads(params, cfg: HatConfig, data: bytes,
                   frozen: tuple[str, ...] = ()) -> tuple[float, dict]:
    if len(data) < 2:
        raise ValueError("need at least 2 bytes to form a prediction target")
    P = {k: ad.wrap(v, rg=group_of(k) not in frozen) for k, v in params.items()}
    trace = forward(P, cfg, data, want_grad=True)
    targets = np.frombuffer(data, dtype=np.uint8)[1:].astype(np.int64)
    out = ad.cross_entropy(ad.narrow(trace.logits_var, 0, 0, len(data) - 1), targets)
    ad.backward(out)
    grads = {k: (P[k].grad if P[k].grad is not None else np.zeros_like(v))
             for k, v in params.items()}
    return float(out.v), grads


def backward(params, cfg: HatConfig, data: bytes,
             frozen: tuple[str, ...] = ()) -> dict:
    """Analytic gradients of the loss, with frozen groups exactly zero."""
    return loss_and_grads(params, cfg, data, frozen)[1]


def clip_global_norm(grads: dict, max_norm: float,
                     names: tuple[str, ...] | None = None) -> float:
    """Scale grads (in place) so their joint L2 norm is at most max_norm."""
    keys = grads.keys() if names is None else names
    total = math.sqrt(sum(float(np.sum(grads[k].astype(np.float64) ** 2))
                          for k in keys))
    if total > max_norm and total > 0:
        scale = max_norm / total
        for k in keys:
            grads[k] = grads[k] * scale
    return total


@dataclass
class AdamState:
    beta1: float = 0.9
    beta2: float = 0.95
    eps: float = 1e-8
    weight_decay: float = 0.05
    m: dict = field(default_factory=dict)
    v: dict = field(default_factory=dict)
    t: dict = field(default_factory=dict)  # per-tensor update count


def _decayed(name: str) -> bool:
    return not (name.endswith(WEIGHT_DECAY_EXEMPT_SUFFIX)
                or name in WEIGHT_DECAY_EXEMPT_NAMES)


def adam_step(params: dict, grads: dict, state: AdamState, lr_of_name) -> None:
    """One decoupled-weight-decay Adam update in place.

    `lr_of_name(name)` returns the effective step size (schedule x group
    multiplier), or None to skip the tensor entirely (frozen)."""
    for name in sorted(params):
        lr = lr_of_name(name)
        if lr is None:
            continue
        g = grads[name]
        if name not in state.m:
            state.m[name] = np.zeros_like(params[name])
            state.v[name] = np.zeros_like(params[name])
            state.t[name] = 0
        state.t[name] += 1
        t = state.t[name]
        state.m[name] = state.beta1 * state.m[name] + (1 - state.beta1) * g
        state.v[name] = state.beta2 * state.v[name] + (1 - state.beta2) * g * g
        mhat = state.m[name] / (1 - state.beta1 ** t)
        vhat = state.v[name] / (1 - state.beta2 ** t)
        upd = mhat / (np.sqrt(vhat) + state.eps)
        if state.weight_decay and _decayed(name):
            upd = upd + state.weight_decay * params[name]
        params[name] = params[name] - np.asarray(lr, dtype=params[name].dtype) * upd


@dataclass
class TrainResult:
    params: dict
    loss_curve: list[float]            # training loss per step


def train_loop(cfg: HatConfig, corpus: bytes, schedule: LrSchedule,
               policy: GroupPolicy, steps: int, seed: int,
               seq_len: int = 256, clip_norm: float = 1.0,
               params: dict | None = None) -> TrainResult:
    """Deterministic single-sequence-per-step training.

    The corpus is cut into seq_len-byte documents visited round-robin.
    Aborts with a diagnostic if the loss diverges to NaN.
    """
    if not corpus:
        raise ValueError("empty corpus")
    chunks = [corpus[i:i + seq_len] for i in range(0, len(corpus), seq_len)]
    chunks = [c for c in chunks if len(c) >= 2]
    if not chunks:
        raise ValueError("corpus too short for the sequence length")
    if params is None:
        params = init_params(cfg, seed)
    else:
        params = dict(params)
    state = AdamState()
    curve: list[float] = []
    for step in range(steps):
        data = chunks[step % len(chunks)]
        frozen = tuple(g for g in PARAM_GROUPS if policy.frozen_at(g, step))
        step_loss, grads = loss_and_grads(params, cfg, data, frozen)
        if math.isnan(step_loss):
            raise FloatingPointError(f"loss diverged to NaN at step {step}")
        clip_global_norm(grads, clip_norm,
                         tuple(k for k in grads if group_of(k) not in frozen))
        base_lr = lr_at(schedule, step)

        def lr_of_name(name: str, _frozen=frozen, _lr=base_lr):
            g = group_of(name)
            if g in _frozen:
                return None
            return _lr * policy.multiplier(g)

        adam_step(params, grads, state, lr_of_name)
        curve.append(step_loss)
    return TrainResult(params=params, loss_curve=curve)


def write_loss_curve(curve, path) -> None:
    """Plain-text loss curve: one `step<TAB>loss` line per step."""
    with open(path, "w", encoding="utf-8") as fh:
        for i, v in enumerate(curve):
            fh.write(f"{i}\t{v:.6f}\n")
