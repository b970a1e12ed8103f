"""Model construction and the teacher-forced forward pass.

The network has three transformer stacks (byte encoder, word backbone, byte
decoder) bridged by two connectors: learned-query cross-attention pooling
(bytes -> word embedding) and per-block word-context cross-attention inside
the decoder. Parameters live in a flat name -> ndarray dict whose shapes
are derived from HatConfig alone.

Parameter accounting notes (validated by tests against published totals):
  * the backbone counts layers only -- it has no final norm; backbone
    outputs are normalized by each decoder block's kv-norm instead;
  * the encoder's pooling connector has no norms and no residual;
  * the word-level begin-of-sequence vector is a real parameter but is
    reported separately (aux) and excluded from the per-component counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import autodiff as ad
from .config import HatConfig, StackConfig
from .splitter import BYTE_BOS, split

# ---------------------------------------------------------------------------
# parameter shapes and counts


def _layer_shapes(prefix: str, s: StackConfig) -> dict[str, tuple]:
    h, inner, kv = s.hidden, s.n_heads * s.head_size, s.n_kv_heads * s.head_size
    return {
        f"{prefix}.attn_norm.gain": (h,),
        f"{prefix}.attn.wq": (h, inner),
        f"{prefix}.attn.wk": (h, kv),
        f"{prefix}.attn.wv": (h, kv),
        f"{prefix}.attn.wo": (inner, h),
        f"{prefix}.mlp_norm.gain": (h,),
        f"{prefix}.mlp.w_gate": (h, s.intermediate),
        f"{prefix}.mlp.w_up": (h, s.intermediate),
        f"{prefix}.mlp.w_down": (s.intermediate, h),
    }


def param_shapes(cfg: HatConfig) -> dict[str, tuple]:
    """Every learnable tensor's shape, derived from the config alone."""
    enc, bb, dec, c = cfg.encoder, cfg.backbone, cfg.decoder, cfg.cross_hidden
    shapes: dict[str, tuple] = {"encoder.byte_embedding": (cfg.byte_vocab, enc.hidden)}
    for i in range(enc.n_layers):
        shapes.update(_layer_shapes(f"encoder.layers.{i}", enc))
    shapes.update({
        "connector.query": (c,),
        "connector.wk": (enc.hidden, c),
        "connector.wv": (enc.hidden, c),
        "connector.wq": (c, c),
        "connector.wo": (c, c),
    })
    shapes["backbone.bos"] = (bb.hidden,)
    for i in range(bb.n_layers):
        shapes.update(_layer_shapes(f"backbone.layers.{i}", bb))
    for i in range(dec.n_layers):
        p = f"decoder.layers.{i}.cross"
        shapes.update({
            f"{p}.pre_norm.gain": (dec.hidden,),
            f"{p}.kv_norm.gain": (bb.hidden,),
            f"{p}.post_norm.gain": (dec.hidden,),
            f"{p}.wq": (dec.hidden, dec.hidden),
            f"{p}.wk": (bb.hidden, dec.hidden),
            f"{p}.wv": (bb.hidden, dec.hidden),
            f"{p}.wo": (dec.hidden, dec.hidden),
        })
        shapes.update(_layer_shapes(f"decoder.layers.{i}", dec))
    shapes["decoder.final_norm.gain"] = (dec.hidden,)
    shapes["decoder.lm_head"] = (dec.hidden, cfg.byte_vocab)
    return shapes


def _layer_count(s: StackConfig) -> int:
    h, inner, kv = s.hidden, s.n_heads * s.head_size, s.n_kv_heads * s.head_size
    attn = h * inner + 2 * h * kv + inner * h
    mlp = 3 * h * s.intermediate
    return attn + mlp + 2 * h


def count_params(cfg: HatConfig) -> dict[str, int]:
    """Exact per-component parameter counts.

    Closed-form integer arithmetic (no tensors are allocated), so this works
    for production-size configs. `aux` holds the BOS word vector, which is
    excluded from the component totals.
    """
    enc, bb, dec, c = cfg.encoder, cfg.backbone, cfg.decoder, cfg.cross_hidden
    connector = c + 2 * enc.hidden * c + 2 * c * c
    encoder = cfg.byte_vocab * enc.hidden + enc.n_layers * _layer_count(enc) + connector
    backbone_layer = _layer_count(bb)
    backbone = bb.n_layers * backbone_layer
    cross_block = 2 * dec.hidden * dec.hidden + 2 * bb.hidden * dec.hidden \
        + 2 * dec.hidden + bb.hidden
    decoder = dec.n_layers * (_layer_count(dec) + cross_block) \
        + dec.hidden + dec.hidden * cfg.byte_vocab
    return {
        "encoder": encoder,
        "backbone": backbone,
        "decoder": decoder,
        "total": encoder + backbone + decoder,
        "backbone_per_layer": backbone_layer,
        "aux": bb.hidden,
    }


# ---------------------------------------------------------------------------
# initialization

def _trunc_normal(rng: np.random.Generator, shape, std: float, dtype) -> np.ndarray:
    out = rng.standard_normal(shape)
    bad = np.abs(out) > 2.0
    while bad.any():
        out[bad] = rng.standard_normal(int(bad.sum()))
        bad = np.abs(out) > 2.0
    return (out * std).astype(dtype)


def init_params(cfg: HatConfig, seed: int, dtype=np.float32) -> dict[str, np.ndarray]:
    """Seeded random parameters: truncated normal (std 0.02, cut at 2 sigma),
    output projections scaled by 1/sqrt(2 n_layers), norm gains at one."""
    rng = np.random.default_rng(seed)
    layer_counts = {"encoder": cfg.encoder.n_layers,
                    "backbone": cfg.backbone.n_layers,
                    "decoder": cfg.decoder.n_layers}
    params = {}
    for name, shape in sorted(param_shapes(cfg).items()):
        if name.endswith("norm.gain"):
            params[name] = np.ones(shape, dtype=dtype)
            continue
        std = 0.02
        if name.endswith((".attn.wo", ".mlp.w_down", ".cross.wo")):
            std /= math.sqrt(2.0 * layer_counts[name.split(".", 1)[0]])
        params[name] = _trunc_normal(rng, shape, std, dtype)
    return params


def group_of(name: str) -> str:
    """Training parameter group of a tensor (encoder / connector / backbone /
    decoder / head). BOS and the decoder cross blocks count as connector:
    they bridge levels and are trained from scratch alongside it."""
    if name.startswith("encoder."):
        return "encoder"
    if name.startswith("connector.") or name == "backbone.bos":
        return "connector"
    if name.startswith("backbone."):
        return "backbone"
    if ".cross." in name:
        return "connector"
    if name in ("decoder.final_norm.gain", "decoder.lm_head"):
        return "head"
    if name.startswith("decoder."):
        return "decoder"
    raise KeyError(name)


PARAM_GROUPS = ("encoder", "connector", "backbone", "decoder", "head")


# ---------------------------------------------------------------------------
# forward pass

@dataclass
class ForwardTrace:
    byte_states: np.ndarray       # [n_bytes, h_enc]
    word_embeddings: np.ndarray   # [n_words, h_bb]
    backbone_outputs: np.ndarray  # [n_words, h_bb] (consumed rows)
    logits: np.ndarray            # [n_bytes, 256]
    logits_var: ad.Var | None = None  # set when built with gradients enabled


def _as_vars(params, rg: bool) -> dict[str, ad.Var]:
    if params and isinstance(next(iter(params.values())), ad.Var):
        return params
    return {k: ad.wrap(v, rg=rg) for k, v in params.items()}


def _band_indices(n: int, window: int):
    w = min(window, n)
    idx = np.arange(n)[:, None] - (w - 1) + np.arange(w)[None, :]
    mask = idx >= 0
    return np.clip(idx, 0, None), mask, w


def _self_attn(P, prefix: str, x: ad.Var, s: StackConfig, cfg: HatConfig,
               positions: np.ndarray) -> ad.Var:
    t = x.shape[0]
    nh, nkv, hs = s.n_heads, s.n_kv_heads, s.head_size
    h = ad.rms_norm(x, cfg.norm_eps, P[f"{prefix}.attn_norm.gain"])
    q = ad.transpose(ad.reshape(ad.matmul(h, P[f"{prefix}.attn.wq"]), (t, nh, hs)), (1, 0, 2))
    k = ad.transpose(ad.reshape(ad.matmul(h, P[f"{prefix}.attn.wk"]), (t, nkv, hs)), (1, 0, 2))
    v = ad.transpose(ad.reshape(ad.matmul(h, P[f"{prefix}.attn.wv"]), (t, nkv, hs)), (1, 0, 2))
    if cfg.qk_norm:
        q = ad.rms_norm(q, cfg.norm_eps)
        k = ad.rms_norm(k, cfg.norm_eps)
    q = ad.rope(q, positions, s.rope_base)
    k = ad.rope(k, positions, s.rope_base)
    if nkv != nh:
        rep = np.repeat(np.arange(nkv), nh // nkv)
        k = ad.gather(k, rep, axis=0)
        v = ad.gather(v, rep, axis=0)
    inv_scale = 1.0 / math.sqrt(hs)

    if s.window is None:
        logits = ad.scale(ad.matmul(q, ad.transpose(k, (0, 2, 1))), inv_scale)
        if cfg.softcap is not None:
            logits = ad.softcap(logits, cfg.softcap)
        mask = np.tril(np.ones((t, t), dtype=bool))
        p = ad.masked_softmax(logits, mask[None])
        o = ad.matmul(p, v)
    else:
        # banded layout: position i sees positions (i-window, i]
        idx, mask, w = _band_indices(t, s.window)
        kb = ad.reshape(ad.gather(k, idx.ravel(), axis=1), (nh, t, w, hs))
        vb = ad.reshape(ad.gather(v, idx.ravel(), axis=1), (nh, t, w, hs))
        qe = ad.reshape(q, (nh, t, 1, hs))
        logits = ad.scale(ad.matmul(qe, ad.transpose(kb, (0, 1, 3, 2))), inv_scale)
        if cfg.softcap is not None:
            logits = ad.softcap(logits, cfg.softcap)
        p = ad.masked_softmax(logits, mask[None, :, None, :])
        o = ad.reshape(ad.matmul(p, vb), (nh, t, hs))

    o = ad.reshape(ad.transpose(o, (1, 0, 2)), (t, nh * hs))
    return ad.matmul(o, P[f"{prefix}.attn.wo"])


def _mlp(P, prefix: str, x: ad.Var, cfg: HatConfig) -> ad.Var:
    h = ad.rms_norm(x, cfg.norm_eps, P[f"{prefix}.mlp_norm.gain"])
    return ad.swiglu(h, P[f"{prefix}.mlp.w_gate"], P[f"{prefix}.mlp.w_up"],
                     P[f"{prefix}.mlp.w_down"])


def _stack(P, name: str, x: ad.Var, s: StackConfig, cfg: HatConfig,
           positions: np.ndarray) -> ad.Var:
    for i in range(s.n_layers):
        prefix = f"{name}.layers.{i}"
        x = ad.add(x, _self_attn(P, prefix, x, s, cfg, positions))
        x = ad.add(x, _mlp(P, prefix, x, cfg))
    return x


def encode_bytes_var(P, cfg: HatConfig, byte_ids: np.ndarray) -> ad.Var:
    t = len(byte_ids)
    if t == 0:
        raise ValueError("empty byte sequence")
    if t > cfg.encoder.max_positions:
        raise ValueError(f"input of {t} bytes exceeds encoder max positions")
    x = ad.gather(P["encoder.byte_embedding"], byte_ids)
    return _stack(P, "encoder", x, cfg.encoder, cfg, np.arange(t))


def pool_words_var(P, cfg: HatConfig, byte_states: ad.Var,
                   spans: list[tuple[int, int]]) -> ad.Var:
    """One word embedding per span via learned-query cross-attention.

    No rotary transform, no residual, no norms: the connector is a bare
    attention read of the span's byte states.
    """
    nh, hs, c = cfg.n_enc_cross_heads, cfg.encoder.head_size, cfg.cross_hidden
    n, t = len(spans), byte_states.shape[0]
    if n == 0:
        return ad.wrap(np.zeros((0, c), dtype=byte_states.dtype))
    k = ad.transpose(ad.reshape(ad.matmul(byte_states, P["connector.wk"]), (t, nh, hs)), (1, 0, 2))
    v = ad.transpose(ad.reshape(ad.matmul(byte_states, P["connector.wv"]), (t, nh, hs)), (1, 0, 2))
    q = ad.transpose(ad.reshape(
        ad.matmul(ad.reshape(P["connector.query"], (1, c)), P["connector.wq"]),
        (1, nh, hs)), (1, 0, 2))                    # [nh, 1, hs]
    logits = ad.scale(ad.matmul(q, ad.transpose(k, (0, 2, 1))), 1.0 / math.sqrt(hs))
    if cfg.softcap is not None:
        logits = ad.softcap(logits, cfg.softcap)
    logits = ad.expand(logits, (nh, n, t))          # same query row for every span
    mask = np.zeros((n, t), dtype=bool)
    for j, (a, b) in enumerate(spans):
        if not 0 <= a < b <= t:
            raise ValueError(f"bad span [{a}, {b})")
        mask[j, a:b] = True
    p = ad.masked_softmax(logits, mask[None])
    o = ad.reshape(ad.transpose(ad.matmul(p, v), (1, 0, 2)), (n, nh * hs))
    return ad.matmul(o, P["connector.wo"])


def backbone_forward_var(P, cfg: HatConfig, word_embs: ad.Var) -> ad.Var:
    """Causal transformer over [BOS; words]; row k predicts word k."""
    n = word_embs.shape[0]
    if n + 1 > cfg.backbone.max_positions:
        raise ValueError(f"{n} words exceed backbone max positions")
    bos = ad.reshape(P["backbone.bos"], (1, cfg.backbone.hidden))
    x = ad.concat([bos, word_embs], axis=0) if n else bos
    return _stack(P, "backbone", x, cfg.backbone, cfg, np.arange(n + 1))


def decode_bytes_var(P, cfg: HatConfig, byte_states: ad.Var, bb_out: ad.Var,
                     byte_row: np.ndarray) -> ad.Var:
    """Decoder blocks: word-context injection, then a local transformer layer.

    Each byte reads exactly one backbone row (its word's predictor), so the
    softmax over that single key is identically 1 and the block reduces to a
    value read. The cross wq/wk projections and the pre-norm still exist as
    parameters (the checkpoint and count layouts include them) but cannot
    influence a one-key softmax.
    """
    t = byte_states.shape[0]
    if len(byte_row) != t:
        raise ValueError("word index length must match byte count")
    if len(byte_row) and (byte_row.min() < 0 or byte_row.max() >= bb_out.shape[0]):
        raise ValueError("word index out of backbone output range")
    x = byte_states
    positions = np.arange(t)
    for i in range(cfg.decoder.n_layers):
        cp = f"decoder.layers.{i}.cross"
        kvn = ad.rms_norm(bb_out, cfg.norm_eps, P[f"{cp}.kv_norm.gain"])
        vrows = ad.matmul(kvn, P[f"{cp}.wv"])       # [rows, h_dec]
        sel = ad.gather(vrows, byte_row)            # [t, h_dec]
        inj = ad.matmul(sel, P[f"{cp}.wo"])
        x = ad.add(x, ad.rms_norm(inj, cfg.norm_eps, P[f"{cp}.post_norm.gain"]))
        prefix = f"decoder.layers.{i}"
        x = ad.add(x, _self_attn(P, prefix, x, cfg.decoder, cfg, positions))
        x = ad.add(x, _mlp(P, prefix, x, cfg))
    h = ad.rms_norm(x, cfg.norm_eps, P["decoder.final_norm.gain"])
    return ad.matmul(h, P["decoder.lm_head"])


# array-level views of the stage operations (inference / test surface)

def encode_bytes(params, cfg: HatConfig, byte_ids) -> np.ndarray:
    """Embedding lookup plus the sliding-window encoder stack; one state row
    per input byte."""
    P = _as_vars(params, rg=False)
    return encode_bytes_var(P, cfg, np.asarray(byte_ids, dtype=np.int64)).v


def pool_words(params, cfg: HatConfig, byte_states, spans) -> np.ndarray:
    P = _as_vars(params, rg=False)
    return pool_words_var(P, cfg, ad.wrap(byte_states), list(spans)).v


def backbone_forward(params, cfg: HatConfig, word_embs) -> np.ndarray:
    """Returns n_words + 1 output rows; row k is the predictor for word k."""
    P = _as_vars(params, rg=False)
    return backbone_forward_var(P, cfg, ad.wrap(word_embs)).v


def decode_bytes(params, cfg: HatConfig, byte_states, backbone_outputs, word_index) -> np.ndarray:
    P = _as_vars(params, rg=False)
    return decode_bytes_var(P, cfg, ad.wrap(byte_states), ad.wrap(backbone_outputs),
                            np.asarray(word_index, dtype=np.int64)).v


def forward_assigned(params, cfg: HatConfig, byte_ids: np.ndarray,
                     pool_spans: list[tuple[int, int]], byte_row: np.ndarray,
                     want_grad: bool = False) -> ForwardTrace:
    """Forward pass with an explicit word assignment.

    `byte_ids` may include sentinel bytes; `pool_spans` are [start, end)
    offsets into `byte_ids` for the words to pool; `byte_row[i]` selects the
    backbone output row byte i cross-attends to (0 = BOS-position output).
    """
    P = _as_vars(params, rg=want_grad)
    byte_states = encode_bytes_var(P, cfg, byte_ids)
    word_embs = pool_words_var(P, cfg, byte_states, pool_spans)
    bb_all = backbone_forward_var(P, cfg, word_embs)
    logits = decode_bytes_var(P, cfg, byte_states, bb_all, byte_row)
    n = word_embs.shape[0]
    return ForwardTrace(
        byte_states=byte_states.v,
        word_embeddings=word_embs.v,
        backbone_outputs=bb_all.v[:n],
        logits=logits.v,
        logits_var=logits if want_grad else None,
    )


def forward(params, cfg: HatConfig, data: bytes, want_grad: bool = False) -> ForwardTrace:
    """Teacher-forced forward over text bytes: split -> encode -> pool ->
    backbone -> decode. logits[i] predicts byte i+1."""
    result = split(data, cfg.max_word_bytes)
    spans = [(s.start, s.end) for s in result.spans]
    byte_row = np.empty(len(data), dtype=np.int64)
    for j, (a, b) in enumerate(spans):
        byte_row[a:b] = j
    byte_ids = np.frombuffer(data, dtype=np.uint8).astype(np.int64)
    return forward_assigned(params, cfg, byte_ids, spans, byte_row, want_grad)


def next_byte_logits(params, cfg: HatConfig, committed: bytes,
                     closed_spans: list[tuple[int, int]],
                     inc_index: np.ndarray,
                     sentinel_prefix: bool) -> np.ndarray:
    """Batch recomputation of the generation path's last-row logits.

    Uses the incremental word assignment (closed words only are pooled;
    bytes attend per `inc_index`), optionally with the 0xFE sentinel
    prepended for empty prompts. Serves as the oracle the cached
    incremental engine is checked against.
    """
    ids = np.frombuffer(committed, dtype=np.uint8).astype(np.int64)
    inc_index = np.asarray(inc_index, dtype=np.int64)
    if sentinel_prefix:
        ids = np.concatenate([np.array([BYTE_BOS], dtype=np.int64), ids])
        closed_spans = [(a + 1, b + 1) for a, b in closed_spans]
        inc_index = np.concatenate([np.zeros(1, dtype=np.int64), inc_index])
    trace = forward_assigned(params, cfg, ids, closed_spans, inc_index)
    return trace.logits[-1]
