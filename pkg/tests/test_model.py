import numpy as np
import pytest

from hatlm import checkpoint, config, model, train
from hatlm.splitter import split

from conftest import random_utf8_strings

TABLE1 = (119_291_904, 6_979_584_000, 93_619_200, 7_192_495_104)
TABLE2 = (476_610_560, 68_452_352_000, 373_884_928, 69_302_847_488)


# ---------------------------------------------------------------------------
# parameter accounting

@pytest.mark.parametrize("preset,expect", [("table1", TABLE1), ("table2", TABLE2)])
def test_published_parameter_counts(preset, expect):
    c = model.count_params(config.PRESETS[preset]())
    assert (c["encoder"], c["backbone"], c["decoder"], c["total"]) == expect


def test_backbone_per_layer_count():
    assert model.count_params(config.table1())["backbone_per_layer"] == 218_112_000


def test_replaced_embedding_reference_size():
    # the embedding matrix the encoder replaces in the 8B tokenizer model
    assert 128_256 * 4_096 == 525_336_576


@pytest.mark.parametrize("preset", ["table1", "table2", "micro"])
def test_shapes_sum_matches_counts(preset):
    cfg = config.PRESETS[preset]()
    counts = model.count_params(cfg)
    total = sum(int(np.prod(s)) for s in model.param_shapes(cfg).values())
    assert total == counts["total"] + counts["aux"]


def test_every_param_has_a_group(micro_cfg):
    for name in model.param_shapes(micro_cfg):
        assert model.group_of(name) in model.PARAM_GROUPS


# ---------------------------------------------------------------------------
# initialization

def test_init_deterministic_and_seed_sensitive(micro_cfg):
    a = model.init_params(micro_cfg, seed=5)
    b = model.init_params(micro_cfg, seed=5)
    c = model.init_params(micro_cfg, seed=6)
    assert all(np.array_equal(a[k], b[k]) for k in a)
    assert any(not np.array_equal(a[k], c[k]) for k in a)


def test_norm_gains_initialized_to_one(micro_cfg, micro_params):
    for name, arr in micro_params.items():
        if name.endswith("norm.gain"):
            assert np.array_equal(arr, np.ones_like(arr))


def test_init_truncated_at_two_sigma(micro_cfg, micro_params):
    w = micro_params["encoder.byte_embedding"]
    assert np.abs(w).max() <= 2 * 0.02 + 1e-9


# ---------------------------------------------------------------------------
# forward pass shape and invariants

def test_trace_shapes(micro_cfg, micro_params):
    data = "Shape check: FooBar 3.14 ok!".encode()
    tr = model.forward(micro_params, micro_cfg, data)
    n_words = len(split(data, micro_cfg.max_word_bytes))
    assert tr.byte_states.shape == (len(data), micro_cfg.encoder.hidden)
    assert tr.word_embeddings.shape == (n_words, micro_cfg.backbone.hidden)
    assert tr.backbone_outputs.shape == (n_words, micro_cfg.backbone.hidden)
    assert tr.logits.shape == (len(data), 256)
    assert np.all(np.isfinite(tr.logits))


def test_shape_closure_random_texts(micro_cfg, micro_params):
    for s in random_utf8_strings(100, seed=17, max_len=25):
        data = s.encode()
        if not data:
            continue
        tr = model.forward(micro_params, micro_cfg, data)
        n_words = len(split(data, micro_cfg.max_word_bytes))
        assert tr.word_embeddings.shape[0] == n_words
        assert tr.logits.shape == (len(data), 256)
        assert np.all(np.isfinite(tr.logits))


def test_forward_bit_deterministic(micro_cfg, micro_params):
    data = b"determinism check 123"
    a = model.forward(micro_params, micro_cfg, data).logits
    b = model.forward(micro_params, micro_cfg, data).logits
    assert np.array_equal(a, b)


def test_loss_at_random_init_near_uniform(micro_cfg):
    params = model.init_params(micro_cfg, seed=77)
    val = train.loss(params, micro_cfg, b"The uniform-logits sanity check text.")
    assert abs(val - np.log(256)) < 0.5


def test_logits_softmax_rows_sum_to_one(micro_cfg, micro_params):
    tr = model.forward(micro_params, micro_cfg, b"softmax rows")
    p = np.exp(tr.logits - tr.logits.max(-1, keepdims=True))
    p /= p.sum(-1, keepdims=True)
    assert np.allclose(p.sum(-1), 1.0, atol=1e-6)


def test_over_length_input_rejected(micro_cfg, micro_params):
    data = b"x" * (micro_cfg.encoder.max_positions + 1)
    with pytest.raises(ValueError):
        model.encode_bytes(micro_params, micro_cfg, np.frombuffer(data, np.uint8))


# ---------------------------------------------------------------------------
# causality suite

def test_byte_level_future_perturbation(micro_cfg, micro_params):
    # mutating a byte leaves all logits at earlier positions bit-unchanged
    base = bytearray(b"aaa bbb ccc ddd eee")
    mut = bytearray(base)
    mut[14] = ord("x")  # inside the 4th word
    a = model.forward(micro_params, micro_cfg, bytes(base)).logits
    b = model.forward(micro_params, micro_cfg, bytes(mut)).logits
    assert np.array_equal(a[:14], b[:14])
    assert not np.array_equal(a[14:], b[14:])


def test_word_level_future_perturbation(micro_cfg, micro_params):
    # perturbing word j leaves backbone outputs at rows <= j unchanged
    data = b"aaa bbb ccc ddd"
    tr = model.forward(micro_params, micro_cfg, data)
    spans = [(s.start, s.end) for s in split(data).spans]
    we = tr.word_embeddings.copy()
    we[2] += 1.0
    out_base = model.backbone_forward(micro_params, micro_cfg, tr.word_embeddings)
    out_pert = model.backbone_forward(micro_params, micro_cfg, we)
    assert np.array_equal(out_base[:3], out_pert[:3])   # rows 0..2 see words < 2 only
    assert not np.array_equal(out_base[3:], out_pert[3:])


def test_cross_word_leakage(micro_cfg, micro_params):
    # bytes of word j are bit-insensitive to backbone rows > j
    data = b"aaa bbb ccc ddd"
    tr = model.forward(micro_params, micro_cfg, data)
    word_index = np.array([0] * 3 + [1] * 4 + [2] * 4 + [3] * 4)
    bb = model.backbone_forward(micro_params, micro_cfg, tr.word_embeddings)
    bb_pert = bb.copy()
    bb_pert[2] += 3.0  # row consumed only by bytes with word_index == 2
    a = model.decode_bytes(micro_params, micro_cfg, tr.byte_states, bb, word_index)
    b = model.decode_bytes(micro_params, micro_cfg, tr.byte_states, bb_pert, word_index)
    assert np.array_equal(a[:7], b[:7])
    assert not np.array_equal(a[7:11], b[7:11])


def test_single_byte_matches_self_only_attention_path(micro_cfg, micro_params):
    # one-byte input: every attention row is a softmax over one key
    from hatlm import kernels as K
    got = model.encode_bytes(micro_params, micro_cfg, [65])
    x = micro_params["encoder.byte_embedding"][65]
    s, cfg = micro_cfg.encoder, micro_cfg
    for i in range(s.n_layers):
        pfx = f"encoder.layers.{i}"
        h = K.rms_norm(x, cfg.norm_eps, micro_params[f"{pfx}.attn_norm.gain"])
        q = (h @ micro_params[f"{pfx}.attn.wq"]).reshape(1, -1)
        k = (h @ micro_params[f"{pfx}.attn.wk"]).reshape(1, -1)
        v = (h @ micro_params[f"{pfx}.attn.wv"]).reshape(1, -1)
        if cfg.qk_norm:
            hs = s.head_size
            q = K.rms_norm(q.reshape(1, -1, hs), cfg.norm_eps).reshape(1, -1)
            k = K.rms_norm(k.reshape(1, -1, hs), cfg.norm_eps).reshape(1, -1)
        att = K.attention(q, k, v, K.Sliding(1), s.n_heads, s.n_kv_heads, cap=cfg.softcap)
        x = x + (att[0] @ micro_params[f"{pfx}.attn.wo"])
        hm = K.rms_norm(x, cfg.norm_eps, micro_params[f"{pfx}.mlp_norm.gain"])
        x = x + K.swiglu_ffn(hm, micro_params[f"{pfx}.mlp.w_gate"],
                             micro_params[f"{pfx}.mlp.w_up"],
                             micro_params[f"{pfx}.mlp.w_down"])
    assert np.allclose(got[0], x, atol=1e-6)


# ---------------------------------------------------------------------------
# pooling connector

def test_pool_single_byte_span_is_projection(micro_cfg, micro_params):
    # softmax over one key: output is exactly O(V(state))
    state = np.random.default_rng(3).standard_normal((1, micro_cfg.encoder.hidden)) \
        .astype(np.float32)
    got = model.pool_words(micro_params, micro_cfg, state, [(0, 1)])
    expect = (state @ micro_params["connector.wv"]) @ micro_params["connector.wo"]
    assert np.allclose(got, expect, atol=1e-6)


def test_pool_identical_bytes_match_single(micro_cfg, micro_params):
    rng = np.random.default_rng(4)
    row = rng.standard_normal((1, micro_cfg.encoder.hidden)).astype(np.float32)
    two = np.concatenate([row, row], axis=0)
    one_out = model.pool_words(micro_params, micro_cfg, row, [(0, 1)])
    two_out = model.pool_words(micro_params, micro_cfg, two, [(0, 2)])
    assert np.allclose(one_out, two_out, atol=1e-6)


def test_pool_output_shape(micro_cfg, micro_params):
    states = np.random.default_rng(5).standard_normal((9, micro_cfg.encoder.hidden)) \
        .astype(np.float32)
    out = model.pool_words(micro_params, micro_cfg, states, [(0, 3), (3, 4), (4, 9)])
    assert out.shape == (3, micro_cfg.backbone.hidden)


def test_pool_empty_span_rejected(micro_cfg, micro_params):
    states = np.zeros((3, micro_cfg.encoder.hidden), dtype=np.float32)
    with pytest.raises(ValueError):
        model.pool_words(micro_params, micro_cfg, states, [(1, 1)])


# ---------------------------------------------------------------------------
# checkpoint round-trip

def test_checkpoint_roundtrip_bit_exact(tmp_path, micro_cfg, micro_params):
    path = tmp_path / "toy.ckpt"
    checkpoint.save(path, micro_cfg, micro_params)
    cfg2, params2 = checkpoint.load(path)
    assert config.to_text(micro_cfg) == config.to_text(cfg2)
    assert set(params2) == set(micro_params)
    for name in micro_params:
        assert np.array_equal(micro_params[name], params2[name])
    probe = b"checkpoint probe text"
    a = model.forward(micro_params, micro_cfg, probe).logits
    b = model.forward(params2, cfg2, probe).logits
    assert np.array_equal(a, b)


def test_checkpoint_rejects_float64(tmp_path, micro_cfg, micro_params64):
    with pytest.raises(checkpoint.CheckpointError):
        checkpoint.save(tmp_path / "bad.ckpt", micro_cfg, micro_params64)


def test_checkpoint_rejects_corruption(tmp_path, micro_cfg, micro_params):
    path = tmp_path / "toy.ckpt"
    checkpoint.save(path, micro_cfg, micro_params)
    blob = path.read_bytes()
    (tmp_path / "trunc.ckpt").write_bytes(blob[:-8])
    with pytest.raises(checkpoint.CheckpointError):
        checkpoint.load(tmp_path / "trunc.ckpt")
    (tmp_path / "magic.ckpt").write_bytes(b"NOTMAGIC" + blob[8:])
    with pytest.raises(checkpoint.CheckpointError):
        checkpoint.load(tmp_path / "magic.ckpt")


def test_config_text_roundtrip():
    for preset in config.PRESETS.values():
        cfg = preset()
        assert config.from_text(config.to_text(cfg)) == cfg
