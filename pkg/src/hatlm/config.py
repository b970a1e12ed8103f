"""Model configuration: per-stack hyperparameters plus connector settings.

Configs serialize to canonical key-sorted `key=value` text so that two
equal configs always produce byte-identical files (used both for bundled
.cfg files and for checkpoint headers).
"""

from __future__ import annotations

from dataclasses import dataclass, fields

CONFIG_FORMAT_VERSION = 1


@dataclass(frozen=True)
class StackConfig:
    n_layers: int
    n_heads: int
    n_kv_heads: int
    head_size: int
    hidden: int
    mlp_expansion: float
    rope_base: float
    window: int | None      # sliding look-back incl. self; None = global causal
    max_positions: int

    @property
    def intermediate(self) -> int:
        return int(round(self.mlp_expansion * self.hidden))

    def validate(self, name: str) -> None:
        if self.n_heads * self.head_size != self.hidden:
            raise ValueError(f"{name}: n_heads*head_size must equal hidden")
        if self.n_heads % self.n_kv_heads:
            raise ValueError(f"{name}: n_heads not divisible by n_kv_heads")
        if self.head_size % 2:
            raise ValueError(f"{name}: head_size must be even for rotary pairs")
        if self.window is not None and self.window < 1:
            raise ValueError(f"{name}: window must be >= 1")


@dataclass(frozen=True)
class HatConfig:
    encoder: StackConfig
    backbone: StackConfig
    decoder: StackConfig
    cross_hidden: int        # encoder-side connector width, equals backbone hidden
    n_enc_cross_heads: int
    n_dec_cross_heads: int
    max_word_bytes: int
    qk_norm: bool
    softcap: float | None    # attention logit cap, None disables
    norm_eps: float = 1e-5
    byte_vocab: int = 256

    def __post_init__(self):
        self.encoder.validate("encoder")
        self.backbone.validate("backbone")
        self.decoder.validate("decoder")
        if self.cross_hidden != self.backbone.hidden:
            raise ValueError("cross_hidden must equal backbone hidden")
        if self.n_enc_cross_heads * self.encoder.head_size != self.cross_hidden:
            raise ValueError("encoder cross heads must span cross_hidden")
        if self.n_dec_cross_heads * self.decoder.head_size != self.decoder.hidden:
            raise ValueError("decoder cross-attention inner dim must equal decoder hidden")
        if self.encoder.hidden != self.decoder.hidden:
            raise ValueError("decoder consumes encoder states: hidden sizes must match")
        if self.byte_vocab != 256:
            raise ValueError("byte vocabulary is fixed at 256")
        if self.max_word_bytes < 4:
            raise ValueError("max_word_bytes must hold one UTF-8 codepoint")


def table1() -> HatConfig:
    """The 8B-class configuration (6/32/4 layers, hidden 1024/4096/1024)."""
    return HatConfig(
        encoder=StackConfig(6, 8, 8, 128, 1024, 2.75, 1e5, 768, 262_144),
        backbone=StackConfig(32, 32, 8, 128, 4096, 3.5, 5e5, None, 32_900),
        decoder=StackConfig(4, 8, 8, 128, 1024, 2.75, 1e5, 768, 262_144),
        cross_hidden=4096,
        n_enc_cross_heads=32,
        n_dec_cross_heads=8,
        max_word_bytes=128,
        qk_norm=False,
        softcap=None,
    )


def table2() -> HatConfig:
    """The 70B-class configuration (6/80/4 layers, hidden 2048/8192/2048)."""
    return HatConfig(
        encoder=StackConfig(6, 16, 16, 128, 2048, 2.75, 1e5, 768, 98_304),
        backbone=StackConfig(80, 64, 8, 128, 8192, 3.5, 5e5, None, 12_288),
        decoder=StackConfig(4, 16, 16, 128, 2048, 2.75, 1e5, 768, 98_304),
        cross_hidden=8192,
        n_enc_cross_heads=64,
        n_dec_cross_heads=16,
        max_word_bytes=128,
        qk_norm=False,
        softcap=None,
    )


def micro() -> HatConfig:
    """Desk-scale test configuration: 2/2/2 layers, hidden 16/64/16."""
    return HatConfig(
        encoder=StackConfig(2, 2, 1, 8, 16, 2.0, 1e5, 8, 4096),
        backbone=StackConfig(2, 8, 4, 8, 64, 2.0, 5e5, None, 1024),
        decoder=StackConfig(2, 2, 1, 8, 16, 2.0, 1e5, 8, 4096),
        cross_hidden=64,
        n_enc_cross_heads=8,
        n_dec_cross_heads=2,
        max_word_bytes=16,
        qk_norm=True,
        softcap=30.0,
    )


PRESETS = {"table1": table1, "table2": table2, "micro": micro}


def _fmt(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _parse(s: str):
    if s == "none":
        return None
    if s in ("true", "false"):
        return s == "true"
    try:
        return int(s)
    except ValueError:
        return float(s)


def to_text(cfg: HatConfig) -> str:
    """Canonical key-sorted text form; identical configs give identical text."""
    items = {"format_version": CONFIG_FORMAT_VERSION}
    for f in fields(cfg):
        v = getattr(cfg, f.name)
        if isinstance(v, StackConfig):
            for sf in fields(v):
                items[f"{f.name}.{sf.name}"] = getattr(v, sf.name)
        else:
            items[f.name] = v
    return "".join(f"{k}={_fmt(items[k])}\n" for k in sorted(items))


def from_text(text: str) -> HatConfig:
    raw = {}
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"line {ln}: expected key=value, got {line!r}")
        k, _, v = line.partition("=")
        raw[k.strip()] = _parse(v.strip())
    version = raw.pop("format_version", None)
    if version != CONFIG_FORMAT_VERSION:
        raise ValueError(f"unsupported config format version {version!r}")

    stacks = {}
    for stack in ("encoder", "backbone", "decoder"):
        kw = {}
        for f in fields(StackConfig):
            key = f"{stack}.{f.name}"
            if key not in raw:
                raise ValueError(f"missing config key {key}")
            kw[f.name] = raw.pop(key)
        stacks[stack] = StackConfig(**kw)

    top = {}
    for f in fields(HatConfig):
        if f.name in ("encoder", "backbone", "decoder"):
            continue
        if f.name not in raw:
            raise ValueError(f"missing config key {f.name}")
        top[f.name] = raw.pop(f.name)
    if raw:
        raise ValueError(f"unknown config keys: {sorted(raw)}")
    return HatConfig(**stacks, **top)


def load(path) -> HatConfig:
    with open(path, encoding="utf-8") as fh:
        return from_text(fh.read())


def save(cfg: HatConfig, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_text(cfg))
