"""Command-line surface: thin adapters over the library operations.

Machine-readable results go to stdout, diagnostics to stderr. Usage errors
exit with status 2 (argparse), operational errors with status 1. Set
HATLM_LOG=debug|info|warning to control stderr verbosity.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

import numpy as np

from . import checkpoint, config, infer, metrics, model, train
from .splitter import SplitError, split

log = logging.getLogger("hatlm")


def _setup_logging() -> None:
    level = os.environ.get("HATLM_LOG", "warning").upper()
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")


def _load_config(spec: str) -> config.HatConfig:
    if spec in config.PRESETS:
        return config.PRESETS[spec]()
    return config.load(spec)


def _load_model(args) -> tuple[config.HatConfig, dict]:
    if getattr(args, "ckpt", None):
        return checkpoint.load(args.ckpt)
    cfg = _load_config(args.config)
    return cfg, model.init_params(cfg, seed=args.seed)


# ---------------------------------------------------------------------------

def cmd_split(args) -> int:
    if args.text is not None:
        data = args.text.encode("utf-8")
    else:
        with open(args.file, "rb") as fh:
            data = fh.read()
    result = split(data, args.max_word_bytes)
    out = sys.stdout
    if args.offsets:
        for s in result.spans:
            out.write(f"{s.start}:{s.end}\n")
    else:
        for chunk in result.chunks(data):
            out.write(chunk.decode("utf-8") + "\n")
    return 0


def cmd_count_params(args) -> int:
    cfg = _load_config(args.config)
    counts = model.count_params(cfg)
    if args.format == "kv":
        for key in ("encoder", "backbone", "decoder", "total", "backbone_per_layer", "aux"):
            print(f"{key}={counts[key]}")
    else:
        print(f"encoder  {counts['encoder']:>15,}")
        print(f"backbone {counts['backbone']:>15,}")
        print(f"decoder  {counts['decoder']:>15,}")
        print(f"total    {counts['total']:>15,}")
        print(f"# backbone per layer: {counts['backbone_per_layer']:,}; "
              f"aux (BOS vector, excluded above): {counts['aux']:,}")
    return 0


def cmd_train_toy(args) -> int:
    cfg = _load_config(args.config)
    with open(args.corpus, "rb") as fh:
        corpus = fh.read()
    schedule = train.LrSchedule(warmup_steps=args.warmup, stable_lr=args.lr,
                                stable_steps=max(0, args.steps - args.warmup - args.decay),
                                decay_steps=args.decay)
    policy = train.GroupPolicy()
    if args.policy:
        with open(args.policy, encoding="utf-8") as fh:
            policy = train.GroupPolicy.from_text(fh.read())
    log.info("training %s steps on %s bytes", args.steps, len(corpus))
    result = train.train_loop(cfg, corpus, schedule, policy, steps=args.steps,
                              seed=args.seed, seq_len=args.seq_len)
    if args.loss_curve:
        train.write_loss_curve(result.loss_curve, args.loss_curve)
    if args.save:
        checkpoint.save(args.save, cfg, result.params)
    chunks = [corpus[i:i + args.seq_len] for i in range(0, len(corpus), args.seq_len)]
    chunks = [c for c in chunks if len(c) >= 2]
    weights = [len(c) - 1 for c in chunks]
    losses = [train.loss(result.params, cfg, c) for c in chunks]
    final = sum(l * w for l, w in zip(losses, weights)) / sum(weights)
    print(f"final_loss={final:.6f}")
    print(f"steps={args.steps}")
    return 0


def cmd_generate(args) -> int:
    cfg, params = _load_model(args)
    if args.greedy:
        sampling = infer.SamplingConfig("greedy")
    else:
        sampling = infer.SamplingConfig("temperature", temperature=args.temperature,
                                        seed=args.seed)
    session = infer.GenSession(params, cfg, sampling, max_new_bytes=args.max_bytes)
    infer.generate(session, args.prompt.encode("utf-8"))
    data = bytes(session.generated)
    if args.hex:
        print(data.hex())
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    log.info("generated %d bytes, %d backbone calls", len(data), session.backbone_calls)
    return 0


def cmd_bench_sched(args) -> int:
    cfg, params = _load_model(args)
    with open(args.prompts, encoding="utf-8") as fh:
        prompts = [line.rstrip("\n").encode("utf-8") for line in fh if line.strip()]
    if not prompts:
        raise ValueError("no prompts")
    if args.policy == "boundary_sync":
        policy = infer.BoundarySync()
    elif args.policy.startswith("stride:"):
        policy = infer.FixedByteStride(int(args.policy.split(":", 1)[1]))
    else:
        raise ValueError(f"unknown policy {args.policy!r} (boundary_sync or stride:N)")
    sessions = [infer.GenSession(params, cfg, infer.SamplingConfig("greedy"),
                                 max_new_bytes=args.max_bytes) for _ in prompts]
    runner = infer.BatchRunner(sessions, policy)
    runner.prefill_all(prompts)
    runner.run_to_completion()
    total_bytes = sum(len(s.generated) for s in sessions)
    calls = sum(s.backbone_calls for s in sessions)
    closes = sum(s.gen_closes for s in sessions)
    prefill_words = sum(s.prefill_words for s in sessions)
    print(f"sessions={len(sessions)}")
    print(f"ticks={runner.tick - 1}")
    print(f"generated_bytes={total_bytes}")
    print(f"backbone_calls={calls}")
    print(f"gen_word_closes={closes}")
    print(f"prefill_words={prefill_words}")
    if calls:
        print(f"bytes_per_backbone_call={total_bytes / calls:.4f}")
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(runner.trace_text())
    return 0


def cmd_compress(args) -> int:
    report = metrics.compression_report(args.files, args.max_word_bytes)
    print(report.format_kv() if args.format == "kv" else report.format())
    return 0 if not report.errors else 1


def cmd_ckpt_roundtrip(args) -> int:
    cfg = _load_config(args.config)
    params = model.init_params(cfg, seed=args.seed)
    checkpoint.save(args.out, cfg, params)
    cfg2, params2 = checkpoint.load(args.out)
    if config.to_text(cfg) != config.to_text(cfg2):
        raise ValueError("config did not round-trip")
    for name in params:
        if not np.array_equal(params[name], params2[name]):
            raise ValueError(f"tensor {name} did not round-trip bit-exactly")
    probe = b"roundtrip probe 123"
    a = model.forward(params, cfg, probe).logits
    b = model.forward(params2, cfg2, probe).logits
    if not np.array_equal(a, b):
        raise ValueError("forward outputs differ after round-trip")
    print(f"ok tensors={len(params)} forward=bit-exact path={args.out}")
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hatlm", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("split", help="split text into word chunks")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--text")
    g.add_argument("--file")
    sp.add_argument("--offsets", action="store_true", help="print byte offsets")
    sp.add_argument("--max-word-bytes", type=int, default=128)
    sp.set_defaults(func=cmd_split)

    cp = sub.add_parser("count-params", help="exact per-component parameter counts")
    cp.add_argument("--config", required=True, help="preset name or .cfg path")
    cp.add_argument("--format", choices=("text", "kv"), default="text")
    cp.set_defaults(func=cmd_count_params)

    tt = sub.add_parser("train-toy", help="toy training run")
    tt.add_argument("--config", default="micro")
    tt.add_argument("--corpus", required=True)
    tt.add_argument("--steps", type=int, default=2000)
    tt.add_argument("--seed", type=int, default=0)
    tt.add_argument("--seq-len", type=int, default=256)
    tt.add_argument("--lr", type=float, default=3e-3)
    tt.add_argument("--warmup", type=int, default=100)
    tt.add_argument("--decay", type=int, default=500)
    tt.add_argument("--policy", help="group policy file")
    tt.add_argument("--save", help="write final checkpoint here")
    tt.add_argument("--loss-curve", help="write step<TAB>loss lines here")
    tt.set_defaults(func=cmd_train_toy)

    gen = sub.add_parser("generate", help="incremental generation from a checkpoint")
    gen.add_argument("--ckpt")
    gen.add_argument("--config", default="micro", help="used with --seed when no --ckpt")
    gen.add_argument("--prompt", required=True)
    gen.add_argument("--max-bytes", type=int, default=64)
    gen.add_argument("--greedy", action="store_true")
    gen.add_argument("--temperature", type=float, default=1.0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--hex", action="store_true", help="print hex instead of raw bytes")
    gen.set_defaults(func=cmd_generate)

    bs = sub.add_parser("bench-sched", help="batched scheduling statistics")
    bs.add_argument("--ckpt")
    bs.add_argument("--config", default="micro")
    bs.add_argument("--seed", type=int, default=0)
    bs.add_argument("--prompts", required=True, help="file with one prompt per line")
    bs.add_argument("--policy", default="boundary_sync")
    bs.add_argument("--max-bytes", type=int, default=32)
    bs.add_argument("--trace", help="write the tick trace log here")
    bs.set_defaults(func=cmd_bench_sched)

    cm = sub.add_parser("compress", help="bytes-per-position report over files")
    cm.add_argument("files", nargs="+")
    cm.add_argument("--max-word-bytes", type=int, default=128)
    cm.add_argument("--format", choices=("text", "kv"), default="text")
    cm.set_defaults(func=cmd_compress)

    cr = sub.add_parser("ckpt-roundtrip", help="save + load + verify bit-exactness")
    cr.add_argument("--config", default="micro")
    cr.add_argument("--seed", type=int, default=0)
    cr.add_argument("--out", required=True)
    cr.set_defaults(func=cmd_ckpt_roundtrip)
    return p


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, SplitError, infer.SessionError,
            checkpoint.CheckpointError, FloatingPointError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
