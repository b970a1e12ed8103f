#!/usr/bin/env python3
"""Regenerate src/hatlm/_wb_tables.py from the `regex` module's Unicode data.

The `regex` package ships current UCD property data. We dump the Word_Break
property plus Extended_Pictographic as run-length encoded ranges so the
segmenter has no runtime dependency beyond the stdlib.

Usage: python scripts/gen_wb_tables.py [output_path]
"""

import sys
from pathlib import Path

import regex

WB_VALUES = [
    "CR", "LF", "Newline", "Extend", "ZWJ", "Regional_Indicator", "Format",
    "Katakana", "Hebrew_Letter", "ALetter", "Single_Quote", "Double_Quote",
    "MidNumLet", "MidLetter", "MidNum", "Numeric", "ExtendNumLet", "WSegSpace",
]

MAX_CP = 0x110000
SURROGATE_LO, SURROGATE_HI = 0xD800, 0xE000


def property_ranges(pattern: str) -> list[tuple[int, int]]:
    """Codepoint ranges (inclusive start, exclusive end) matching a regex property."""
    chunks = []
    for lo in range(0, MAX_CP, 0x10000):
        hi = min(lo + 0x10000, MAX_CP)
        cps = [cp for cp in range(lo, hi) if not SURROGATE_LO <= cp < SURROGATE_HI]
        text = "".join(map(chr, cps))
        pat = regex.compile(pattern + "+", regex.V1)
        for m in pat.finditer(text):
            start_cp = cps[m.start()]
            # runs are contiguous in cps, which may skip the surrogate gap
            run = [cps[i] for i in range(m.start(), m.end())]
            begin = run[0]
            prev = run[0]
            for cp in run[1:]:
                if cp != prev + 1:
                    chunks.append((begin, prev + 1))
                    begin = cp
                prev = cp
            chunks.append((begin, prev + 1))
    # merge adjacent chunks across 0x10000 slab borders
    chunks.sort()
    merged = []
    for b, e in chunks:
        if merged and merged[-1][1] == b:
            merged[-1][1] = e
        else:
            merged.append([b, e])
    return [(b, e) for b, e in merged]


def main() -> None:
    out_path = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "src" / "hatlm" / "_wb_tables.py"
    )

    wb_ranges = []  # (start, end, class_index)
    for idx, value in enumerate(WB_VALUES, start=1):
        for b, e in property_ranges(rf"\p{{Word_Break={value}}}"):
            wb_ranges.append((b, e, idx))
    wb_ranges.sort()

    ext_pict = property_ranges(r"\p{Extended_Pictographic}")

    uni_version = regex.regex.copyright if hasattr(regex.regex, "copyright") else ""
    lines = [
        '"""Word_Break and Extended_Pictographic range tables (generated file).',
        "",
        "Generated by scripts/gen_wb_tables.py from the `regex` module's Unicode",
        "database. Do not edit by hand.",
        '"""',
        "",
        "# class indices; 0 means Other",
        "WB_CLASS_NAMES = " + repr(["Other"] + WB_VALUES),
        "",
        "# sorted (start, end, class) with end exclusive; gaps are Other",
        "WB_RANGES = [",
    ]
    for b, e, c in wb_ranges:
        lines.append(f"    (0x{b:05X}, 0x{e:05X}, {c}),")
    lines.append("]")
    lines.append("")
    lines.append("EXT_PICT_RANGES = [")
    for b, e in ext_pict:
        lines.append(f"    (0x{b:05X}, 0x{e:05X}),")
    lines.append("]")
    lines.append("")
    out_path.write_text("\n".join(lines))
    print(f"wrote {out_path}: {len(wb_ranges)} WB ranges, {len(ext_pict)} ExtPict ranges")


if __name__ == "__main__":
    main()
