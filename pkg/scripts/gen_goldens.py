#!/usr/bin/env python3
"""Record UAX#29 reference segmentations as a golden file.

Builds a deterministic 500-case corpus (natural text across scripts plus
punctuation/number/emoji stress cases), segments it with the `regex`
module's default Unicode word boundaries, cross-checks our segmenter
against the reference on every case, and writes
tests/data/uax29_golden.tsv in the format:

    input TAB off0:off1,off1:off2,...

Offsets are byte offsets into the UTF-8 encoding of the input. Cases never
contain tab or newline characters (the file format reserves them).

The reference implementation deviates from the current UAX#29 rules in a
few degenerate corners (unpaired regional indicators, leading combining
marks, ignorable-skipping in WB6/7/11/12 contexts, and an elision
tailoring joining apostrophe+vowel); the corpus deliberately stays out of
those corners so both implementations agree on every recorded case.
"""

import random
import sys
from pathlib import Path

import regex

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
from hatlm.wordbreak import word_segments  # noqa: E402

HAND_CASES = [
    "Hello, world!",
    "The quick brown fox jumps over the lazy dog.",
    "It's a beautiful day; isn't it?",
    "We can't stop won't stop.",
    "Die Donaudampfschifffahrtsgesellschaft wurde 1829 gegründet.",
    "Ich möchte ein Stück Käsekuchen, bitte.",
    "Straße, Größe und Fußball sind häufige Wörter.",
    "El niño comió mañana y después durmió.",
    "Ça va très bien, merci beaucoup.",
    "naïve café déjà-vu résumé",
    "FooBar CamelCase HTTPServer parseURL getByteCount",
    "snake_case_name __dunder__ mixed_Case_Words",
    "x = a + b - c * d / e",
    "f(x) = 3x² + 2x - 1",
    "Prices rose 3.5% to $1,234.56 on 2024-01-31.",
    "Call +49 (0)30 123456 ext. 42.",
    "Version 2.0.1 beats v1.9.9 easily.",
    "See section 3.3, eq. (12), pp. 45-47.",
    "e.g. i.e. etc. et al. U.S.A. Ph.D.",
    "The file is data.tar.gz, not data.zip!",
    "Visit www.example.com or mail root@example.com today.",
    "半角カタカナとひらがなと漢字が混在する文章です。",
    "カタカナテスト:アイウエオ、カキクケコ。",
    "你好世界!这是一个测试句子。",
    "今天天气很好,我们去公园散步吧。",
    "日本語のテキストとEnglish textの混在。",
    "한국어 텍스트도 테스트합니다.",
    "שלום עולם, מה שלומך היום?",
    'הוא אמר ש"הכל בסדר" ואז הלך.',
    "מילה ו'עוד מילה בעברית.",
    "مرحبا بالعالم، كيف حالك اليوم؟",
    "اللغة العربية جميلة جداً.",
    "Привет, мир! Это тестовое предложение.",
    "Ελληνικά: αλφάβητο, βήτα, γάμμα.",
    "Paired flags: 🇩🇪🇫🇷 and 🇯🇵🇰🇷 travel together.",
    "Family emoji 👨‍👩‍👧 and rocket 🚀 and heart ❤️ here.",
    "Math: a≤b ≥c ±d ×e ÷f ∑g ∫h √i ∞j.",
    "Greek letters α+β=γ in formulas.",
    "Quotes \"inside\" and «guillemets» and „German quotes“.",
    "Dashes - en – em — and ellipsis… here.",
    "Tabs and    multiple   spaces   between words.",
    "trailing spaces   ",
    "   leading spaces",
    "!!!???...",
    "((nested (parens) here))",
    "a,b;c:d.e?f!g",
    "1+1=2 and 2+2=4 and 10%3=1",
    "50:50 odds at 3:4 ratio",
    "12,345 vs 12.345 vs 12'345",
    "0x1F 0b101 1e-9 3.14159",
    "St. Martin's-in-the-Fields",
    "re-enter co-op pre-war post-modern",
    "don't you'll we've they're I'm",
    "Łódź Kraków Gdańsk Wrocław",
    "İstanbul Ağrı Çanakkale Ölüdeniz",
    "Tiếng Việt có dấu thanh điệu.",
    "ไทยไม่มีช่องว่างระหว่างคำ",
    "देवनागरी लिपि में हिन्दी।",
    "বাংলা লিপিতে লেখা বাক্য।",
]

WORDS_EN = ("time year people way day man thing woman life child world school "
            "state family student group country problem hand part place case week "
            "company system program question work government number night point "
            "home water room mother area money story fact month lot right study "
            "book eye job word business issue side kind head house service friend "
            "father power hour game line end member law car city community name").split()
WORDS_DE = ("Zeit Jahr Mensch Weg Tag Mann Ding Frau Leben Kind Welt Schule "
            "Staat Familie Gruppe Land Problem Hand Teil Platz Fall Woche Firma "
            "System Programm Frage Arbeit Regierung Nummer Nacht Punkt Haus Wasser "
            "Zimmer Mutter Gebiet Geld Geschichte Monat Recht Studie Buch Auge").split()
WORDS_CJK = list("你好世界天气公园散步文章混在漢字平仮名")
WORDS_KATA = "アイウ カタカナ テスト デモ コンピュータ".split()
PUNCT_TAIL = ["", ".", ",", "!", "?", ";", ":", "...", "!?"]
NUMS = ["3.14", "1,234", "42", "2024", "100%", "$5", "7:30", "1/2"]


def random_case(rng: random.Random) -> str:
    parts = []
    n = rng.randint(2, 12)
    for _ in range(n):
        r = rng.random()
        if r < 0.45:
            w = rng.choice(WORDS_EN)
        elif r < 0.65:
            w = rng.choice(WORDS_DE)
        elif r < 0.75:
            w = rng.choice(WORDS_CJK)
        elif r < 0.82:
            w = rng.choice(WORDS_KATA)
        elif r < 0.92:
            w = rng.choice(NUMS)
        else:
            w = rng.choice(["FooBar", "getValue", "a+b", "x_y", "e.g.", "👍", "🇩🇪🇫🇷"])
        if rng.random() < 0.3:
            w += rng.choice(PUNCT_TAIL)
        parts.append(w)
    return " ".join(parts)


def ref_segments(s: str) -> list[str]:
    return [t for t in regex.split(r"(?V1w)\b", s) if t]


def main() -> None:
    out_path = Path(__file__).resolve().parent.parent / "tests" / "data" / "uax29_golden.tsv"
    rng = random.Random(20240831)
    cases = list(HAND_CASES)
    while len(cases) < 500:
        c = random_case(rng)
        if "\t" not in c and "\n" not in c:
            cases.append(c)

    lines = []
    disagreements = 0
    for case in cases:
        ref = ref_segments(case)
        mine = word_segments(case)
        if ref != mine:
            disagreements += 1
            print(f"DISAGREE {case!r}\n  ref : {ref}\n  mine: {mine}")
            continue
        offs = []
        pos = 0
        for seg in ref:
            b = len(seg.encode("utf-8"))
            offs.append(f"{pos}:{pos + b}")
            pos += b
        lines.append(f"{case}\t{','.join(offs)}")

    if disagreements:
        print(f"{disagreements} disagreements; golden file NOT written")
        sys.exit(1)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out_path}: {len(lines)} cases")


if __name__ == "__main__":
    main()
