"""Byte-level word splitting: UAX#29 boundaries plus merge rules.

A splitting rule maps a UTF-8 byte sequence to contiguous, non-empty,
non-overlapping byte spans whose concatenation reproduces the input. On top
of default UAX#29 word segments this applies, in order:

  1. camel-case refinement: a lowercase->uppercase transition inside a
     segment opens a new chunk ("FooBar" -> "Foo", "Bar")
  2. math-symbol isolation: every codepoint of general category Sm is its
     own chunk
  3. punctuation merge: a maximal run of category-P* chunks merges into the
     preceding chunk when that chunk is a word (contains a codepoint that is
     neither whitespace nor punctuation)
  4. whitespace merge: a maximal run of White_Space chunks merges into the
     following chunk; a text-final run stays its own chunk
  5. length cap: chunks longer than max_word_bytes are force-split at the
     last codepoint boundary at or below the cap

Both a batch splitter and a byte-at-a-time incremental splitter are
provided; the incremental form closes a word exactly when a pushed byte
proves a new chunk has begun under the batch rules.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field

from .wordbreak import word_boundaries

DEFAULT_MAX_WORD_BYTES = 128

# model sentinels live outside valid UTF-8 and are stripped before splitting
BYTE_BOS = 0xFE
BYTE_EOS = 0xFF


class SplitError(ValueError):
    """Raised for byte sequences that are not valid UTF-8.

    `offset` is the index of the first offending byte.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class WordSpan:
    start: int
    end: int

    def __post_init__(self):
        if not self.start < self.end:
            raise ValueError(f"empty span [{self.start}, {self.end})")


@dataclass(frozen=True)
class SplitResult:
    spans: tuple[WordSpan, ...]

    def __len__(self) -> int:
        return len(self.spans)

    def __iter__(self):
        return iter(self.spans)

    def chunks(self, data: bytes) -> list[bytes]:
        return [data[s.start:s.end] for s in self.spans]


def _decode_utf8(data: bytes) -> tuple[str, list[int]]:
    """Strict UTF-8 decode returning the text and per-codepoint byte offsets."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise SplitError("invalid UTF-8", exc.start) from None
    offsets = []
    pos = 0
    for ch in text:
        offsets.append(pos)
        pos += len(ch.encode("utf-8"))
    offsets.append(pos)
    return text, offsets


# Unicode White_Space=Yes (str.isspace also matches 0x1C-0x1F, which are not)
_WHITE_SPACE = frozenset(
    list(range(0x09, 0x0E)) + [0x20, 0x85, 0xA0, 0x1680]
    + list(range(0x2000, 0x200B)) + [0x2028, 0x2029, 0x202F, 0x205F, 0x3000]
)


def _is_ws(ch: str) -> bool:
    return ord(ch) in _WHITE_SPACE


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def _is_sm(ch: str) -> bool:
    return unicodedata.category(ch) == "Sm"


_WS, _PUNCT, _WORD = 0, 1, 2


def _classify(text: str) -> int:
    if all(_is_ws(c) for c in text):
        return _WS
    if all(_is_punct(c) for c in text):
        return _PUNCT
    return _WORD


def _refine(text: str, start: int, end: int) -> list[int]:
    """Extra chunk boundaries inside one UAX#29 segment (codepoint indices).

    Applies camel-case splitting and math-symbol isolation.
    """
    cuts = []
    prev_lower = False
    for i in range(start, end):
        cat = unicodedata.category(text[i])
        if i > start and (cat == "Sm" or _is_sm(text[i - 1])):
            cuts.append(i)
        elif prev_lower and cat == "Lu":
            cuts.append(i)
        prev_lower = cat == "Ll"
    return cuts


def _split_codepoints(text: str) -> list[tuple[int, int]]:
    """Chunk boundaries as codepoint index pairs, before the byte-length cap."""
    if not text:
        return []
    bounds = word_boundaries(text)
    pieces = []
    for i in range(len(bounds) - 1):
        a, b = bounds[i], bounds[i + 1]
        cut_points = [a] + _refine(text, a, b) + [b]
        for j in range(len(cut_points) - 1):
            pieces.append((cut_points[j], cut_points[j + 1]))

    # punctuation merges backward into the preceding word chunk
    merged: list[list[int]] = []   # [start, end, class]
    for a, b in pieces:
        cls = _classify(text[a:b])
        if cls == _PUNCT and merged and merged[-1][2] == _WORD:
            merged[-1][1] = b
        else:
            merged.append([a, b, cls])

    # whitespace runs merge forward; a final run stays alone
    out: list[tuple[int, int]] = []
    ws_start = None
    for a, b, cls in merged:
        if cls == _WS:
            if ws_start is None:
                ws_start = a
            continue
        out.append((a if ws_start is None else ws_start, b))
        ws_start = None
    if ws_start is not None:
        out.append((ws_start, len(text)))
    return out


def split(data: bytes, max_word_bytes: int = DEFAULT_MAX_WORD_BYTES) -> SplitResult:
    """Split a UTF-8 byte sequence into word chunks.

    Sentinel bytes 0xFE/0xFF are rejected as invalid UTF-8 (they cannot
    appear in well-formed input). Raises SplitError on malformed input.
    """
    if max_word_bytes < 4:
        raise ValueError("max_word_bytes must allow one UTF-8 codepoint (>= 4)")
    text, offs = _decode_utf8(data)
    spans = []
    for a, b in _split_codepoints(text):
        lo = a
        while offs[b] - offs[lo] > max_word_bytes:
            # force-split at the last codepoint boundary within the cap
            hi = lo
            while offs[hi + 1] - offs[lo] <= max_word_bytes:
                hi += 1
            spans.append(WordSpan(offs[lo], offs[hi]))
            lo = hi
        spans.append(WordSpan(offs[lo], offs[b]))
    return SplitResult(tuple(spans))


def word_index_of_bytes(data: bytes,
                        max_word_bytes: int = DEFAULT_MAX_WORD_BYTES) -> list[int]:
    """Per-byte chunk indices: index[i] = j iff byte i lies in span j."""
    result = split(data, max_word_bytes)
    index = []
    for j, span in enumerate(result.spans):
        index.extend([j] * (span.end - span.start))
    return index


@dataclass(frozen=True)
class WordClosed:
    """Event: the chunk covering bytes [start, end) is final."""
    start: int
    end: int


# number of continuation bytes implied by a UTF-8 lead byte, or -1 if invalid
def _utf8_expect(lead: int) -> int:
    if lead < 0x80:
        return 0
    if 0xC2 <= lead <= 0xDF:
        return 1
    if 0xE0 <= lead <= 0xEF:
        return 2
    if 0xF0 <= lead <= 0xF4:
        return 3
    return -1


@dataclass
class IncrementalSplitterState:
    """Single-owner incremental splitter fed one byte at a time.

    Keeps the full accumulated byte sequence and re-derives the chunking on
    each completed codepoint; a chunk is reported closed once it is no
    longer the last (still-extendable) chunk of the prefix split. Accepted
    bytes always form a valid UTF-8 prefix (a multi-byte codepoint may be in
    flight).
    """

    max_word_bytes: int = DEFAULT_MAX_WORD_BYTES
    buf: bytearray = field(default_factory=bytearray)
    closed_words: int = 0
    _partial: int = 0          # continuation bytes still owed
    _inconsistencies: int = 0  # prefix-consistency violations observed

    @property
    def pending(self) -> bytes:
        """Bytes accumulated after the last closed word."""
        spans = split(bytes(self.buf[:len(self.buf) - self._partial_len()]),
                      self.max_word_bytes).spans
        start = spans[self.closed_words].start if self.closed_words < len(spans) else len(self.buf)
        return bytes(self.buf[start:])

    def _partial_len(self) -> int:
        # length of the trailing incomplete codepoint, if any
        if self._partial == 0:
            return 0
        n = 1
        while n <= len(self.buf) and _utf8_expect(self.buf[-n]) < 0:
            n += 1
        return n

    def push_byte(self, b: int) -> list[WordClosed]:
        if not 0 <= b <= 0xFF:
            raise ValueError(f"not a byte: {b}")
        off = len(self.buf)
        if self._partial > 0:
            if not 0x80 <= b <= 0xBF:
                raise SplitError("expected UTF-8 continuation byte", off)
            self.buf.append(b)
            self._partial -= 1
            if self._partial > 0:
                return []
            # full codepoint landed; validate strictly (overlongs, surrogates)
            n = 1
            while _utf8_expect(self.buf[-n]) < 0:
                n += 1
            try:
                bytes(self.buf[-n:]).decode("utf-8")
            except UnicodeDecodeError:
                raise SplitError("invalid UTF-8", off - n + 1) from None
        else:
            expect = _utf8_expect(b)
            if expect < 0:
                raise SplitError("invalid UTF-8", off)
            self.buf.append(b)
            if expect > 0:
                self._partial = expect
                return []

        spans = split(bytes(self.buf), self.max_word_bytes).spans
        n_closed = len(spans) - 1  # the final chunk may still extend
        events = []
        if n_closed < self.closed_words:
            # a previously reported boundary vanished; never retract
            self._inconsistencies += self.closed_words - n_closed
        for j in range(self.closed_words, n_closed):
            events.append(WordClosed(spans[j].start, spans[j].end))
        self.closed_words = max(self.closed_words, n_closed)
        return events

    def push_bytes(self, data: bytes) -> list[WordClosed]:
        events = []
        for b in data:
            events.extend(self.push_byte(b))
        return events

    @classmethod
    def from_prefix(cls, data: bytes,
                    max_word_bytes: int = DEFAULT_MAX_WORD_BYTES) -> "IncrementalSplitterState":
        """State equivalent to pushing `data` byte by byte (data must be complete UTF-8)."""
        spans = split(data, max_word_bytes).spans
        state = cls(max_word_bytes=max_word_bytes)
        state.buf = bytearray(data)
        state.closed_words = max(0, len(spans) - 1)
        return state


def incremental_word_index(data: bytes,
                           max_word_bytes: int = DEFAULT_MAX_WORD_BYTES) -> list[int]:
    """Per-byte chunk index as seen by the incremental splitter.

    Byte i is assigned the number of words already closed once its push has
    been processed, i.e. the index of the open chunk it lands in. Differs
    from `word_index_of_bytes` exactly where prefix consistency fails.
    """
    state = IncrementalSplitterState(max_word_bytes=max_word_bytes)
    index = []
    for b in data:
        state.push_byte(b)
        index.append(state.closed_words)
    return index


def boundary_divergence(data: bytes,
                        max_word_bytes: int = DEFAULT_MAX_WORD_BYTES) -> tuple[int, list[int]]:
    """Count bytes whose incremental chunk index differs from the batch split.

    Returns (count, offending byte offsets). Expected 0 for ASCII text; any
    nonzero finding is catalogued by the caller, not hidden.
    """
    full = word_index_of_bytes(data, max_word_bytes)
    inc = incremental_word_index(data, max_word_bytes)
    bad = [i for i, (a, b) in enumerate(zip(full, inc)) if a != b]
    return len(bad), bad


def strip_sentinels(data: bytes) -> bytes:
    """Drop 0xFE/0xFF model sentinel bytes before splitting."""
    return bytes(b for b in data if b not in (BYTE_BOS, BYTE_EOS))
