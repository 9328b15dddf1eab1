"""Text ingestion: tokenization, orthographic sentence segmentation,
and the derived series (sentence lengths, word recurrence gaps,
rank-frequency tables).

A sentence is defined orthographically: a run of tokens closed by a
sentence-ending mark (. ? ! or an ellipsis followed by a capitalized
word), except where the mark belongs to a known abbreviation, a
single-letter initial, or sits inside an unclosed bracket/quote pair.
Segmentation is deterministic: same bytes + same config = same spans.
"""

from __future__ import annotations

import hashlib
import re
import unicodedata
from dataclasses import dataclass, field, replace
from importlib import resources

import numpy as np

__all__ = [
    "Token",
    "Document",
    "Sentence",
    "SegmentationReport",
    "SentenceLengthSeries",
    "RecurrenceSeries",
    "RankFrequencyTable",
    "TokenizerConfig",
    "SegmenterConfig",
    "AbbreviationLexicon",
    "tokenize",
    "segment_sentences",
    "sentence_length_series",
    "word_recurrence_series",
    "rank_frequency",
    "slice_series",
]

WORD = "word"
TERMINATOR = "terminator"
OTHER = "other"

# Maximal letter/digit runs joined by internal apostrophes or hyphens;
# an ellipsis is one token, any other punctuation one token per char.
_TOKEN_RE = re.compile(
    r"(?P<ellipsis>\.\.\.|…)"
    r"|(?P<word>[^\W_]+(?:['’‘-][^\W_]+)*)"
    r"|(?P<term>[.?!])"
    r"|(?P<other>\S)",
    re.UNICODE,
)

_OPENERS = {"(": ")", "[": "]", "{": "}", "“": "”", "«": "»"}
_CLOSERS = {v: k for k, v in _OPENERS.items()}


@dataclass(frozen=True)
class Token:
    kind: str  # WORD | TERMINATOR | OTHER
    surface: str
    position: int  # index in the document token list


@dataclass(frozen=True)
class Document:
    title: str
    language_tag: str
    tokens: tuple
    source_hash: str


@dataclass(frozen=True)
class TokenizerConfig:
    normalization: str = "NFC"
    encoding: str = "utf-8"


@dataclass(frozen=True)
class SegmenterConfig:
    suppress_inside_brackets: bool = True  # rule C
    emit_trailing: bool = False
    min_sentences: int = 5000


@dataclass(frozen=True)
class Sentence:
    """Token span [start, end) in the document, end exclusive."""

    start: int
    end: int
    word_count: int
    char_count: int  # characters of the word surfaces only


@dataclass(frozen=True)
class SegmentationReport:
    n_sentences: int
    lexicon_hits: int
    initial_hits: int
    bracket_suppressions: int
    ellipsis_continuations: int
    empty_spans_skipped: int
    trailing_tokens_dropped: int


@dataclass(frozen=True)
class SentenceLengthSeries:
    values: np.ndarray  # positive ints, one per sentence
    unit: str  # "words" | "characters"
    source: dict = field(default_factory=dict)
    min_sentences: int = 5000

    def __post_init__(self):
        v = np.asarray(self.values, dtype=int)
        if len(v) and v.min() < 1:
            raise ValueError("sentence lengths must be >= 1")
        object.__setattr__(self, "values", v)

    @property
    def j_max(self) -> int:
        return len(self.values)

    @property
    def below_threshold(self) -> bool:
        return self.j_max < self.min_sentences


@dataclass(frozen=True)
class RecurrenceSeries:
    target_word: str
    gaps: np.ndarray  # word counts between consecutive occurrences
    source: dict = field(default_factory=dict)


@dataclass(frozen=True)
class RankFrequencyTable:
    entries: list  # (rank, surface, count), rank 1 = most frequent
    include_terminators: bool
    terminator_surface: str = "⟨.⟩"


class AbbreviationLexicon:
    """Per-language abbreviation list (entries like "mr.", compared
    case-insensitively against word + following period)."""

    def __init__(self, entries=()):
        self.entries = frozenset(e.lower().rstrip(".") for e in entries if e.strip())

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.entries

    def __len__(self):
        return len(self.entries)

    @classmethod
    def from_file(cls, path) -> "AbbreviationLexicon":
        entries = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if line:
                    entries.append(line)
        return cls(entries)

    @classmethod
    def for_language(cls, tag: str) -> "AbbreviationLexicon":
        """Bundled lexicon for a language tag; unknown tags fall back to
        an empty lexicon (initials-only rule still applies)."""
        name = f"{tag.lower()[:2]}.txt"
        base = resources.files("textfract") / "lexicons"
        path = base / name
        if path.is_file():
            entries = [
                ln.split("#", 1)[0].strip()
                for ln in path.read_text(encoding="utf-8").splitlines()
            ]
            return cls(e for e in entries if e)
        return cls()


def tokenize(raw, config: TokenizerConfig | None = None,
             title: str = "", language_tag: str = "en") -> Document:
    """Split raw text (bytes or str) into Word / Terminator / Other
    tokens. Bytes that fail to decode raise with the byte offset."""
    config = config or TokenizerConfig()
    if isinstance(raw, bytes):
        digest_src = raw
        try:
            text = raw.decode(config.encoding)
        except UnicodeDecodeError as exc:
            raise ValueError(
                f"input is not valid {config.encoding} at byte {exc.start}"
            ) from exc
    else:
        text = raw
        digest_src = raw.encode("utf-8")
    text = unicodedata.normalize(config.normalization, text)
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        if m.lastgroup == "word":
            kind = WORD
        elif m.lastgroup in ("term", "ellipsis"):
            kind = TERMINATOR
        else:
            kind = OTHER
        surface = "…" if m.lastgroup == "ellipsis" else m.group()
        tokens.append(Token(kind=kind, surface=surface, position=len(tokens)))
    return Document(
        title=title,
        language_tag=language_tag,
        tokens=tuple(tokens),
        source_hash=hashlib.sha256(digest_src).hexdigest(),
    )


def _is_initial(word: str) -> bool:
    return len(word) == 1 and word.isalpha() and word.isupper()


def _next_word(tokens, i):
    for t in tokens[i + 1 :]:
        if t.kind == WORD:
            return t
        if t.kind == TERMINATOR:
            return None
    return None


def segment_sentences(doc: Document, lexicon: AbbreviationLexicon | None = None,
                      config: SegmenterConfig | None = None):
    """Split a tokenized document into sentence spans.

    Returns (sentences, report). A terminator closes the current span
    unless one of the exception rules fires; spans without any word are
    skipped (counted in the report), as is an unterminated tail unless
    ``config.emit_trailing`` is set.
    """
    lexicon = lexicon if lexicon is not None else AbbreviationLexicon.for_language(doc.language_tag)
    config = config or SegmenterConfig()
    tokens = doc.tokens
    sentences = []
    lexicon_hits = initial_hits = bracket_suppr = ellipsis_cont = 0
    empty_skipped = 0
    start = 0
    depth = 0
    quote_open = False  # straight double quotes toggle

    def close(end_excl: int):
        nonlocal start, empty_skipped
        span = tokens[start:end_excl]
        words = [t for t in span if t.kind == WORD]
        if words:
            sentences.append(
                Sentence(
                    start=start,
                    end=end_excl,
                    word_count=len(words),
                    char_count=sum(len(t.surface) for t in words),
                )
            )
        else:
            empty_skipped += 1
        start = end_excl

    for i, tok in enumerate(tokens):
        if tok.kind == OTHER:
            if tok.surface in _OPENERS:
                depth += 1
            elif tok.surface in _CLOSERS:
                depth = max(0, depth - 1)
            elif tok.surface == '"':
                quote_open = not quote_open
            continue
        if tok.kind != TERMINATOR:
            continue

        prev = tokens[i - 1] if i > 0 else None
        if tok.surface == "." and prev is not None and prev.kind == WORD:
            if prev.surface in lexicon:
                lexicon_hits += 1
                continue
            if _is_initial(prev.surface):
                initial_hits += 1
                continue
        if tok.surface == "…":
            nxt = _next_word(tokens, i)
            if nxt is None or not nxt.surface[0].isupper():
                ellipsis_cont += 1
                continue
        if config.suppress_inside_brackets and (depth > 0 or quote_open):
            nxt = _next_word(tokens, i)
            if nxt is None or not nxt.surface[0].isupper():
                bracket_suppr += 1
                continue
        close(i + 1)

    trailing = len(tokens) - start
    if trailing > 0 and config.emit_trailing:
        close(len(tokens))
        trailing = 0
    report = SegmentationReport(
        n_sentences=len(sentences),
        lexicon_hits=lexicon_hits,
        initial_hits=initial_hits,
        bracket_suppressions=bracket_suppr,
        ellipsis_continuations=ellipsis_cont,
        empty_spans_skipped=empty_skipped,
        trailing_tokens_dropped=trailing,
    )
    return sentences, report


def sentence_length_series(sentences, unit: str = "words",
                           source: dict | None = None,
                           min_sentences: int = 5000) -> SentenceLengthSeries:
    """Series l(j) of per-sentence word (or character) counts."""
    if not sentences:
        raise ValueError("no sentences to build a series from")
    if unit == "words":
        values = [s.word_count for s in sentences]
    elif unit == "characters":
        values = [s.char_count for s in sentences]
    else:
        raise ValueError(f"unknown unit {unit!r}")
    return SentenceLengthSeries(
        values=np.asarray(values, dtype=int),
        unit=unit,
        source=dict(source or {}),
        min_sentences=min_sentences,
    )


def word_recurrence_series(doc: Document, target: str,
                           fold_case: bool = True) -> RecurrenceSeries:
    """Gaps, in word counts, between consecutive occurrences of
    ``target``; terminators and other punctuation do not advance the
    word index.

    Passing "." (or the pooled pseudo-word "⟨.⟩") targets the
    sentence-ending marks themselves; the resulting gaps are the word
    counts between consecutive full stops, i.e. the sentence-length
    series shifted by one sentence.
    """
    pooled_terminators = target in (".", "⟨.⟩")
    want = target.lower() if fold_case else target
    indices = []
    word_idx = 0
    for t in doc.tokens:
        if t.kind == TERMINATOR and pooled_terminators:
            indices.append(word_idx)
            continue
        if t.kind != WORD:
            continue
        surface = t.surface.lower() if fold_case else t.surface
        if surface == want:
            indices.append(word_idx)
        word_idx += 1
    if len(indices) < 2:
        raise ValueError(
            f"target {target!r} occurs {len(indices)} time(s); need >= 2"
        )
    gaps = np.diff(np.asarray(indices))
    if pooled_terminators:
        # back-to-back marks ("?!", "...") delimit empty spans, which
        # segmentation also skips
        gaps = gaps[gaps > 0]
    return RecurrenceSeries(
        target_word=target,
        gaps=gaps,
        source={"title": doc.title, "source_hash": doc.source_hash,
                "fold_case": fold_case},
    )


def rank_frequency(doc: Document, include_terminators: bool = False,
                   fold_case: bool = True,
                   terminator_surface: str = "⟨.⟩") -> RankFrequencyTable:
    """Zipf table: words (case-folded by default) ranked by count,
    descending, ties broken by first occurrence. With
    ``include_terminators`` all sentence-ending marks pool into one
    pseudo-word."""
    if not doc.tokens:
        raise ValueError("empty document")
    counts: dict[str, int] = {}
    order: dict[str, int] = {}
    for t in doc.tokens:
        if t.kind == WORD:
            key = t.surface.lower() if fold_case else t.surface
        elif t.kind == TERMINATOR and include_terminators:
            key = terminator_surface
        else:
            continue
        if key not in counts:
            order[key] = len(order)
            counts[key] = 0
        counts[key] += 1
    ranked = sorted(counts, key=lambda k: (-counts[k], order[k]))
    entries = [(r + 1, k, counts[k]) for r, k in enumerate(ranked)]
    return RankFrequencyTable(
        entries=entries,
        include_terminators=include_terminators,
        terminator_surface=terminator_surface,
    )


def slice_series(series: SentenceLengthSeries, start: int, stop: int) -> SentenceLengthSeries:
    """Contiguous subseries over 1-based inclusive sentence indices,
    recorded in the provenance."""
    if not (1 <= start <= stop <= series.j_max):
        raise ValueError(
            f"slice [{start}, {stop}] out of range 1..{series.j_max}"
        )
    source = dict(series.source)
    source["slice"] = [start, stop]
    return replace(series, values=series.values[start - 1 : stop], source=source)
