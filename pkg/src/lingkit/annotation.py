"""Annotated-document data model, CoNLL-U reading/writing, and a rule-based fallback annotator.

High-quality annotations are expected to come from an external tagger/NER
pipeline serialized as CoNLL-U (entity spans ride in the MISC column as
``NER=B-<LABEL>`` / ``NER=I-<LABEL>`` BIO tags). :func:`annotate_plaintext`
provides a deterministic, dictionary-based fallback so the toolkit runs on
raw text without any external model.
"""

from __future__ import annotations

import logging
import re
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from typing import IO, Iterable, Iterator

from .errors import ConlluParseError

logger = logging.getLogger(__name__)

# Universal POS tags, in the fixed order used throughout the feature catalog.
UPOS_TAGS = (
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "SPACE",
)

# Fallback bucket for input tags outside the set above (e.g. UD's `X`).
# Tokens in this bucket count as words but belong to no POS category.
OTHER_UPOS = "X"

# Entity labels, in the fixed order used throughout the feature catalog.
ENTITY_LABELS = (
    "PERSON", "NORP", "FAC", "ORG", "GPE", "LOC", "PRODUCT", "EVENT", "ART",
    "LAW", "LANGUAGE", "DATE", "TIME", "PERCENT", "MONEY", "QUANTITY",
    "ORDINAL", "CARDINAL",
)

_UPOS_SET = frozenset(UPOS_TAGS)
_ENTITY_LABEL_SET = frozenset(ENTITY_LABELS)


def _load_stopwords() -> frozenset[str]:
    text = resources.files("lingkit").joinpath("data/stopwords_en.txt").read_text("utf-8")
    words = (line.strip() for line in text.splitlines())
    return frozenset(w for w in words if w and not w.startswith("#"))


# Pinned English stopword list; swapping it changes t_stopword and friends.
STOPWORDS = _load_stopwords()

_VOWELS = frozenset("aeiouy")


def count_syllables(word: str) -> int:
    """Heuristic English syllable count.

    Counts maximal vowel runs (``aeiouy``), drops one count for a terminal
    silent "e" (unless the word ends in consonant + "le"), and never returns
    less than 1 for a word containing a letter. Strings without letters
    count 0.
    """
    w = word.lower()
    if not any(c.isalpha() for c in w):
        return 0
    runs = 0
    prev_vowel = False
    for c in w:
        is_vowel = c in _VOWELS
        if is_vowel and not prev_vowel:
            runs += 1
        prev_vowel = is_vowel
    if runs > 1 and w.endswith("e"):
        keeps_e = w.endswith("le") and len(w) >= 3 and w[-3].isalpha() and w[-3] not in _VOWELS
        if not keeps_e:
            runs -= 1
    return max(runs, 1)


@dataclass(frozen=True)
class Token:
    """One surface token with its annotation-derived attributes."""

    form: str
    lemma: str
    upos: str
    is_stopword: bool
    char_count: int
    syllable_count: int

    def __post_init__(self):
        if self.upos not in _UPOS_SET and self.upos != OTHER_UPOS:
            raise ValueError(f"invalid UPOS tag {self.upos!r}")
        if self.char_count != len(self.form):
            raise ValueError("char_count must equal len(form)")
        if (self.syllable_count == 0) != (not any(c.isalpha() for c in self.form)):
            raise ValueError("syllable_count is 0 exactly for letterless forms")
        if self.syllable_count < 0:
            raise ValueError("syllable_count must be nonnegative")

    @classmethod
    def build(cls, form: str, lemma: str | None = None, upos: str = "NOUN") -> "Token":
        """Construct a token, deriving lemma casing, counts, and the stopword flag."""
        lemma = (form if lemma is None else lemma).lower()
        return cls(
            form=form,
            lemma=lemma,
            upos=upos if upos in _UPOS_SET else OTHER_UPOS,
            is_stopword=form.lower() in STOPWORDS,
            char_count=len(form),
            syllable_count=count_syllables(form),
        )


@dataclass(frozen=True)
class EntitySpan:
    """A labeled entity mention covering the half-open token range [start, end)."""

    label: str
    start: int
    end: int

    def __post_init__(self):
        if self.label not in _ENTITY_LABEL_SET:
            raise ValueError(f"invalid entity label {self.label!r}")
        if not 0 <= self.start < self.end:
            raise ValueError("entity span must be a nonempty token range")


@dataclass(frozen=True)
class AnnotatedDocument:
    """A fully annotated document: tokens, sentence partition, entity spans.

    ``sentences`` are half-open ``(start, end)`` index intervals that
    partition the token list in order. Documents are immutable and safe to
    share across threads.
    """

    tokens: tuple[Token, ...] = ()
    sentences: tuple[tuple[int, int], ...] = ()
    entities: tuple[EntitySpan, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "sentences", tuple((int(a), int(b)) for a, b in self.sentences))
        object.__setattr__(self, "entities", tuple(self.entities))
        expected_start = 0
        for start, end in self.sentences:
            if start != expected_start or end <= start:
                raise ValueError("sentence intervals must be nonempty, ordered, and contiguous")
            expected_start = end
        if expected_start != len(self.tokens):
            raise ValueError("sentence intervals must cover the token list exactly")
        last_end = -1
        for span in sorted(self.entities, key=lambda s: s.start):
            if span.end > len(self.tokens):
                raise ValueError("entity span exceeds document bounds")
            if span.start < last_end:
                raise ValueError("entity spans must not overlap")
            last_end = span.end

    def __len__(self) -> int:
        return len(self.tokens)


# ---------------------------------------------------------------------------
# CoNLL-U reading and writing
# ---------------------------------------------------------------------------

_TOKEN_ID_RE = re.compile(r"\d+")
_RANGE_ID_RE = re.compile(r"\d+-\d+")
_EMPTY_ID_RE = re.compile(r"\d+\.\d+")
_NER_TAG_RE = re.compile(r"(B|I)-([A-Za-z_]+)")


def _source_lines(source: str | bytes | IO) -> list[str]:
    if isinstance(source, bytes):
        return source.decode("utf-8").splitlines()
    if isinstance(source, str):
        return source.splitlines()
    data = source.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return data.splitlines()


def _misc_ner_tag(misc: str, line_number: int) -> str | None:
    if misc == "_":
        return None
    for item in misc.split("|"):
        key, sep, value = item.partition("=")
        if sep and key == "NER":
            return value
    return None


def _parse_lines(lines: Iterable[tuple[int, str]]) -> AnnotatedDocument:
    tokens: list[Token] = []
    sentences: list[tuple[int, int]] = []
    entities: list[EntitySpan] = []
    sentence_start = 0
    open_label: str | None = None
    open_start = 0

    def close_sentence():
        nonlocal sentence_start
        if len(tokens) > sentence_start:
            sentences.append((sentence_start, len(tokens)))
            sentence_start = len(tokens)

    def close_entity():
        nonlocal open_label
        if open_label is not None:
            entities.append(EntitySpan(open_label, open_start, len(tokens)))
            open_label = None

    for line_number, raw in lines:
        line = raw.rstrip("\r")
        if not line.strip():
            close_sentence()
            continue
        if line.startswith("#"):
            continue
        columns = line.split("\t")
        if len(columns) != 10:
            raise ConlluParseError(
                f"expected 10 tab-separated columns, got {len(columns)}", line_number
            )
        token_id, form, lemma, upos = columns[0], columns[1], columns[2], columns[3]
        if _RANGE_ID_RE.fullmatch(token_id) or _EMPTY_ID_RE.fullmatch(token_id):
            continue  # multiword ranges and empty nodes carry no countable token
        if not _TOKEN_ID_RE.fullmatch(token_id):
            raise ConlluParseError(f"invalid token ID {token_id!r}", line_number)
        if lemma == "_" and form != "_":
            lemma = form

        ner = _misc_ner_tag(columns[9], line_number)
        if ner is None or ner == "O":
            close_entity()
        else:
            match = _NER_TAG_RE.fullmatch(ner)
            if not match:
                raise ConlluParseError(f"malformed NER tag {ner!r}", line_number)
            prefix, label = match.group(1), match.group(2).upper()
            if label not in _ENTITY_LABEL_SET:
                raise ConlluParseError(f"unknown NER label {match.group(2)!r}", line_number)
            if prefix == "I" and open_label == label:
                pass  # continue the open span
            else:
                if prefix == "I":
                    logger.warning(
                        "line %d: I-%s without preceding B-%s; treating as B-",
                        line_number, label, label,
                    )
                close_entity()
                open_label = label
                open_start = len(tokens)

        tokens.append(Token.build(form, lemma, upos))

    close_entity()
    close_sentence()
    return AnnotatedDocument(tuple(tokens), tuple(sentences), tuple(entities))


def parse_conllu(source: str | bytes | IO) -> AnnotatedDocument:
    """Parse CoNLL-U text (string, bytes, or file object) into one document.

    Comment lines are ignored, blank lines end sentences, multiword-range
    lines (``3-4``) and empty nodes (``3.1``) are skipped. Lemmas are
    lowercased; an ``_`` lemma falls back to the lowercased form. UPOS tags
    outside the 17-tag set map to the :data:`OTHER_UPOS` bucket. Entity
    spans are assembled from ``NER=`` BIO tags in MISC; a dangling ``I-``
    tag is repaired to ``B-`` with a logged warning.
    """
    return _parse_lines(enumerate(_source_lines(source), start=1))


def iter_conllu_documents(source: str | bytes | IO) -> Iterator[AnnotatedDocument]:
    """Yield one document per ``# newdoc`` section (whole input if none present)."""
    numbered = list(enumerate(_source_lines(source), start=1))
    marks = [i for i, (_, line) in enumerate(numbered) if line.strip().startswith("# newdoc")]
    if not marks:
        if any(line.strip() and not line.startswith("#") for _, line in numbered):
            yield _parse_lines(numbered)
        return
    head = numbered[: marks[0]]
    if any(line.strip() and not line.startswith("#") for _, line in head):
        yield _parse_lines(head)
    for j, mark in enumerate(marks):
        stop = marks[j + 1] if j + 1 < len(marks) else len(numbered)
        yield _parse_lines(numbered[mark:stop])


def document_to_conllu(doc: AnnotatedDocument) -> str:
    """Serialize a document back to CoNLL-U with NER BIO tags in MISC.

    Round-trips everything :func:`parse_conllu` reads: forms, (lowercased)
    lemmas, UPOS, sentence boundaries, and entity spans.
    """
    bio = ["O"] * len(doc.tokens)
    for span in doc.entities:
        bio[span.start] = f"B-{span.label}"
        for i in range(span.start + 1, span.end):
            bio[i] = f"I-{span.label}"
    out: list[str] = []
    for start, end in doc.sentences:
        for offset, index in enumerate(range(start, end), start=1):
            token = doc.tokens[index]
            misc = "_" if bio[index] == "O" else f"NER={bio[index]}"
            out.append(
                "\t".join(
                    (str(offset), token.form, token.lemma, token.upos,
                     "_", "_", "_", "_", "_", misc)
                )
            )
        out.append("")
    return "\n".join(out) + ("\n" if out else "")


# ---------------------------------------------------------------------------
# Plain-text fallback annotator
# ---------------------------------------------------------------------------

# Closed-class word lists for the fallback tagger. These are intentionally
# small and fixed: the fallback trades accuracy for determinism. A word in
# several lists takes the first matching tag, in the order checked below.
_DETERMINERS = frozenset("""
    a an the this that these those each every either neither some any no all
    both half many much few several most more less another such what which
    whose enough
""".split())

_PRONOUNS = frozenset("""
    i me my mine myself we us our ours ourselves you your yours yourself
    yourselves he him his himself she her hers herself it its itself they
    them their theirs themselves who whom one oneself somebody someone
    something anybody anyone anything everybody everyone everything nobody
    none nothing
""".split())

_ADPOSITIONS = frozenset("""
    about above across after against along amid among around at before behind
    below beneath beside besides between beyond by despite down during except
    for from in inside into like near of off on onto out outside over past
    per since through throughout till to toward towards under underneath
    until unto up upon via with within without
""".split())

_AUXILIARIES = frozenset("""
    am is are was were be been being do does did done doing have has had
    having will would shall should may might must can could ought
""".split())

_COORDINATORS = frozenset("and but or nor yet so plus".split())

_SUBORDINATORS = frozenset("""
    although as because how if lest once than unless when whenever where
    whereas wherever whether while why
""".split())

_CLOSED_CLASS = (
    (_DETERMINERS, "DET"),
    (_PRONOUNS, "PRON"),
    (_ADPOSITIONS, "ADP"),
    (_AUXILIARIES, "AUX"),
    (_COORDINATORS, "CCONJ"),
    (_SUBORDINATORS, "SCONJ"),
)

_SENTENCE_FINAL = frozenset(".!?")


def _is_punct_char(c: str) -> bool:
    return unicodedata.category(c).startswith("P")


def _is_symbol_char(c: str) -> bool:
    return unicodedata.category(c).startswith("S")


def _classify(chunk: str) -> str:
    lowered = chunk.lower()
    for words, tag in _CLOSED_CLASS:
        if lowered in words:
            return tag
    if any(c.isdigit() for c in chunk):
        return "NUM"
    if all(_is_punct_char(c) for c in chunk):
        return "PUNCT"
    if all(_is_symbol_char(c) for c in chunk):
        return "SYM"
    return "NOUN"


def _split_sentences(text: str) -> list[str]:
    pieces: list[str] = []
    start = 0
    for i, c in enumerate(text):
        if c not in _SENTENCE_FINAL:
            continue
        j = i + 1
        while j < len(text) and text[j].isspace():
            j += 1
        if j == len(text) or (j > i + 1 and text[j].isupper()):
            pieces.append(text[start:j])
            start = j
    if start < len(text):
        pieces.append(text[start:])
    return [p for p in pieces if p.strip()]


def _tokenize(sentence: str) -> list[Token]:
    tokens: list[Token] = []
    for chunk in sentence.split():
        leading: list[str] = []
        trailing: list[str] = []
        while chunk and _is_punct_char(chunk[0]):
            leading.append(chunk[0])
            chunk = chunk[1:]
        while chunk and _is_punct_char(chunk[-1]):
            trailing.append(chunk[-1])
            chunk = chunk[:-1]
        tokens.extend(Token.build(c, upos="PUNCT") for c in leading)
        if chunk:
            tokens.append(Token.build(chunk, upos=_classify(chunk)))
        tokens.extend(Token.build(c, upos="PUNCT") for c in reversed(trailing))
    return tokens


def annotate_plaintext(text: str) -> AnnotatedDocument:
    """Deterministic rule-based annotation for raw text (no external models).

    Sentences split after ``.``, ``!``, ``?`` followed by whitespace and an
    uppercase letter (or end of input). Tokens split on whitespace with
    leading/trailing punctuation peeled off as PUNCT tokens. POS tags come
    from small closed-class word lists, a digit test (NUM), and character
    classes (PUNCT/SYM); everything else is NOUN. Lemmas are lowercased
    forms; no entities are produced.
    """
    tokens: list[Token] = []
    sentences: list[tuple[int, int]] = []
    for sentence in _split_sentences(text):
        sentence_tokens = _tokenize(sentence)
        if sentence_tokens:
            sentences.append((len(tokens), len(tokens) + len(sentence_tokens)))
            tokens.extend(sentence_tokens)
    return AnnotatedDocument(tuple(tokens), tuple(sentences), ())
