"""Foundation feature computation: the 65 cacheable per-document primitives.

"Word" tokens are all tokens except PUNCT and SPACE (symbols and numerals
count as words; punctuation does not). Uniqueness is measured on the
lowercased lemma. Counts are returned as exact ints; lexicon sums as
floats.
"""

from __future__ import annotations

from collections import Counter

from .annotation import ENTITY_LABELS, UPOS_TAGS, AnnotatedDocument, Token
from .lexicon import LexiconSet

_NON_WORD_UPOS = frozenset(("PUNCT", "SPACE"))


def is_word(token: Token) -> bool:
    return token.upos not in _NON_WORD_UPOS


def compute_wordsent(doc: AnnotatedDocument) -> dict[str, int]:
    """Character, syllable, word, and sentence count statistics (9 values)."""
    t_word = t_stopword = t_punct = 0
    t_syll = t_syll2 = t_syll3 = t_char = 0
    lemmas: set[str] = set()
    for token in doc.tokens:
        if token.upos == "PUNCT":
            t_punct += 1
        if not is_word(token):
            continue
        t_word += 1
        if token.is_stopword:
            t_stopword += 1
        syllables = token.syllable_count
        t_syll += syllables
        if syllables >= 2:
            t_syll2 += 1
        if syllables >= 3:
            t_syll3 += 1
        t_char += token.char_count
        lemmas.add(token.lemma)
    return {
        "t_word": t_word,
        "t_stopword": t_stopword,
        "t_punct": t_punct,
        "t_syll": t_syll,
        "t_syll2": t_syll2,
        "t_syll3": t_syll3,
        "t_uword": len(lemmas),
        "t_sent": len(doc.sentences),
        "t_char": t_char,
    }


def count_unique_surface_forms(doc: AnnotatedDocument) -> int:
    """Distinct lowercased surface forms among word tokens (the no-lemma vocabulary)."""
    return len({token.form.lower() for token in doc.tokens if is_word(token)})


def compute_worddiff(doc: AnnotatedDocument, lexicons: LexiconSet) -> dict[str, float]:
    """Summed word-difficulty scores (3 values); unknown or unloaded entries add 0."""
    totals = {"t_kup": 0.0, "t_bry": 0.0, "t_subtlex_us_zipf": 0.0}
    pairs = (
        ("t_kup", lexicons.kuperman),
        ("t_bry", lexicons.brysbaert),
        ("t_subtlex_us_zipf", lexicons.zipf),
    )
    for token in doc.tokens:
        if not is_word(token):
            continue
        for key, lexicon in pairs:
            if lexicon is not None:
                score = lexicon.entries.get(token.lemma)
                if score is not None:
                    totals[key] += score
    return totals


def compute_partofspeech(doc: AnnotatedDocument) -> dict[str, int]:
    """Per-UPOS token counts and unique-lemma counts (34 values).

    Tokens in the fallback bucket for unknown tags contribute to no
    category here (they still count as words in the wordsent family).
    """
    counts: Counter[str] = Counter()
    unique: dict[str, set[str]] = {tag: set() for tag in UPOS_TAGS}
    for token in doc.tokens:
        if token.upos in unique:
            counts[token.upos] += 1
            unique[token.upos].add(token.lemma)
    values: dict[str, int] = {}
    for tag in UPOS_TAGS:
        values[f"n_{tag.lower()}"] = counts[tag]
    for tag in UPOS_TAGS:
        values[f"n_u{tag.lower()}"] = len(unique[tag])
    return values


def compute_entity(doc: AnnotatedDocument) -> dict[str, int]:
    """Entity mention counts per label plus the overall total (19 values).

    Mentions are counted at span level: one multi-token entity counts once.
    """
    counts: Counter[str] = Counter(span.label for span in doc.entities)
    values = {"t_n_ent": len(doc.entities)}
    for label in ENTITY_LABELS:
        values[f"t_n_ent_{label.lower()}"] = counts[label]
    return values
