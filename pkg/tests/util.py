"""Shared test helpers: random document/corpus builders."""

from __future__ import annotations

import random

from lingkit.annotation import (
    ENTITY_LABELS,
    UPOS_TAGS,
    AnnotatedDocument,
    EntitySpan,
    Token,
)

WORDS = (
    "the a dog cat runs tree green ideas sleep furiously banana computer "
    "seven obvious paris river jumps quickly under over stone light dark "
    "reading ability question complex simple water fire earth wind story"
).split()


def random_document(
    rng: random.Random,
    max_sentences: int = 6,
    max_tokens_per_sentence: int = 12,
    tags: tuple[str, ...] = UPOS_TAGS,
    entity_rate: float = 0.15,
    allow_empty: bool = True,
) -> AnnotatedDocument:
    """A structurally valid random document over a small vocabulary."""
    n_sentences = rng.randint(0 if allow_empty else 1, max_sentences)
    tokens: list[Token] = []
    sentences: list[tuple[int, int]] = []
    for _ in range(n_sentences):
        start = len(tokens)
        for _ in range(rng.randint(1, max_tokens_per_sentence)):
            form = rng.choice(WORDS)
            if rng.random() < 0.2:
                form = form.capitalize()
            tokens.append(Token.build(form, upos=rng.choice(tags)))
        sentences.append((start, len(tokens)))

    entities: list[EntitySpan] = []
    index = 0
    while index < len(tokens):
        if rng.random() < entity_rate:
            length = rng.randint(1, min(3, len(tokens) - index))
            entities.append(EntitySpan(rng.choice(ENTITY_LABELS), index, index + length))
            index += length
        else:
            index += 1
    return AnnotatedDocument(tuple(tokens), tuple(sentences), tuple(entities))


def random_corpus(rng: random.Random, size: int, **kwargs) -> list[AnnotatedDocument]:
    kwargs.setdefault("allow_empty", False)
    return [random_document(rng, **kwargs) for _ in range(size)]


def word_document(n_words: int, words_per_sentence: int = 20) -> AnnotatedDocument:
    """A deterministic document with exactly n_words word tokens plus punctuation."""
    rng = random.Random(n_words)
    tokens: list[Token] = []
    sentences: list[tuple[int, int]] = []
    remaining = n_words
    while remaining > 0:
        take = min(words_per_sentence, remaining)
        start = len(tokens)
        for _ in range(take):
            tokens.append(Token.build(rng.choice(WORDS), upos=rng.choice(("NOUN", "VERB", "ADJ", "DET"))))
        tokens.append(Token.build(".", upos="PUNCT"))
        sentences.append((start, len(tokens)))
        remaining -= take
    return AnnotatedDocument(tuple(tokens), tuple(sentences), ())
