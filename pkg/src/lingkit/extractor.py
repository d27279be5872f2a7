"""Extraction orchestration: resolve a selection, compute foundations once, derive.

Caching granularity is the foundation family: one pass over the tokens
yields every value in a family, and no family runs more than once per
document however many selected derivations it feeds. The cache lives only
for the duration of one document's extraction, so corpus runs stay
memory-bounded.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import derivation, foundation
from .annotation import AnnotatedDocument
from .catalog import (
    AVERAGE_RATIOS,
    FOUNDATION,
    FOUNDATION_FAMILIES,
    VARIATION_INPUTS,
    FeatureDescriptor,
    FeatureRegistry,
    SelectionFilter,
    default_registry,
)
from .derivation import DEFAULT_READING_SPEEDS, ReadingSpeeds, safe_ratio
from .errors import LingkitError
from .lexicon import LexiconSet

logger = logging.getLogger(__name__)


@dataclass
class FeatureMatrix:
    """A corpus feature table: one row per document, columns in selection order."""

    keys: tuple[str, ...]
    rows: list[list[float]]

    def column(self, key: str) -> list[float]:
        index = self.keys.index(key)
        return [row[index] for row in self.rows]


class ExtractionSession:
    """Shared extraction state: registry, lexicons, and instrumentation counters.

    ``family_computations`` counts how many times each foundation family was
    computed across the session's lifetime; the caching contract is that it
    grows by at most one per family per extracted document.
    """

    def __init__(
        self,
        registry: FeatureRegistry | None = None,
        lexicons: LexiconSet | None = None,
        reading_speeds: ReadingSpeeds = DEFAULT_READING_SPEEDS,
    ):
        self.registry = registry if registry is not None else default_registry()
        self.lexicons = lexicons if lexicons is not None else LexiconSet()
        self.reading_speeds = ReadingSpeeds(*reading_speeds)
        self.family_computations: Counter[str] = Counter()
        self._warned_missing_lexicons = False

    def resolve(self, selection: SelectionFilter | None = None) -> list[FeatureDescriptor]:
        return self.registry.search(selection)

    def extract(
        self, doc: AnnotatedDocument, selection: SelectionFilter | None = None
    ) -> dict[str, float]:
        """Feature values for one document, keyed and ordered by the resolved selection."""
        return self._extract_resolved(doc, self.resolve(selection))

    def extract_corpus(
        self,
        docs: Iterable[AnnotatedDocument],
        selection: SelectionFilter | None = None,
    ) -> FeatureMatrix:
        """Row-per-document feature matrix with a stable column order."""
        descriptors = self.resolve(selection)
        keys = tuple(d.key for d in descriptors)
        rows = []
        for index, doc in enumerate(docs):
            try:
                values = self._extract_resolved(doc, descriptors)
            except LingkitError:
                raise
            except Exception as exc:
                raise LingkitError(f"document {index}: {exc}") from exc
            rows.append(list(values.values()))
        return FeatureMatrix(keys=keys, rows=rows)

    # -- internals ----------------------------------------------------------

    def _needed_families(self, descriptors: Sequence[FeatureDescriptor]) -> set[str]:
        needed: set[str] = set()
        for d in descriptors:
            if d.formulation == FOUNDATION:
                needed.add(d.family)
            else:
                for dep in d.depends_on:
                    needed.add(self.registry.get(dep).family)
        return needed

    def _compute_foundations(
        self, doc: AnnotatedDocument, families: set[str]
    ) -> tuple[dict[str, float], int]:
        values: dict[str, float] = {}
        surface_uniques = 0
        if "wordsent" in families:
            values.update(foundation.compute_wordsent(doc))
            surface_uniques = foundation.count_unique_surface_forms(doc)
            self.family_computations["wordsent"] += 1
        if "worddiff" in families:
            if self.lexicons.missing_kinds() and not self._warned_missing_lexicons:
                logger.warning(
                    "lexicons not loaded (%s); their word-difficulty features are 0",
                    ", ".join(self.lexicons.missing_kinds()),
                )
                self._warned_missing_lexicons = True
            values.update(foundation.compute_worddiff(doc, self.lexicons))
            self.family_computations["worddiff"] += 1
        if "partofspeech" in families:
            values.update(foundation.compute_partofspeech(doc))
            self.family_computations["partofspeech"] += 1
        if "entity" in families:
            values.update(foundation.compute_entity(doc))
            self.family_computations["entity"] += 1
        return values, surface_uniques

    def _extract_resolved(
        self, doc: AnnotatedDocument, descriptors: Sequence[FeatureDescriptor]
    ) -> dict[str, float]:
        foundations, surface_uniques = self._compute_foundations(
            doc, self._needed_families(descriptors)
        )
        bundles: dict[str, dict[str, float]] = {}

        def bundle(family: str) -> dict[str, float]:
            # ttr/formula/readtime values come in small batches computed once
            if family not in bundles:
                if family == "typetokenratio":
                    bundles[family] = derivation.compute_ttr(
                        foundations["t_word"], foundations["t_uword"], surface_uniques
                    )
                elif family == "readformula":
                    bundles[family] = derivation.compute_readformulas(foundations)
                else:
                    bundles[family] = derivation.compute_readtime(
                        foundations, self.reading_speeds
                    )
            return bundles[family]

        values: dict[str, float] = {}
        for d in descriptors:
            if d.formulation == FOUNDATION:
                values[d.key] = foundations[d.key]
            elif d.key in AVERAGE_RATIOS:
                num, den = AVERAGE_RATIOS[d.key]
                values[d.key] = safe_ratio(foundations[num], foundations[den])
            elif d.key in VARIATION_INPUTS:
                kind, unique, total = VARIATION_INPUTS[d.key]
                values[d.key] = derivation.variation_value(
                    kind, foundations[unique], foundations[total]
                )
            else:
                values[d.key] = bundle(d.family)[d.key]
        return values


def extract(
    doc: AnnotatedDocument,
    selection: SelectionFilter | None = None,
    *,
    registry: FeatureRegistry | None = None,
    lexicons: LexiconSet | None = None,
    reading_speeds: ReadingSpeeds = DEFAULT_READING_SPEEDS,
) -> dict[str, float]:
    """One-shot feature extraction for a single document."""
    session = ExtractionSession(registry, lexicons, reading_speeds)
    return session.extract(doc, selection)


def extract_corpus(
    docs: Iterable[AnnotatedDocument],
    selection: SelectionFilter | None = None,
    *,
    registry: FeatureRegistry | None = None,
    lexicons: LexiconSet | None = None,
    reading_speeds: ReadingSpeeds = DEFAULT_READING_SPEEDS,
) -> FeatureMatrix:
    """One-shot feature extraction for a document sequence."""
    session = ExtractionSession(registry, lexicons, reading_speeds)
    return session.extract_corpus(docs, selection)
