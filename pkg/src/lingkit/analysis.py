"""Feature-label Pearson correlation studies over labeled corpora."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .annotation import AnnotatedDocument, annotate_plaintext
from .catalog import FeatureRegistry, SelectionFilter
from .derivation import DEFAULT_READING_SPEEDS, ReadingSpeeds
from .extractor import ExtractionSession
from .lexicon import LexiconSet


def pearson(x: Sequence[float], y: Sequence[float]) -> float | None:
    """Product-moment correlation, or None when either vector has zero variance.

    A constant column carries no evidence about linear association, so it is
    reported as undefined rather than as r=0.
    """
    n = len(x)
    if len(y) != n:
        raise ValueError(f"length mismatch: {n} vs {len(y)}")
    if n < 2:
        raise ValueError("correlation needs at least 2 observations")
    mean_x = math.fsum(x) / n
    mean_y = math.fsum(y) / n
    cov = math.fsum((a - mean_x) * (b - mean_y) for a, b in zip(x, y))
    var_x = math.fsum((a - mean_x) ** 2 for a in x)
    var_y = math.fsum((b - mean_y) ** 2 for b in y)
    if var_x == 0 or var_y == 0:
        return None
    r = cov / math.sqrt(var_x * var_y)
    return max(-1.0, min(1.0, r))


@dataclass(frozen=True)
class LabeledCorpus:
    """Annotated documents paired with finite numeric labels (≥ 2 rows)."""

    documents: tuple[AnnotatedDocument, ...]
    labels: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "documents", tuple(self.documents))
        object.__setattr__(self, "labels", tuple(float(v) for v in self.labels))
        if len(self.documents) != len(self.labels):
            raise ValueError("documents and labels must have equal length")
        if len(self.documents) < 2:
            raise ValueError("a labeled corpus needs at least 2 rows")
        if not all(math.isfinite(v) for v in self.labels):
            raise ValueError("labels must be finite")

    @classmethod
    def from_texts(cls, texts: Iterable[str], labels: Iterable[float]) -> "LabeledCorpus":
        return cls(tuple(annotate_plaintext(t) for t in texts), tuple(labels))


@dataclass(frozen=True)
class CorrelationReport:
    """Per-feature Pearson r against the labels, ranked best-first.

    ``ranking`` holds only features with a defined r, in descending order;
    zero-variance features are listed in ``undefined``.
    """

    correlations: dict[str, float | None]
    ranking: tuple[tuple[str, float], ...]
    undefined: tuple[str, ...]

    def top(self, n: int) -> list[tuple[str, float]]:
        return list(self.ranking[:n])

    def bottom(self, n: int) -> list[tuple[str, float]]:
        """The n most negatively correlated features, still in descending order."""
        return list(self.ranking[len(self.ranking) - n:]) if n > 0 else []


def correlate(
    corpus: LabeledCorpus,
    selection: SelectionFilter | None = None,
    *,
    registry: FeatureRegistry | None = None,
    lexicons: LexiconSet | None = None,
    reading_speeds: ReadingSpeeds = DEFAULT_READING_SPEEDS,
) -> CorrelationReport:
    """Extract the selected features and correlate each against the labels."""
    session = ExtractionSession(registry, lexicons, reading_speeds)
    matrix = session.extract_corpus(corpus.documents, selection)
    labels = list(corpus.labels)
    correlations: dict[str, float | None] = {}
    for index, key in enumerate(matrix.keys):
        column = [row[index] for row in matrix.rows]
        correlations[key] = pearson(column, labels)
    defined = [(k, r) for k, r in correlations.items() if r is not None]
    defined.sort(key=lambda item: -item[1])
    return CorrelationReport(
        correlations=correlations,
        ranking=tuple(defined),
        undefined=tuple(k for k, r in correlations.items() if r is None),
    )
