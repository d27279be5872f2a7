"""Scikit-learn transformer wrapping the extraction pipeline.

Lets the feature set drop into sklearn pipelines next to vectorizers and
models::

    pipe = make_pipeline(LinguisticFeatures(families=["readformula"]), Ridge())
    pipe.fit(texts, grades)
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .annotation import AnnotatedDocument, annotate_plaintext
from .catalog import GENERAL, SelectionFilter, default_registry
from .derivation import ReadingSpeeds
from .extractor import ExtractionSession
from .lexicon import LexiconSet


def _as_document(item) -> AnnotatedDocument:
    if isinstance(item, AnnotatedDocument):
        return item
    if isinstance(item, str):
        return annotate_plaintext(item)
    raise TypeError(
        f"documents must be str or AnnotatedDocument, got {type(item).__name__}"
    )


class LinguisticFeatures(TransformerMixin, BaseEstimator):
    """Turn raw texts or annotated documents into a numeric feature matrix.

    Parameters
    ----------
    features : iterable of str, optional
        Feature keys to extract (e.g. ``["fkgl", "t_word"]``). None keeps
        every feature that survives the other filters.
    families : iterable of str, optional
        Restrict to these linguistic families (e.g. ``["typetokenratio"]``).
    branches : iterable of str, optional
        Restrict to these linguistic branches (e.g. ``["syntax"]``).
    language : {"general", "all", None}, default=None
        "general" keeps only language-agnostic features; None/"all" keeps all.
    lexicon_kup, lexicon_bry, lexicon_zipf : path, optional
        Word-difficulty lexicon TSV files; without them the corresponding
        features are 0.
    reading_speeds : tuple of 3 floats, default=(250, 200, 150)
        Fast/average/slow words-per-minute for the reading-time features.

    Attributes
    ----------
    feature_names_ : tuple of str
        Resolved feature keys, in output column order.
    """

    def __init__(
        self,
        features=None,
        families=None,
        branches=None,
        language=None,
        lexicon_kup=None,
        lexicon_bry=None,
        lexicon_zipf=None,
        reading_speeds=(250.0, 200.0, 150.0),
    ):
        self.features = features
        self.families = families
        self.branches = branches
        self.language = language
        self.lexicon_kup = lexicon_kup
        self.lexicon_bry = lexicon_bry
        self.lexicon_zipf = lexicon_zipf
        self.reading_speeds = reading_speeds

    def _selection(self) -> SelectionFilter:
        if self.language in (None, "all"):
            applicability = None
        elif self.language == "general":
            applicability = GENERAL
        else:
            raise ValueError(f"language must be 'general', 'all', or None, got {self.language!r}")
        return SelectionFilter(
            keys=tuple(self.features) if self.features is not None else None,
            families=tuple(self.families) if self.families is not None else None,
            branches=tuple(self.branches) if self.branches is not None else None,
            applicability=applicability,
        )

    def fit(self, X, y=None):
        """Resolve the feature selection and load lexicons. X is unused."""
        descriptors = default_registry().search(self._selection())
        self.feature_names_ = tuple(d.key for d in descriptors)
        self.lexicons_ = LexiconSet.from_paths(
            kuperman=self.lexicon_kup,
            brysbaert=self.lexicon_bry,
            zipf=self.lexicon_zipf,
        )
        return self

    def transform(self, X) -> np.ndarray:
        """Extract features for each document in X (strs or AnnotatedDocuments)."""
        check_is_fitted(self, "feature_names_")
        session = ExtractionSession(
            lexicons=self.lexicons_,
            reading_speeds=ReadingSpeeds(*self.reading_speeds),
        )
        docs = [_as_document(item) for item in X]
        matrix = session.extract_corpus(docs, SelectionFilter(keys=self.feature_names_))
        out = np.asarray(matrix.rows, dtype=float)
        return out.reshape(len(docs), len(self.feature_names_))

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        check_is_fitted(self, "feature_names_")
        return np.asarray(self.feature_names_, dtype=object)
