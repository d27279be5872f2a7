"""lingkit: handcrafted linguistic feature extraction and correlation studies.

220 features (65 foundations, 155 derivations) across 12 families and 4
linguistic branches, computed from CoNLL-U annotations or raw text, with a
searchable feature registry and a Pearson correlation study runner.
"""

from .analysis import CorrelationReport, LabeledCorpus, correlate, pearson
from .annotation import (
    ENTITY_LABELS,
    UPOS_TAGS,
    AnnotatedDocument,
    EntitySpan,
    Token,
    annotate_plaintext,
    count_syllables,
    document_to_conllu,
    iter_conllu_documents,
    parse_conllu,
)
from .catalog import (
    FeatureDescriptor,
    FeatureRegistry,
    SelectionFilter,
    build_registry,
    default_registry,
    derive_applicability,
)
from .derivation import DEFAULT_READING_SPEEDS, ReadingSpeeds, safe_ratio
from .errors import ConlluParseError, LexiconError, LingkitError, UnknownFeatureError
from .extractor import ExtractionSession, FeatureMatrix, extract, extract_corpus
from .lexicon import Lexicon, LexiconSet, load_lexicon
from .transform import LinguisticFeatures

__version__ = "0.1.0"

__all__ = [
    "AnnotatedDocument",
    "ConlluParseError",
    "CorrelationReport",
    "DEFAULT_READING_SPEEDS",
    "ENTITY_LABELS",
    "EntitySpan",
    "ExtractionSession",
    "FeatureDescriptor",
    "FeatureMatrix",
    "FeatureRegistry",
    "LabeledCorpus",
    "Lexicon",
    "LexiconSet",
    "LexiconError",
    "LingkitError",
    "LinguisticFeatures",
    "ReadingSpeeds",
    "SelectionFilter",
    "Token",
    "UPOS_TAGS",
    "UnknownFeatureError",
    "annotate_plaintext",
    "build_registry",
    "correlate",
    "count_syllables",
    "default_registry",
    "derive_applicability",
    "document_to_conllu",
    "extract",
    "extract_corpus",
    "iter_conllu_documents",
    "load_lexicon",
    "parse_conllu",
    "pearson",
    "safe_ratio",
]
