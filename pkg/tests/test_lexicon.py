import pytest

from lingkit.errors import LexiconError
from lingkit.lexicon import (
    BRYSBAERT_AOA,
    KUPERMAN_AOA,
    SUBTLEX_US_ZIPF,
    Lexicon,
    LexiconSet,
    load_lexicon,
)


def write(tmp_path, content, name="lex.tsv"):
    path = tmp_path / name
    path.write_text(content, encoding="utf-8")
    return path


class TestLoadLexicon:
    def test_basic_load(self, tmp_path):
        lex = load_lexicon(write(tmp_path, "dog\t4.25\ncat\t3.50\n"), KUPERMAN_AOA)
        assert len(lex) == 2
        assert lex.lookup("dog") == 4.25

    def test_duplicates_last_wins(self, tmp_path):
        lex = load_lexicon(write(tmp_path, "Dog\t4.25\ndog\t5.00\n"), KUPERMAN_AOA)
        assert len(lex) == 1
        assert lex.lookup("dog") == 5.0

    def test_nan_score_rejected_with_line(self, tmp_path):
        with pytest.raises(LexiconError, match="line 2"):
            load_lexicon(write(tmp_path, "cat\t3.5\ndog\tNaN\n"), KUPERMAN_AOA)

    def test_unparseable_score_rejected(self, tmp_path):
        with pytest.raises(LexiconError, match="line 1"):
            load_lexicon(write(tmp_path, "dog\tfour\n"), KUPERMAN_AOA)

    def test_nonpositive_aoa_rejected(self, tmp_path):
        with pytest.raises(LexiconError):
            load_lexicon(write(tmp_path, "dog\t-1.0\n"), BRYSBAERT_AOA)

    def test_zipf_range_enforced(self, tmp_path):
        with pytest.raises(LexiconError):
            load_lexicon(write(tmp_path, "dog\t9.1\n"), SUBTLEX_US_ZIPF)
        lex = load_lexicon(write(tmp_path, "dog\t5.2\n"), SUBTLEX_US_ZIPF)
        assert lex.lookup("dog") == 5.2

    def test_comments_and_blanks_skipped(self, tmp_path):
        lex = load_lexicon(write(tmp_path, "# word\tscore\n\ndog\t4.0\n"), KUPERMAN_AOA)
        assert len(lex) == 1

    def test_empty_file_is_valid(self, tmp_path):
        lex = load_lexicon(write(tmp_path, ""), KUPERMAN_AOA)
        assert len(lex) == 0

    def test_wrong_column_count_rejected(self, tmp_path):
        with pytest.raises(LexiconError, match="line 1"):
            load_lexicon(write(tmp_path, "dog 4.0\n"), KUPERMAN_AOA)

    def test_unknown_kind_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            load_lexicon(write(tmp_path, "dog\t4.0\n"), "klingon")


class TestLookup:
    def test_case_folded(self):
        lex = Lexicon(KUPERMAN_AOA, {"dog": 4.25})
        assert lex.lookup("DOG") == 4.25

    def test_missing_is_none(self):
        lex = Lexicon(KUPERMAN_AOA, {"dog": 4.25})
        assert lex.lookup("zyzzyva") is None


class TestLexiconSet:
    def test_missing_kinds(self):
        assert LexiconSet().missing_kinds() == (
            KUPERMAN_AOA, BRYSBAERT_AOA, SUBTLEX_US_ZIPF,
        )

    def test_from_explicit_paths(self, tmp_path):
        kup = write(tmp_path, "dog\t4.0\n", "kup.tsv")
        lexicons = LexiconSet.from_paths(kuperman=kup)
        assert lexicons.kuperman is not None
        assert lexicons.brysbaert is None

    def test_default_dir_probed(self, tmp_path, monkeypatch):
        write(tmp_path, "dog\t4.0\n", "kuperman_aoa.tsv")
        write(tmp_path, "dog\t5.5\n", "subtlex_us_zipf.tsv")
        monkeypatch.setenv("LINGKIT_LEXICON_DIR", str(tmp_path))
        lexicons = LexiconSet.from_paths()
        assert lexicons.kuperman.lookup("dog") == 4.0
        assert lexicons.zipf.lookup("dog") == 5.5
        assert lexicons.brysbaert is None

    def test_explicit_path_beats_default_dir(self, tmp_path, monkeypatch):
        write(tmp_path, "dog\t4.0\n", "kuperman_aoa.tsv")
        override = write(tmp_path, "dog\t7.0\n", "other.tsv")
        monkeypatch.setenv("LINGKIT_LEXICON_DIR", str(tmp_path))
        lexicons = LexiconSet.from_paths(kuperman=override)
        assert lexicons.kuperman.lookup("dog") == 7.0

    def test_explicit_missing_path_raises(self, tmp_path):
        with pytest.raises(OSError):
            LexiconSet.from_paths(kuperman=tmp_path / "nope.tsv")
