import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solvebench.core import (
    GOLD_ENUMERATION_CAP,
    Dataset,
    GenerationError,
    GoldSolutionSet,
    Instance,
    IntegrityError,
    ParseError,
    SizeDescriptor,
    SizeError,
    all_problem_ids,
    build_dataset,
    canonical_text,
    get_problem,
    load_dataset,
    save_dataset,
    strip_trailing_blank_lines,
    text_digest,
)


class TestCanonicalText:
    def test_collapses_runs_of_spaces(self):
        assert canonical_text("1   2\t3\n") == "1 2 3\n"

    def test_strips_line_edges_and_crlf(self):
        assert canonical_text("  1 2 \r\n 3 4\r\n") == "1 2\n3 4\n"

    def test_exactly_one_trailing_newline(self):
        assert canonical_text("a\n\n\n") == "a\n"
        assert canonical_text("a") == "a\n"

    def test_empty(self):
        assert canonical_text("") == ""
        assert canonical_text("   \n  \n") == ""

    @given(st.text(alphabet=" \t\r\n0123456789ab", max_size=80))
    def test_idempotent(self, text):
        once = canonical_text(text)
        assert canonical_text(once) == once

    def test_strip_trailing_blank_lines_keeps_interior(self):
        assert strip_trailing_blank_lines("a\n\nb\n\n \n") == "a\n\nb\n"


class TestSizeDescriptor:
    def test_round_trip(self):
        size = SizeDescriptor(grid_n=9)
        assert SizeDescriptor.decode(size.encode()) == size

    def test_encode_sorts_dimensions(self):
        assert SizeDescriptor(rows=3, cols=4).encode() == "cols=4,rows=3"

    def test_rejects_zero_and_negative(self):
        with pytest.raises(SizeError):
            SizeDescriptor(grid_n=0)
        with pytest.raises(SizeError):
            SizeDescriptor(grid_n=-2)

    def test_rejects_non_int_and_bool(self):
        with pytest.raises(SizeError):
            SizeDescriptor(grid_n="4")
        with pytest.raises(SizeError):
            SizeDescriptor(grid_n=True)

    def test_rejects_empty(self):
        with pytest.raises(SizeError):
            SizeDescriptor()

    def test_decode_rejects_garbage(self):
        for bad in ("", "grid_n", "grid_n=x", "=4", "grid_n=4,grid_n=5"):
            with pytest.raises(SizeError):
                SizeDescriptor.decode(bad)

    @given(st.dictionaries(
        st.from_regex(r"[a-z][a-z_]{0,8}", fullmatch=True),
        st.integers(min_value=1, max_value=10 ** 6),
        min_size=1, max_size=4))
    def test_round_trip_property(self, dims):
        size = SizeDescriptor(**dims)
        assert SizeDescriptor.decode(size.encode()) == size

    def test_usable_as_dict_key(self):
        d = {SizeDescriptor(grid_n=4): "a"}
        assert d[SizeDescriptor(grid_n=4)] == "a"


class TestInstance:
    def test_requires_canonical_text(self):
        with pytest.raises(ParseError):
            Instance("sudoku", "1  2\n", SizeDescriptor(grid_n=2))

    def test_accepts_canonical_text(self):
        inst = Instance("sudoku", "1 2\n3 4\n", SizeDescriptor(grid_n=2), seed=7)
        assert inst.seed == 7


class TestGoldSolutionSet:
    def test_sorts_and_dedupes(self):
        gold = GoldSolutionSet(("b\n", "a\n", "b\n"), complete=True)
        assert gold.outputs == ("a\n", "b\n")
        assert gold.first() == "a\n"
        assert "a\n" in gold
        assert "c\n" not in gold
        assert len(gold) == 2


class TestBuildDataset:
    def test_counts_and_sizes(self):
        ds = build_dataset("latin-square", 3, 2, SizeDescriptor(grid_n=4),
                           SizeDescriptor(grid_n=5), seed=1)
        assert len(ds.train) == 3 and len(ds.gold) == 3 and len(ds.test) == 2
        assert all(i.size == SizeDescriptor(grid_n=4) for i in ds.train)
        assert all(i.size == SizeDescriptor(grid_n=5) for i in ds.test)

    def test_texts_are_pairwise_distinct(self):
        ds = build_dataset("subset-sum", 6, 6, SizeDescriptor(array_len=5),
                           SizeDescriptor(array_len=5), seed=3)
        texts = [i.text for i in ds.train] + [i.text for i in ds.test]
        assert len(set(texts)) == len(texts)

    def test_deterministic_for_seed(self):
        a = build_dataset("sujiko", 2, 2, SizeDescriptor(grid_n=3),
                          SizeDescriptor(grid_n=3), seed=9)
        b = build_dataset("sujiko", 2, 2, SizeDescriptor(grid_n=3),
                          SizeDescriptor(grid_n=3), seed=9)
        assert [i.text for i in a.train] == [i.text for i in b.train]
        assert [i.text for i in a.test] == [i.text for i in b.test]
        assert [g.outputs for g in a.gold] == [g.outputs for g in b.gold]

    def test_different_seeds_differ(self):
        a = build_dataset("latin-square", 4, 0, SizeDescriptor(grid_n=5),
                          SizeDescriptor(grid_n=5), seed=1)
        b = build_dataset("latin-square", 4, 0, SizeDescriptor(grid_n=5),
                          SizeDescriptor(grid_n=5), seed=2)
        assert [i.text for i in a.train] != [i.text for i in b.train]

    def test_gold_outputs_verify(self):
        adapter = get_problem("magic-square")
        ds = build_dataset("magic-square", 2, 0, SizeDescriptor(grid_n=3),
                           SizeDescriptor(grid_n=3), seed=5)
        for inst, gold in zip(ds.train, ds.gold):
            for output in gold.outputs:
                assert adapter.verify(inst, output).kind.name == "CORRECT"
            assert len(gold.outputs) <= GOLD_ENUMERATION_CAP

    def test_generation_error_bubbles(self):
        with pytest.raises(GenerationError):
            build_dataset("n-queens", 1, 0, SizeDescriptor(grid_n=2),
                          SizeDescriptor(grid_n=2), seed=0)


class TestSaveLoad:
    def test_round_trip(self, tmp_path):
        ds = build_dataset("futoshiki", 3, 2, SizeDescriptor(grid_n=4),
                           SizeDescriptor(grid_n=4), seed=11)
        pdir = save_dataset(ds, tmp_path)
        loaded = load_dataset(pdir)
        assert loaded.problem_id == ds.problem_id
        assert loaded.seed == ds.seed
        assert [i.text for i in loaded.train] == [i.text for i in ds.train]
        assert [i.text for i in loaded.test] == [i.text for i in ds.test]
        assert [i.size for i in loaded.train] == [i.size for i in ds.train]
        assert [g.outputs for g in loaded.gold] == [g.outputs for g in ds.gold]
        assert [g.complete for g in loaded.gold] == [g.complete for g in ds.gold]
        assert loaded.train_size == ds.train_size
        assert loaded.test_size == ds.test_size

    def test_load_rejects_corrupted_gold(self, tmp_path):
        ds = build_dataset("latin-square", 1, 0, SizeDescriptor(grid_n=4),
                           SizeDescriptor(grid_n=4), seed=2)
        pdir = save_dataset(ds, tmp_path)
        sol = pdir / "train" / "000.sol.0"
        grid = [row.split() for row in sol.read_text().splitlines()]
        grid[0][0], grid[0][1] = grid[0][1], grid[0][0]
        sol.write_text("\n".join(" ".join(r) for r in grid) + "\n")
        with pytest.raises(IntegrityError):
            load_dataset(pdir)

    def test_load_missing_manifest(self, tmp_path):
        with pytest.raises(ParseError):
            load_dataset(tmp_path)


class TestRegistry:
    def test_twelve_problems(self):
        ids = all_problem_ids()
        assert len(ids) == 12
        assert ids == sorted(ids)

    def test_unknown_problem(self):
        from solvebench.core import SolveBenchError
        with pytest.raises(SolveBenchError):
            get_problem("nonesuch")

    def test_adapters_expose_prompt_fields(self):
        for pid in all_problem_ids():
            adapter = get_problem(pid)
            assert adapter.problem_id == pid
            for text in (adapter.rules, adapter.input_format, adapter.output_format):
                assert isinstance(text, str) and text.strip()


def test_text_digest_stable():
    assert text_digest("abc\n") == text_digest("abc\n")
    assert text_digest("abc\n") != text_digest("abd\n")
    assert len(text_digest("x")) == 16
