import pytest

from errors import CycleDetected, InputError, InvalidGrounding, ParseError
from formats import (
    dump_fmap_table,
    dump_grounded,
    dump_hypermatrix,
    dump_poset,
    parse_fmap_table,
    parse_grounded,
    parse_hypermatrix,
    parse_poset,
    read_grounded,
    read_poset,
)
from hyperdet import Permutation, TableFMap
from scalar import parse_scalar, variable
from verification.instances import random_hypermatrix
from verification.worked_examples import cumulative_symbolic

DIAMOND = """\
# four-element diamond
poset 4
label 0 bottom
label 3 top
cover bottom 1
cover bottom 2
cover 1 top
cover 2 top
"""


class TestPosetFormat:
    def test_parse(self):
        p = parse_poset(DIAMOND)
        assert p.n == 4
        assert p.labels == ("bottom", "1", "2", "top")
        assert p.le(0, 3)
        assert not p.le(1, 2)

    def test_dump_is_replayable(self, seven_elements):
        p = parse_poset(dump_poset(seven_elements.poset))
        assert (p.leq == seven_elements.poset.leq).all()
        assert p.labels == seven_elements.labels

    def test_labels_win_over_indices(self):
        """Label "0" names element 1 here, so the cover is 1 < 0."""
        p = parse_poset("poset 2\nlabel 0 1\nlabel 1 0\ncover 0 1\n")
        assert p.le(1, 0)
        assert not p.le(0, 1)

    @pytest.mark.parametrize(
        ("text", "line"),
        [
            ("poset 2\ncover 0 5\n", 2),
            ("poset 2\n\nfrobnicate 1\n", 3),
            ("cover 0 1\n", 1),
            ("poset x\n", 1),
            ("poset 2\nlabel 4 a\n", 2),
            ("poset 2\ncover 0\n", 2),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_poset(text, "bad.poset")
        assert info.value.line == line
        assert str(info.value).startswith(f"bad.poset:{line}:")

    def test_structural_errors(self):
        with pytest.raises(ParseError):
            parse_poset("# nothing\n")
        with pytest.raises(ParseError):
            parse_poset("poset 2\nlabel 0 a\nlabel 1 a\n")
        with pytest.raises(CycleDetected):
            parse_poset("poset 2\ncover 0 1\ncover 1 0\n")

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            read_poset(tmp_path / "absent.poset")


class TestHypermatrixFormat:
    def test_parse(self):
        m = parse_hypermatrix("hypermatrix 2 2\n1\n-2\n1/2\nx*y\n")
        assert m[(0, 1)] == -2
        assert m[(1, 0)] == parse_scalar("1/2")
        assert m[(1, 1)] == variable("x") * variable("y")

    def test_dump_is_replayable(self, rng):
        m = random_hypermatrix(rng, 2, 3)
        assert parse_hypermatrix(dump_hypermatrix(m)).equals(m)

    def test_wrong_entry_count(self):
        with pytest.raises(ParseError):
            parse_hypermatrix("hypermatrix 2 2\n1\n2\n3\n")

    def test_bad_entry_line(self):
        with pytest.raises(ParseError) as info:
            parse_hypermatrix("hypermatrix 1 2\n\n2 +\n", "m.txt")
        assert info.value.line == 3

    def test_bad_header(self):
        with pytest.raises(ParseError):
            parse_hypermatrix("hypermatrix 2\n")
        with pytest.raises(ParseError):
            parse_hypermatrix("hypermatrix 2 1\n1\n2\n")


class TestFMapFormat:
    def test_parse(self):
        f = parse_fmap_table("2,1;1,2 -> 3\n1,2;1,2 -> x\ndefault -> -1\n", 2)
        swap, ident = Permutation((1, 0)), Permutation((0, 1))
        assert f((swap, ident)) == 3
        assert f((ident, ident)) == variable("x")
        assert f((ident, swap)) == -1

    def test_arity_zero(self):
        f = parse_fmap_table(" -> 5\n", 0)
        assert f(()) == 5

    def test_dump_is_replayable(self):
        f = TableFMap.symbolic(2, 1)
        again = parse_fmap_table(dump_fmap_table(f), 1)
        assert dict(again.entries) == dict(f.entries)
        assert again.default == 0

    @pytest.mark.parametrize(
        "text",
        [
            "1,2 3\n",
            "1,2;1,2 -> 1\n",
            "1,1 -> 1\n",
            "1,2 -> 1\n1,2 -> 2\n",
            "default -> 1\ndefault -> 2\n",
            "1,2 -> 1 +\n",
        ],
    )
    def test_errors(self, text):
        with pytest.raises(ParseError) as info:
            parse_fmap_table(text, 1, "f.txt")
        assert info.value.line is not None


class TestGroundedFormat:
    def test_inline(self):
        text = (
            "gf inline 2\n"
            "poset 3\ncover 0 1\ncover 0 2\n"
            "index 1,2\n"
            "z 2 0\n"
            "F 1 0 4\nF 1 1 a + 1\nF 2 0 -1\n"
        )
        gf = parse_grounded(text)
        assert gf.lattice.n == 3
        assert gf.index == (1, 2)
        assert gf.z(2) == 0 and gf.z(1) == 1
        assert gf.value(1, 1) == variable("a") + 1
        assert gf.value(2, 2) == 0

    def test_whole_lattice_by_default(self):
        gf = parse_grounded("gf inline 2\nposet 2\ncover 0 1\nsymbolic G\n")
        assert gf.index == (0, 1)
        assert gf.value(1, 0) == variable("G1(0)")

    def test_poset_file_relative_to_source(self, tmp_path):
        (tmp_path / "diamond.poset").write_text(DIAMOND)
        path = tmp_path / "diamond.gf"
        path.write_text("gf diamond.poset 1\nindex top\nF top bottom 7\n")
        gf = read_grounded(path)
        assert gf.index == (3,)
        assert gf.value(3, 0) == 7

    def test_dump_is_replayable(self, seven_elements):
        gf = cumulative_symbolic(seven_elements, (4, 5, 6), {4: 1, 5: 2})
        again = parse_grounded(dump_grounded(gf))
        assert again.index == gf.index
        assert again.z_assign == gf.z_assign
        for x in gf.index:
            assert again.function(x) == gf.function(x)

    def test_inline_poset_errors_keep_line_numbers(self):
        with pytest.raises(ParseError) as info:
            parse_grounded("gf inline 1\nindex 0\nposet 2\ncover 0 9\n", "g.gf")
        assert info.value.line == 4

    @pytest.mark.parametrize(
        "text",
        [
            "poset 2\n",
            "gf inline\n",
            "gf inline 1\nposet 1\nindex 0\nindex 0\n",
            "gf inline 2\nposet 1\n",
            "gf inline 1\nposet 1\nF 0 0\n",
            "gf inline 1\nposet 1\nz 0\n",
            "gf inline 1\nposet 1\nindex nowhere\n",
            "gf inline 1\nposet 1\nF 0 0 1\nsymbolic\n",
            "gf inline 1\nposet 1\nwhatever\n",
        ],
    )
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_grounded(text, "g.gf")

    def test_grounding_above_index_is_rejected(self):
        with pytest.raises(InvalidGrounding):
            parse_grounded("gf inline 1\nposet 2\ncover 0 1\nindex 0\nz 0 1\n")
