import pytest

from quivermotive.lrat import L, LRat, gl_class
from quivermotive.quiver import (
    A2,
    JORDAN,
    SINGLE_VERTEX,
    Quiver,
    QuiverFormatError,
    d_shift,
    dim_group,
    dim_rep_space,
    group_class,
    parse_quiver,
    serialize_quiver,
)

ONE = LRat.from_int(1)


class TestQuiver:
    def test_validation(self):
        with pytest.raises(ValueError):
            Quiver(0)
        with pytest.raises(ValueError):
            Quiver(2, ((0, 5),))

    def test_loops_and_multiedges_allowed(self):
        q = Quiver(1, ((0, 0), (0, 0)))
        assert len(q.arrows) == 2

    def test_hashable(self):
        assert hash(JORDAN) == hash(Quiver(1, ((0, 0),)))


class TestDimensions:
    def test_rep_space(self):
        assert dim_rep_space(JORDAN, (1,), (1,)) == 2
        assert dim_rep_space(SINGLE_VERTEX, (1,), (2,)) == 2
        assert dim_rep_space(JORDAN, (2,), (1,)) == 6

    def test_group(self):
        assert dim_group((1,)) == 1
        assert dim_group((2, 1)) == 5
        assert dim_group((0,)) == 0

    def test_d_shift(self):
        assert d_shift(JORDAN, (1,), (1,)) == -1
        assert d_shift(SINGLE_VERTEX, (1,), (2,)) == -1
        for q, w in ((JORDAN, (3,)), (A2, (1, 2)), (SINGLE_VERTEX, (0,))):
            zero = (0,) * q.vertex_count
            assert d_shift(q, zero, w) == 0

    def test_mismatched_vector_rejected(self):
        with pytest.raises(ValueError, match="entries"):
            dim_rep_space(A2, (1,), (1, 1))
        with pytest.raises(ValueError, match="nonnegative"):
            dim_rep_space(JORDAN, (-1,), (1,))

    def test_rep_space_additive_over_disjoint_union(self):
        # two copies of the Jordan quiver side by side
        union = Quiver(2, ((0, 0), (1, 1)))
        for v0, w0, v1, w1 in ((1, 1, 2, 0), (2, 2, 1, 1), (0, 1, 3, 2)):
            combined = dim_rep_space(union, (v0, v1), (w0, w1))
            separate = dim_rep_space(JORDAN, (v0,), (w0,)) + dim_rep_space(
                JORDAN, (v1,), (w1,)
            )
            assert combined == separate


class TestGroupClass:
    def test_values(self):
        assert group_class((1,)) == L - ONE
        assert group_class((1, 1)) == (L - ONE) * (L - ONE)
        assert group_class((2,)) == gl_class(2)


class TestParsing:
    def test_jordan_spec(self):
        q, named = parse_quiver('{"vertices": 1, "edges": [[0, 0]], "w": [1]}')
        assert q == JORDAN
        assert named == {"w": (1,)}

    def test_a2_spec(self):
        q, named = parse_quiver('{"vertices": 2, "edges": [[0, 1]], "v": [1, 1], "max_degree": 3}')
        assert q == A2
        assert named["v"] == (1, 1)
        assert named["max_degree"] == 3

    def test_out_of_range_arrow(self):
        with pytest.raises(QuiverFormatError, match=r"edges\[0\]"):
            parse_quiver('{"vertices": 2, "edges": [[0, 5]]}')

    def test_unknown_field(self):
        with pytest.raises(QuiverFormatError, match="unknown field"):
            parse_quiver('{"vertices": 1, "edges": [], "extra": 1}')

    def test_missing_fields(self):
        with pytest.raises(QuiverFormatError, match="vertices"):
            parse_quiver('{"edges": []}')
        with pytest.raises(QuiverFormatError, match="edges"):
            parse_quiver('{"vertices": 1}')

    def test_bad_json_has_position(self):
        with pytest.raises(QuiverFormatError, match="line 1"):
            parse_quiver("{nope}")

    def test_negative_vector_entry(self):
        with pytest.raises(QuiverFormatError, match="nonnegative"):
            parse_quiver('{"vertices": 1, "edges": [], "w": [-1]}')

    def test_wrong_vector_length(self):
        with pytest.raises(QuiverFormatError, match="'w' has 2 entries"):
            parse_quiver('{"vertices": 1, "edges": [], "w": [1, 2]}')

    def test_bool_is_not_an_integer(self):
        with pytest.raises(QuiverFormatError):
            parse_quiver('{"vertices": true, "edges": []}')

    def test_round_trip(self):
        documents = (
            '{"vertices": 1, "edges": [[0, 0]]}',
            '{"vertices": 2, "edges": [[0, 1], [0, 1]], "w": [1, 2], "v": [0, 1]}',
            '{"vertices": 3, "edges": [[0, 1], [0, 2]], "max_degree": 4}',
        )
        for text in documents:
            q, named = parse_quiver(text)
            again, named_again = parse_quiver(serialize_quiver(q, named))
            assert q == again
            assert named == named_again
