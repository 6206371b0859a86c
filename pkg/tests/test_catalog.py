import pytest

from blanchfield.catalog import (CatalogEntry, EntryParseError, builtin,
                                 builtin_catalog, load_entry, random_seifert,
                                 render_entry)
from blanchfield.invariants import alexander_polynomial
from blanchfield.laurent import LaurentPoly
from blanchfield.matrix import ZZ, Matrix
from blanchfield.pairing import (DualSurfaceData, FibredData, InvariantViolation,
                                 SeifertData, from_fibred)

TREFOIL_TEXT = """\
name: trefoil
kind: seifert
A: [[-1, 1], [0, -1]]
"""


def test_load_well_formed_trefoil():
    entry = load_entry(TREFOIL_TEXT)
    assert entry.name == "trefoil"
    assert entry.kind == "seifert"
    assert entry.matrix("A") == Matrix.from_int_rows(ZZ, [[-1, 1], [0, -1]])


def test_load_accepts_bytes_and_messy_whitespace():
    text = "name: x\nkind:seifert\nA:[[ -1 ,1],\n   [0, -1 ]]\n"
    entry = load_entry(text.encode("utf-8"))
    assert entry.matrix("A") == Matrix.from_int_rows(ZZ, [[-1, 1], [0, -1]])


def test_load_unknot_empty_matrix():
    entry = load_entry("name: u\nkind: seifert\nA: []\n")
    data = entry.data()
    assert isinstance(data, SeifertData) and data.size == 0


def test_load_rejects_non_skew_j_with_invariant_name():
    text = "name: bad\nkind: fibred\nP: [[1,0],[0,1]]\nJ: [[0,1],[1,0]]\n"
    with pytest.raises(InvariantViolation, match="J skew-symmetric"):
        load_entry(text)


def test_parse_errors_carry_position():
    with pytest.raises(EntryParseError) as exc:
        load_entry("name: x\nkind: seifert\nA: [[1,2],[3]]\n")
    assert exc.value.line == 3
    with pytest.raises(EntryParseError, match="unknown field"):
        load_entry("name: x\nkind: seifert\nB: [[0]]\nA: []\n")
    with pytest.raises(EntryParseError, match="kind"):
        load_entry("name: x\nkind: torus\nA: []\n")
    with pytest.raises(EntryParseError, match="requires matrix"):
        load_entry("name: x\nkind: fibred\nP: [[1]]\n")


def test_round_trip_builtins():
    for entry in builtin_catalog():
        assert load_entry(render_entry(entry)) == entry


def test_round_trip_random_entries():
    for seed in range(5):
        data = random_seifert(2, 3, seed)
        entry = CatalogEntry(
            name=f"rnd-{seed}", kind="seifert",
            matrices=(("A", data.matrix.entries),), notes="generated")
        assert load_entry(render_entry(entry)) == entry


def test_builtin_pins():
    assert builtin("unknot").data().size == 0
    assert alexander_polynomial(builtin("trefoil").data()) == \
        LaurentPoly.parse("t - 1 + t^-1")
    fib = builtin("trefoil-fibred").data()
    assert isinstance(fib, FibredData)
    assert from_fibred(fib).presentation.det() == LaurentPoly.parse("t^2 - t + 1")
    dual = builtin("trefoil-dual").data()
    assert isinstance(dual, DualSurfaceData)
    with pytest.raises(KeyError):
        builtin("granny")


def test_random_seifert_construction():
    assert random_seifert(0, 3, 1).size == 0
    for seed in (1, 2, 3):
        data = random_seifert(3, 3, seed)
        skew = data.matrix - data.matrix.transpose()
        assert skew.det() == 1


def test_random_seifert_deterministic():
    a = random_seifert(2, 3, 42)
    b = random_seifert(2, 3, 42)
    assert a.matrix == b.matrix
    c = random_seifert(2, 3, 43)
    assert a.matrix != c.matrix
