from dataclasses import replace
from importlib import resources

import pytest

from halfabelian import paperdata
from halfabelian.orbits import Parity, diagram_parity_class
from halfabelian.rootsys import SimpleType, ValidationError

from conftest import row


def test_row_counts(table_rows):
    counts = {t: len(paperdata.rows_of(table_rows, t)) for t in paperdata.TABLE_IDS}
    assert counts == {"G2s": 2, "F4s": 6, "E6s": 8, "E7s": 12, "E8s": 27,
                      "F4o": 2, "E6o": 3, "E7o": 9, "E8o": 16}


def test_bit_exact_round_trip(table_rows):
    text = resources.files("halfabelian").joinpath("data/tables.txt").read_text(encoding="utf-8")
    assert paperdata.dumps(table_rows) == text
    assert paperdata.dumps(paperdata.loads(text)) == text


def test_row_invariants(table_rows):
    for r in table_rows:
        cls = diagram_parity_class(r.diagram)
        if r.is_strict_table:
            assert cls is Parity.STRICTLY_ODD
            assert r.dim_g1 is not None and r.max_abelian is not None
            assert r.half_abelian == (2 * r.max_abelian == r.dim_g1)
        else:
            assert 2 in r.diagram.weights and cls is Parity.ODD
            assert r.strict_piece


def test_from_line_errors():
    with pytest.raises(ValidationError):
        paperdata.TableRow.from_line("G2s|A1|G 2|0 1|4|2|")
    with pytest.raises(ValidationError):
        paperdata.TableRow.from_line("X9s|A1|G 2|0 1|4|2||yes")
    with pytest.raises(ValidationError):
        paperdata.TableRow.from_line("G2s|A1|G 2|0 1 1|4|2||yes")
    with pytest.raises(ValidationError):
        paperdata.TableRow.from_line("G2s|A1|G 2|0 1|4|2||maybe")


def test_parse_piece():
    assert paperdata.parse_piece("D6 (3,2^4,1)") == (SimpleType("D", 6), "3,2^4,1")
    assert paperdata.parse_piece("E6 (A3+A1)") == (SimpleType("E", 6), "A3+A1")
    assert paperdata.parse_piece("A5") == (SimpleType("A", 5), None)


@pytest.mark.parametrize(
    "tid,name,dim,mis",
    [("E8s", "A7", 14, 7), ("E8s", "D7(a2)", 16, 7), ("G2s", "A1", 4, 2), ("F4s", "~A1", 8, 2)],
)
def test_example_rows(table_rows, tid, name, dim, mis):
    rep = paperdata.verify_row(row(table_rows, tid, name), table_rows)
    assert rep.ok, rep.mismatches
    assert (rep.dim_g1, rep.mis_size) == (dim, mis)


def test_f4o_c3(table_rows):
    rep = paperdata.verify_row(row(table_rows, "F4o", "C3"), table_rows)
    assert rep.ok and rep.subtype == "B3" and rep.reduced_partition == "3,2^2"


def test_e7o_rows_without_printed_values(table_rows):
    for name in ("D4+A1", "A5+A1"):
        rep = paperdata.verify_row(row(table_rows, "E7o", name), table_rows)
        assert rep.ok and not rep.row.half_abelian
        assert (rep.dim_g1, rep.mis_size) == (12, 5)


def test_fault_injection(table_rows):
    r = row(table_rows, "E6s", "A2+A1")
    rep = paperdata.verify_row(replace(r, dim_g1=16), table_rows)
    assert not rep.ok and any("dim_g1" in m for m in rep.mismatches)
    rep = paperdata.verify_row(replace(r, max_abelian=7), table_rows)
    assert any("max_abelian" in m for m in rep.mismatches)
    odd = row(table_rows, "E8o", "D7")
    rep = paperdata.verify_row(replace(odd, strict_piece="D7 (5,4^2,3)"), table_rows)
    assert any("partition" in m for m in rep.mismatches)
    rep = paperdata.verify_row(replace(odd, strict_piece="E7 (A1)"), table_rows)
    assert any("type" in m for m in rep.mismatches)
    rep = paperdata.verify_row(replace(odd, half_abelian=False), table_rows)
    assert any("half-abelian" in m for m in rep.mismatches)


def test_exceptional_piece_mismatch(table_rows):
    r = row(table_rows, "E7o", "D6(a2)")
    rep = paperdata.verify_row(replace(r, strict_piece="E6 (A2+A1)"), table_rows)
    assert any("differs" in m for m in rep.mismatches)
    rep = paperdata.verify_row(replace(r, strict_piece="E6 (E6)"), table_rows)
    assert any("no row" in m for m in rep.mismatches)


def test_parallel_verification_matches_serial(table_rows):
    few = paperdata.rows_of(table_rows, "F4s") + paperdata.rows_of(table_rows, "E6o")
    ser = [r.summary() for r in paperdata.verify_all(few)]
    par = [r.summary() for r in paperdata.verify_all(few, jobs=2)]
    assert ser == par
