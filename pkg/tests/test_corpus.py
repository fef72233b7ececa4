import pytest

from thompos.corpus import (
    CorpusError,
    ThomRecord,
    embedded_corpus_path,
    load_corpus,
    read_corpus,
    verify_corpus,
)
from thompos.partitions import Partition
from thompos.roots import VirtualPair, roots_to_chern
from thompos.schur_basis import SchurExpansion
from thompos.schur_calc import evaluate_expansion, recover_expansion


@pytest.fixture(scope="module")
def records():
    return {r.name: r for r in load_corpus()}


def block(name, codim, poly, kappa=0):
    return f"record {name}\nkappa {kappa}\ncodim {codim}\npoly {poly}\nend\n"


def test_distinct_record_count(records):
    raw = read_corpus(embedded_corpus_path().read_text())
    assert len(raw) == 33
    assert len(records) == 29


def test_known_records(records):
    assert records["A2[0]"].expansion == SchurExpansion({(2,): 2, (1, 1): 1})
    assert records["A6[0]"].expansion.coefficient_sum() == 4165
    a41 = records["A4[1]"]
    assert a41.codim == 8 and len(a41.expansion) == 15
    assert records["A3"].kappa is None and records["A3"].family == "functions"
    assert records["I23[0]"].kappa == 0


def test_duplicates_are_merged(records):
    assert len(records["I22[1]"].sources) == 2
    assert set(records["A4[0]"].sources) == {"table-sigma0", "intro-example"}


def test_differing_duplicate_rejected(tmp_path):
    path = tmp_path / "bad.thom"
    path.write_text(block("X[0]", 2, "S[2]") + block("X[0]", 2, "2*S[2]"))
    with pytest.raises(CorpusError) as info:
        load_corpus(path)
    assert info.value.record == "X[0]" and info.value.line == 6


def test_codim_mismatch(tmp_path):
    path = tmp_path / "bad.thom"
    path.write_text("# header\n" + block("Y[0]", 3, "S[2]"))
    with pytest.raises(CorpusError) as info:
        load_corpus(path)
    assert info.value.record == "Y[0]" and info.value.line == 2
    assert "Y[0]" in str(info.value)


@pytest.mark.parametrize(
    "text, line",
    [
        ("record A\ncodim 1\npoly S[1\nend\n", 3),
        ("codim 1\n", 1),
        ("record A\ncodim x\n", 2),
        ("record A\nwhat 1\n", 2),
        ("record A\ncodim 1\npoly S[1]\n", 1),
        ("record A\npoly S[1]\nend\n", 3),
        ("record A\nrecord B\n", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(CorpusError) as info:
        read_corpus(text)
    assert info.value.line == line


def test_empty_poly_rejected(tmp_path):
    path = tmp_path / "zero.thom"
    path.write_text(block("Z", 2, "S[2] - S[2]"))
    with pytest.raises(CorpusError):
        load_corpus(path)


def test_injected_negative_fails(records):
    bad = ThomRecord("A2[0]", 2, SchurExpansion({(2,): 2, (1, 1): -1}))
    report = verify_corpus([records["A1[0]"], bad])
    assert report.exit_status == 1
    failure = report.failures[0]
    assert failure.record == "A2[0]" and failure.check == "positivity"
    assert "witness=1^2" in failure.machine()
    assert "failing_records=A2[0]" in report.summary()


def test_full_corpus_passes(records):
    report = verify_corpus(list(records.values()))
    assert report.exit_status == 0
    assert report.record_count == 29 and len(report.checks) == 87


def test_report_is_deterministic(records):
    recs = list(records.values())
    first = verify_corpus(recs).format_machine()
    assert verify_corpus(recs).format_machine() == first
    assert verify_corpus(recs, jobs=2).format_machine() == first


def test_root_level_roundtrip_small(records):
    for rec in records.values():
        if rec.codim > 3:
            continue
        pair = VirtualPair.of_ranks(rec.codim, rec.codim)
        image = roots_to_chern(evaluate_expansion(rec.expansion, pair), pair)
        e_side, f_side = recover_expansion(image, rec.codim, rec.codim)
        assert e_side == rec.expansion == f_side, rec.name


def test_all_codims_homogeneous(records):
    for rec in records.values():
        assert {k.weight for k in rec.expansion} == {rec.codim}
    assert Partition((1, 3, 3)) in records["I22[1]"].expansion
