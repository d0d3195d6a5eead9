import pytest

from traag import zoo
from traag.atlas import (
    CorpusEntry,
    classes_in_range,
    enumerate_graphs,
    iso_classes,
    labeled_graph,
    num_labeled,
    oracle_chordal,
    oracle_droms,
    oracle_special,
)
from traag.errors import BoundExceeded
from traag.iso import canonical_form, find_isomorphism


def test_class_counts():
    assert [len(iso_classes(n)) for n in (1, 2, 3, 4)] == [1, 3, 16, 218]


def test_partitioned_equals_serial():
    serial = iso_classes(4)
    assert iso_classes(4, parts=7) == serial
    assert iso_classes(4, jobs=2, parts=5) == serial


def test_representative_is_least_index():
    reps = classes_in_range(3, 0, num_labeled(3))
    for idx in range(num_labeled(3)):
        key = canonical_form(labeled_graph(3, idx))
        rep = next(i for k, i in reps.items() if f"3:{k:x}".encode() == key)
        assert rep <= idx


def test_entries_are_pairwise_non_isomorphic():
    entries = list(enumerate_graphs(3))
    for i, e in enumerate(entries):
        assert e.key == canonical_form(e.graph)
        for f in entries[i + 1:]:
            assert find_isomorphism(e.graph, f.graph) is None


def test_bounds():
    with pytest.raises(BoundExceeded):
        iso_classes(6)
    with pytest.raises(BoundExceeded):
        list(enumerate_graphs(0))


def test_oracles_on_fixtures():
    assert not oracle_special(zoo.GAMMA1)
    assert oracle_droms(zoo.GAMMA3) and oracle_droms(zoo.UPSILON)
    assert not oracle_droms(zoo.GAMMA4)
    assert not oracle_chordal(zoo.C4) and oracle_chordal(zoo.P4)


def test_corpus_counts_n3(corpus4):
    n3 = [e for e in corpus4 if e.n == 3]
    assert len(n3) == 16
    assert sum(e.predicates["special"] for e in n3) == 9
    assert sum(e.predicates["droms"] for e in n3) == 8
    assert all(e.predicates["chordal"] for e in n3)


def test_droms_count(droms4):
    assert len(droms4) == 36


def test_entry_predicates():
    e = CorpusEntry(2, 0, b"2:0", labeled_graph(2, 0))
    assert e.predicates["droms"] and e.predicates["verdict"] == "Rigid"
    assert e.discrepancies() == []


@pytest.mark.slow
def test_class_count_n5():
    assert len(iso_classes(5, jobs=4)) == 9608
