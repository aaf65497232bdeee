from __future__ import annotations

from ortho_greedy.fixtures import (
    CONSTRUCTION_STEPS,
    construction_sequence,
    corpus_documents,
    exponential_instance,
    exponential_labels,
    load_corpus,
    write_corpus,
)
from ortho_greedy.pipeline import test_greedy as greedy_verdict
from ortho_greedy.universal import test_universal as universal_verdict
from ortho_greedy.verify import is_greedy


def test_checked_in_corpus_is_current(tmp_path):
    write_corpus(tmp_path)
    docs = corpus_documents()
    assert sorted(p.name for p in tmp_path.iterdir()) == sorted(docs)
    entries = load_corpus()
    assert len(entries) == len(docs) - 1
    for entry in entries:
        assert (tmp_path / entry["file"]).read_text() == docs[entry["file"]]
        if entry["drawing"] is not None:
            assert entry["drawing"].problems() == []
            assert entry["drawing"].to_json() == docs[entry["file"]]
        else:
            assert entry["rep"].to_json() == docs[entry["file"]]


def test_every_fixture_gets_its_expected_verdict(fixtures):
    for f in fixtures.values():
        v = greedy_verdict(f.rep)
        assert v.status == f.expected, f.name
        if f.stage is not None:
            assert v.stage == f.stage, f.name


def test_construction_sequence():
    reps = construction_sequence()
    assert len(reps) == len(CONSTRUCTION_STEPS) + 1
    for prev, cur in zip(reps, reps[1:]):
        assert cur.n > prev.n
        assert universal_verdict(cur).is_universal


def test_exponential_instance_shape():
    for q in (2, 3, 4, 8):
        d = exponential_instance(q)
        labels = exponential_labels(q)
        assert len(labels) == 4 * q - 2
        assert d.rep.n == len(labels)
        assert d.problems() == []
        # the layout used to build the instance is not itself greedy
        assert not is_greedy(d).is_greedy
