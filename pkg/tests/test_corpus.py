from cyclegap.constructions import catalog, make_fan_ring
from cyclegap.corpus import (
    CorpusEntry,
    check_euler,
    check_face5,
    check_theorem,
    fixture_corpus,
    load_corpus,
    random_corpus,
)
from cyclegap.formats import dumps_json, write_planar_code


def test_fixture_corpus_names_unique():
    names = [e.name for e in fixture_corpus(include_large=True)]
    assert len(names) == len(set(names))
    assert "catalog:dodecahedron" in names and "gnk:10:2" in names


def test_random_corpus_is_reproducible():
    a = random_corpus(10, 20)
    b = random_corpus(10, 20)
    assert [e.embedding for e in a] == [e.embedding for e in b]
    assert {e.embedding.vertex_count for e in a} <= set(range(4, 21, 2))


def test_facts_are_cached():
    e = CorpusEntry(("gen", "catalog", "cube"), catalog("cube"))
    assert e.girth() == 4
    assert e.facts["girth"] == 4
    assert e.circumference() is e.circumference()


def test_checks_on_specific_graphs():
    theta = CorpusEntry(("gen", "catalog", "theta"), catalog("theta"))
    assert check_euler(theta)[0] is True
    assert check_face5(theta)[0] is None
    assert check_theorem(theta, 10)[0] is None
    fan = CorpusEntry(("gen", "fanring", 4), make_fan_ring(4))
    assert check_face5(fan)[0] is True
    assert check_theorem(fan, 10)[0] is None  # only 2-connected
    dodec = CorpusEntry(("gen", "catalog", "dodecahedron"), catalog("dodecahedron"))
    ok, msg = check_theorem(dodec, 20)
    assert ok is True and "k=3..20" in msg


def test_load_corpus_reads_pc_and_json(tmp_path):
    (tmp_path / "a.pc").write_bytes(write_planar_code([catalog("k4"), catalog("cube")]))
    (tmp_path / "b.json").write_text(dumps_json(catalog("dodecahedron")))
    (tmp_path / "notes.txt").write_text("ignored")
    entries = load_corpus(tmp_path)
    assert [e.name for e in entries] == ["a.pc:0", "a.pc:1", "b.json:0"]
    assert [e.embedding.vertex_count for e in entries] == [4, 8, 20]
