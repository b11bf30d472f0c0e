import json

import pytest

from triforge import cli, documents as docs
from triforge.errors import ParameterError, StructuralCheckFailed
from triforge.fillings import certify_lps
from triforge.graphs import to_edgelist


def run(*argv):
    return cli.run([str(a) for a in argv])


def load(path):
    return json.loads(path.read_text())


@pytest.fixture(scope="module")
def certs(tmp_path_factory):
    d = tmp_path_factory.mktemp("certs")
    assert run("lps", "certify", "-p", 17, "-q", 5, "--exact", "-o", d / "small.json") == 0
    assert run("lps", "certify", "-p", 17, "-q", 269, "-o", d / "big.json") == 0
    return d


def test_certify_small(certs):
    doc = load(certs / "small.json")
    assert doc["schema_version"] == 1 and doc["kind"] == "filling"
    pay = doc["payload"]
    assert pay["lambda1"]["status"] == "CertifiedExpansive"
    assert pay["girth"] == {"value": 4} and pay["rotund"] is False
    assert set(pay) == {"k", "source", "girth", "rotund", "lambda1", "graph_hash"}
    assert doc["provenance"]["status_tiers"] == ["CertifiedExpansive"]


def test_certify_rejects_bad_q(capsys):
    assert run("lps", "certify", "-p", 17, "-q", 7) == 2
    assert "q" in capsys.readouterr().err


def test_usage_errors_exit_two(capsys):
    assert run("lps", "bogus") == 2
    assert run("lps", "certify", "-p", 17) == 2
    assert run() == 2
    assert "error" in capsys.readouterr().err


def test_help_exits_zero(capsys):
    assert run("--help") == 0
    assert "lps" in capsys.readouterr().out


def test_assemble_with_t(certs, tmp_path):
    big = certs / "big.json"
    out = tmp_path / "out.json"
    assert run("triangle", "assemble", "-c", big, "-c", big, "-c", big, "-o", out) == 0
    pay = load(out)["payload"]
    assert pay["verdict"] == "HyperbolicWithT"
    assert pay["checks"] == {"angle_per_filling": [True, True, True], "triangle_angle_sum": True}
    assert pay["inputs"] == [load(big)["payload"]["graph_hash"]] * 3


def test_assemble_rejected(certs, tmp_path):
    small = certs / "small.json"
    assert run("triangle", "assemble", "-c", small, "-c", small, "-c", small, "-o", tmp_path / "o.json") == 1
    assert load(tmp_path / "o.json")["payload"]["verdict"] == "Rejected"


def test_assemble_needs_three(certs):
    assert run("triangle", "assemble", "-c", certs / "big.json") == 2
    assert run("triangle", "assemble", "-c", "missing.json", "-c", "a", "-c", "b") == 2


def test_structural_failure_exit_three(certs, monkeypatch):
    def boom(*_):
        raise StructuralCheckFailed("forced")

    monkeypatch.setattr(cli, "assemble_triangle", boom)
    big = certs / "big.json"
    assert run("triangle", "assemble", "-c", big, "-c", big, "-c", big, "-o", "-") == 3


def test_payloads_are_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run("varju", "sample", "-p", 11, "-k", 5, "--seed", 4, "--trials", 3, "-o", path) == 0
    da, db = load(a), load(b)
    assert docs.payload_bytes(da) == docs.payload_bytes(db)
    assert da["provenance"]["seed"] == 4


def test_filling_roundtrip():
    c = certify_lps(17, 269)
    doc = docs.make_document("filling", docs.filling_payload(c))
    back = docs.filling_from_payload(docs.loads(docs.dumps(doc), "filling")["payload"])
    assert back == c
    text = docs.dumps(doc)
    assert docs.dumps(json.loads(text)) == text


def test_document_validation():
    with pytest.raises(ParameterError):
        docs.loads("not json")
    with pytest.raises(ParameterError):
        docs.loads(json.dumps({"schema_version": 99, "kind": "filling", "payload": {}}))
    with pytest.raises(ParameterError):
        docs.loads(docs.dumps(docs.make_document("assembly", {})), "filling")
    bad = docs.filling_payload(certify_lps(17, 269))
    bad["rotund"] = False
    with pytest.raises(ParameterError):
        docs.filling_from_payload(bad)


def test_float_repr_roundtrip():
    x = 0.1 + 0.2
    assert json.loads(docs.dumps(docs.make_document("assembly", {"theta": x})))["payload"]["theta"] == x


def test_scan_cache_and_sorting(tmp_path, monkeypatch):
    monkeypatch.setenv("FORGE_CACHE_DIR", str(tmp_path / "cache"))
    out = tmp_path / "scan.json"
    assert run("lps", "scan", "-p", 17, "--q-max", 120, "-o", out) == 0
    rows = load(out)["payload"]["rows"]
    assert [r["q"] for r in rows] == sorted(r["q"] for r in rows)
    assert len(list((tmp_path / "cache").iterdir())) == len(rows)
    assert load(out)["payload"]["rotund_bipartite"][0] == 73
    par = tmp_path / "par.json"
    assert run("lps", "scan", "-p", 17, "--q-max", 120, "--no-cache", "--workers", 2, "-o", par) == 0
    assert docs.payload_bytes(load(par)) == docs.payload_bytes(load(out))
    assert run("lps", "scan", "-p", 17, "--q-min", 50, "--q-max", 10) == 2


def test_cache_dir_flag(tmp_path):
    assert run("lps", "scan", "-p", 13, "--q-max", 20, "--cache-dir", tmp_path / "c", "-o", tmp_path / "s.json") in (0, 1)
    assert any((tmp_path / "c").iterdir())


def test_build_edgelist_and_spectral(tmp_path):
    g = tmp_path / "g.txt"
    assert run("lps", "build", "-p", 17, "-q", 5, "--format", "edgelist", "-o", g) == 0
    assert g.read_text().splitlines()[0] == "120 1080 18 1"
    assert len((tmp_path / "g.txt.labels").read_text().splitlines()) == 120
    out = tmp_path / "spec.json"
    assert run("spectral", "-i", g, "--exact", "-o", out) == 0
    pay = load(out)["payload"]
    assert pay["expansive"]["status"] == "CertifiedTrue"
    assert pay["ramanujan"]["inertia"]["n_pos"] == 2


def test_spectral_negative(tmp_path):
    import networkx as nx
    import numpy as np
    from triforge.graphs import MultiGraph

    g = MultiGraph(6, np.array(list(nx.cycle_graph(6).edges())))
    path = tmp_path / "c6.txt"
    path.write_text(to_edgelist(g))
    assert run("spectral", "-i", path, "--exact", "-o", tmp_path / "o.json") == 1
    assert load(tmp_path / "o.json")["payload"]["expansive"]["reason"] == "boundary"


def test_build_json(tmp_path):
    out = tmp_path / "b.json"
    assert run("lps", "build", "-p", 5, "-q", 13, "-o", out) == 0
    pay = load(out)["payload"]
    assert pay["vertices"] == 2184 and pay["rank"]["match"]
    assert len(pay["generators"]) == 6


def test_present_and_classical(tmp_path, capsys):
    out = tmp_path / "p.txt"
    assert run("present", "--dihedral", 2, 3, 7, "-o", out) == 0
    assert out.read_text().startswith("gens 3 k 2\nx1^2\n")
    assert run("present", "-k", 5, "-p", 11, "--seed", 2, "--format", "json", "-o", tmp_path / "p.json") == 0
    doc = load(tmp_path / "p.json")
    assert doc["kind"] == "presentation" and doc["payload"]["abelianization"]["free_rank"] == 0
    assert run("present") == 2
    assert run("present", "-k", 4, "-p", 11) == 2
    assert run("classical-check", 2, 3, 7) == 0
    assert capsys.readouterr().out.startswith("PASS (2,3,7)")
    assert run("classical-check", 1, 3, 7) == 2
