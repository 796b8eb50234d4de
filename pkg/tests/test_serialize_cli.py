import json

import pytest

from topolinear.classify_q4 import code_h, standard_semilinear_code
from topolinear.cli import main
from topolinear.isometry import is_isotopically_transitive
from topolinear.loops import make_dihedral, twisted_graph_code
from topolinear.serialize import (MalformedInput, build_from_spec,
                                  builtin_loop, certificate_from_json,
                                  certificate_to_json, code_from_json,
                                  code_to_json, load_code, loop_from_json,
                                  loop_to_json, parse_r_expression, save_code,
                                  save_loop)


# ---------------------------------------------------------------------------
# round-trips

def test_code_file_round_trip_is_bit_exact(tmp_path):
    M = twisted_graph_code(3)
    p = tmp_path / "code.json"
    save_code(M, p)
    M2 = load_code(p)
    assert M2.words == M.words and M2.provenance == M.provenance
    p2 = tmp_path / "again.json"
    save_code(M2, p2)
    assert p.read_bytes() == p2.read_bytes()


def test_code_json_shape():
    obj = code_to_json(twisted_graph_code(3))
    assert set(obj) == {"q", "n", "structure", "words", "provenance"}
    assert obj["structure"] == "graph"
    assert obj["words"] == sorted(obj["words"])


@pytest.mark.parametrize("mutate", [
    lambda o: o.pop("q"),
    lambda o: o.update(q="six"),
    lambda o: o.update(words=[]),
    lambda o: o["words"][0].append(0),
    lambda o: o["words"][0].__setitem__(0, 9),
    lambda o: o.update(provenance=7),
])
def test_malformed_code_files_are_rejected(mutate):
    obj = code_to_json(twisted_graph_code(3))
    obj["words"] = [list(w) for w in obj["words"]]
    mutate(obj)
    with pytest.raises(MalformedInput):
        code_from_json(obj)


def test_loop_round_trip_and_rejection(tmp_path):
    L = make_dihedral(3)
    p = tmp_path / "loop.json"
    save_loop(L, p)
    from topolinear.serialize import load_loop
    L2 = load_loop(p)
    assert [list(r) for r in L2.table] == [list(r) for r in L.table]
    assert L2.identity == L.identity
    with pytest.raises(MalformedInput):
        loop_from_json({"table": [[0, 0], [1, 1]]})
    with pytest.raises(MalformedInput):
        loop_from_json({"table": [[0, 1], [1, 0], [0, 1]]})


def test_certificate_round_trip_and_validation():
    M = twisted_graph_code(3)
    cert = is_isotopically_transitive(M, method="explicit").certificate
    obj = certificate_to_json(cert)
    back = certificate_from_json(obj)
    assert back.verify(M) == (True, None)
    bad = json.loads(json.dumps(obj))
    bad["witnesses"][0]["taus"][0][0] = bad["witnesses"][0]["taus"][0][1]
    with pytest.raises(MalformedInput):
        certificate_from_json(bad)


# ---------------------------------------------------------------------------
# construction specs

def test_spec_dispatch_covers_all_schemas():
    comp = build_from_spec({"p": 3, "outer": "cp", "inner": [2]})
    assert len(comp) == 36 and comp.provenance["inner"] == [1, 1]
    quad = build_from_spec({"p": 2, "k": 1, "n": 4, "r": "x1x2"})
    assert len(quad) == 64
    iterated = build_from_spec({"construction": "iterated",
                                "loop": {"name": "dihedral", "p": 3}, "n": 3})
    assert len(iterated) == 36
    graph = build_from_spec({"loop": {"name": "cp", "p": 5}})
    assert graph.provenance == {"construction": "graph", "loop": "cp", "p": 5}
    table = build_from_spec({"loop": loop_to_json(builtin_loop("zpz2", 3))})
    assert len(table) == 36


def test_r_expression_parser():
    assert parse_r_expression("x1x2+x3x4", 4, 2) == [
        [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]]
    assert parse_r_expression("0", 3, 2) == [[0] * 3 for _ in range(3)]
    assert parse_r_expression("x2x1", 3, 2)[0][1] == 1
    for bad in ("x1", "x1x1", "x1x2+x1x2", "x1x5", "junk"):
        with pytest.raises(MalformedInput):
            parse_r_expression(bad, 3, 2)


def test_spec_rejections():
    for spec in ({"outer": "cp", "p": 3, "inner": [3]},
                 {"outer": "cp", "p": 3, "inner": []},
                 {"outer": "d6", "p": 3, "inner": [1, 1]},
                 {"construction": "nope"},
                 {"p": 2},
                 42):
        with pytest.raises(MalformedInput):
            build_from_spec(spec)


# ---------------------------------------------------------------------------
# command line

def write_json(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def test_cli_construct_verify_round_trip(tmp_path, capsys):
    spec = write_json(tmp_path / "spec.json", {"p": 3, "outer": "cp", "inner": [2]})
    out = str(tmp_path / "code.json")
    cert = str(tmp_path / "cert.json")
    assert main(["construct", spec, out, "--certificate", cert]) == 0
    assert main(["verify", out, "--mode", "mds"]) == 0
    assert main(["verify", out, "--mode", "transitive", "--certificate", cert]) == 0
    capsys.readouterr()
    assert main(["verify", out, "--mode", "transitive", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True and payload["mode"] == "transitive"


def test_cli_topolinear_certificate_replay(tmp_path):
    spec = write_json(tmp_path / "spec.json", {"loop": {"name": "cp", "p": 5}})
    out = str(tmp_path / "code.json")
    cert = str(tmp_path / "cert.json")
    assert main(["construct", spec, out, "--certificate", cert]) == 0
    assert json.loads(open(cert).read())["mode"] == "topolinear"
    assert main(["verify", out, "--mode", "topolinear", "--certificate", cert]) == 0


def test_cli_exit_codes_for_bad_inputs(tmp_path):
    bad = write_json(tmp_path / "bad.json", {"outer": "cp", "p": 3, "inner": [3]})
    out = str(tmp_path / "x.json")
    assert main(["construct", bad, out]) == 2
    notjson = tmp_path / "nj.json"
    notjson.write_text("{oops")
    assert main(["verify", str(notjson)]) == 2
    assert main(["verify", str(tmp_path / "missing.json")]) == 2


def test_cli_oversized_search_exits_3(tmp_path):
    spec = write_json(tmp_path / "spec.json", {"p": 3, "outer": "zpz2", "inner": [2, 3]})
    out = str(tmp_path / "big.json")
    assert main(["construct", spec, out]) == 0
    assert main(["verify", out, "--mode", "transitive"]) == 3


def test_cli_classify(tmp_path, capsys):
    h = str(tmp_path / "h.json")
    save_code(code_h(), h)
    assert main(["classify", h, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"semilinear": False, "degree": None, "transitive": True}
    cubic = str(tmp_path / "r4.json")
    save_code(standard_semilinear_code(4, [(0, 1, 2)]), cubic)
    assert main(["classify", cubic]) == 1
    parity3 = str(tmp_path / "p3.json")
    from topolinear.codes import parity_code
    save_code(parity_code(3, 3), parity3)
    assert main(["classify", parity3]) == 2


def test_cli_equivalent(tmp_path):
    a = str(tmp_path / "a.json")
    b = str(tmp_path / "b.json")
    save_code(standard_semilinear_code(4, []), a)
    save_code(standard_semilinear_code(4, [(0, 1), (2, 3)]), b)
    assert main(["equivalent", a, a]) == 0
    assert main(["equivalent", a, b]) == 1


def test_cli_count_json(capsys):
    assert main(["count", "--partitions", "10,100", "--forms", "2,1,3",
                 "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["forms"]["count"] == 8 and payload["forms"]["verified"]
    assert [len(c) for c in payload["forms"]["classes"]] == [4, 4]
    ratios = [row["ratio"] for row in payload["partitions"]]
    assert abs(1 - ratios[1]) < abs(1 - ratios[0])


def test_cli_gloop(tmp_path):
    assert main(["gloop", "cp", "--p", "3"]) == 0
    assert main(["gloop", "dihedral", "--p", "3"]) == 0
    assert main(["gloop", "non-g-6"]) == 1
    assert main(["gloop", "zpz2", "--p", "7"]) == 3
    loopfile = str(tmp_path / "loop.json")
    save_loop(make_dihedral(5), loopfile)
    assert main(["gloop", loopfile]) == 0


def test_cli_construct_is_deterministic(tmp_path):
    spec = write_json(tmp_path / "spec.json", {"p": 2, "k": 1, "n": 3, "r": "x1x2"})
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["construct", spec, str(a)]) == 0
    assert main(["construct", spec, str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
