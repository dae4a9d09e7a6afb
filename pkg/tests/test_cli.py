import io
import json
import os
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from twistalex.fibercheck import search_obstruction
from twistalex.frontend import corpus_entry
from twistalex.frontend.cli import run_cli
from twistalex.frontend.report import (
    REPORT_SCHEMA, build_report, dumps, input_record, poly_map, result_record, strip_timing,
    validate_report, verdict_record, write_json_atomic,
)
from twistalex.laurent import LaurentPoly


def corpus_file(name):
    return str(resources.files("twistalex.frontend").joinpath("corpus", name + ".pres"))


def run(*argv):
    out = io.StringIO()
    code = run_cli(list(argv), out)
    return code, out.getvalue()


# -- report -------------------------------------------------------------------------

def test_poly_map():
    assert poly_map(LaurentPoly.parse("t^-1 - 3 + t")) == {"-1": 1, "0": -3, "1": 1}
    assert poly_map(LaurentPoly()) == {}
    assert poly_map(None) is None


def _report(label, max_order=6):
    inp = corpus_entry(label).manifold()
    v = search_obstruction(inp, max_order)
    recs = [result_record(r, label) for r in v.results]
    return build_report(input_record(inp, max_order=max_order), recs, verdict_record(v, v.results), 0.5)


def test_report_schema_and_fields():
    doc = _report("trefoil_0surgery")
    validate_report(doc)
    jsonschema.Draft202012Validator.check_schema(REPORT_SCHEMA)
    assert list(doc) == ["version", "input", "results", "verdict", "timing"]
    r = doc["results"][0]
    assert r["group"] == "1" and r["images"] == [[0]] * len(doc["input"]["generators"])
    assert r["delta1"] == {"0": 1, "1": -1, "2": 1}
    assert doc["verdict"]["kind"] == "ConsistentUpTo"
    assert doc["input"]["convention"] == "presentation-2-complex"


def test_invalid_report_is_rejected():
    doc = _report("trefoil")
    doc["results"][0]["status"] = "MAYBE"
    with pytest.raises(jsonschema.ValidationError):
        validate_report(doc)
    bad = dict(doc)
    bad.pop("verdict")
    with pytest.raises(jsonschema.ValidationError):
        validate_report(bad)


def test_reports_are_deterministic():
    a, b = _report("figure8_0surgery", 8), _report("figure8_0surgery", 8)
    a["timing"]["seconds"], b["timing"]["seconds"] = 1.0, 2.0
    assert dumps(strip_timing(a)) == dumps(strip_timing(b))


def test_atomic_write(tmp_path):
    doc = _report("unknot")
    target = tmp_path / "r.json"
    target.write_text("old")
    write_json_atomic(target, doc)
    assert json.loads(target.read_text()) == doc
    assert sorted(os.listdir(tmp_path)) == ["r.json"]


def test_atomic_write_failure_leaves_target(tmp_path):
    target = tmp_path / "r.json"
    target.write_text("old")
    with pytest.raises(TypeError):
        write_json_atomic(target, {"x": object()})
    assert target.read_text() == "old"
    assert os.listdir(tmp_path) == ["r.json"]


# -- cli ---------------------------------------------------------------------------

def test_search_fibered_exit_zero(tmp_path):
    out = tmp_path / "out.json"
    code, text = run("search", "--input", corpus_file("figure8_0surgery"), "--max-order", "12",
                     "--json", str(out))
    assert code == 0 and "ConsistentUpTo(12)" in text
    doc = json.loads(out.read_text())
    validate_report(doc)
    assert doc["verdict"]["kind"] == "ConsistentUpTo" and doc["verdict"]["max_order"] == 12


def test_search_obstruction_exit_two(tmp_path):
    bs = tmp_path / "bs.pres"
    bs.write_text("label: bs12\ngens: a b\nrel: b a b^-1 a^-1 a^-1\nphi: 0 -1\n")
    out = tmp_path / "o.json"
    code, text = run("search", "--input", str(bs), "--max-order", "3", "--json", str(out))
    assert code == 2 and "ObstructionFound" in text
    doc = json.loads(out.read_text())
    w = doc["verdict"]["witness"]
    assert doc["results"][w]["status"] == "NONMONIC"


def test_search_content_monic_pretzel(tmp_path):
    out = tmp_path / "p.json"
    code, text = run("search", "--input", corpus_file("pretzel535_0surgery"), "--max-order", "12",
                     "--dedupe-conjugacy", "--content-monic", "--json", str(out))
    assert code == 2 and "A4" in text
    doc = json.loads(out.read_text())
    w = doc["results"][doc["verdict"]["witness"]]
    assert w["group"] == "A4" and w["delta1_content"] == 729 and w["monic"] is True


def test_search_budget_is_an_error_but_writes_report(tmp_path):
    out = tmp_path / "b.json"
    code, text = run("search", "--input", corpus_file("trefoil_0surgery"), "--max-epimorphisms", "2",
                     "--json", str(out))
    assert code == 1 and "BudgetExceeded" in text
    assert json.loads(out.read_text())["verdict"]["reason"] == "epimorphisms"


def test_search_escalate_reports_consistent(tmp_path):
    out = tmp_path / "e.json"
    code, _ = run("search", "--input", corpus_file("trefoil_0surgery"), "--max-order", "120",
                  "--budget-seconds", "3", "--escalate", "--dedupe-conjugacy", "true", "--json", str(out))
    doc = json.loads(out.read_text())
    assert code == 0 and doc["verdict"]["kind"] == "ConsistentUpTo"
    assert doc["verdict"]["max_order"] >= 1


def test_delta_and_epis():
    code, text = run("delta", "--input", corpus_file("trefoil"), "--group", "S3", "--alpha", "0")
    assert code == 0 and "t^8 - t^6 - t^2 + 1" in text
    code, text = run("delta", "--input", corpus_file("trefoil"))
    assert code == 0 and "t^2 - t + 1" in text
    code, text = run("epis", "--input", corpus_file("trefoil"), "--group", "S3")
    assert code == 0 and text.strip().endswith("6 epimorphisms onto S3")
    code, text = run("epis", "--input", corpus_file("trefoil"), "--group-gens", "1 0 2; 0 2 1")
    assert code == 0 and "epimorphisms onto custom" in text


def test_corpus_commands(tmp_path):
    code, text = run("corpus", "list")
    assert code == 0 and "pretzel535_0surgery" in text
    out = tmp_path / "c.json"
    code, text = run("corpus", "run", "trefoil", "figure8_0surgery", "--json", str(out))
    assert code == 0 and text.count("oracle ok") == 2
    doc = json.loads(out.read_text())
    assert set(doc["verdict"]["entries"]) == {"trefoil", "figure8_0surgery"}


def test_witness_command():
    code, text = run("witness", "--input", corpus_file("trefoil"), "--subgroup", "a", "--element", "b",
                     "--max-order", "6")
    assert code == 0 and text.startswith("witness in")
    code, text = run("witness", "--input", corpus_file("trefoil"), "--subgroup", "a", "--element", "a",
                     "--max-order", "6")
    assert code == 0 and text.startswith("no witness up to order 6")


def test_errors_exit_one(tmp_path, capsys):
    bad = tmp_path / "bad.pres"
    bad.write_text("gens: a\nrel: a^2\n")
    code, _ = run("delta", "--input", str(bad))
    assert code == 1 and "line 2, column 6" in capsys.readouterr().err
    assert run("delta", "--input", str(tmp_path / "missing.pres"))[0] == 1
    assert run("delta", "--input", corpus_file("trefoil"), "--group", "Q8")[0] == 1
    assert run("search", "--input", corpus_file("trefoil"), "--max-order", "121")[0] == 1
    assert run("nonsense")[0] == 1
    assert run("--help")[0] == 0


def test_seed_does_not_change_results(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("search", "--input", corpus_file("trefoil"), "--max-order", "6", "--seed", "1", "--json", str(a))
    run("search", "--input", corpus_file("trefoil"), "--max-order", "6", "--seed", "99", "--json", str(b))
    da, db = json.loads(a.read_text()), json.loads(b.read_text())
    assert strip_timing(da) == strip_timing(db)


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twistalex", "corpus", "list"], capture_output=True, text=True)
    assert proc.returncode == 0 and "trefoil" in proc.stdout
