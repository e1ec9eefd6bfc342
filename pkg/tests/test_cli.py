import io
import json

import pytest

from zinbiel_lab.__main__ import main, parse_pattern
from zinbiel_lab.catalog import build_family
from zinbiel_lab.codec import dump_algebra
from zinbiel_lab.config import Config
from zinbiel_lab.errors import InputError
from zinbiel_lab.superalg import SuperAlgebra


@pytest.fixture
def write_algebra(tmp_path):
    def write(algebra, name="algebra.json"):
        path = tmp_path / name
        path.write_text(dump_algebra(algebra), encoding="utf-8")
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_no_command_prints_help(capsys):
    code, out = run(capsys)
    assert code == 0
    assert "zinbiel-lab" in out


def test_catalog_build_emits_canonical_json(capsys):
    code, out = run(capsys, "catalog", "build", "z35")
    assert code == 0
    assert out.strip() == dump_algebra(build_family("z35"))


def test_catalog_build_reports_constraint_violation(capsys):
    code, data = run_json(capsys, "catalog", "build", "NullFiliformSuper", "--n", "3", "--m", "5")
    assert code == 2
    assert data["error"] == "ConstraintViolation"
    assert "m = n or m = n+1" in data["message"]


def test_catalog_list(capsys):
    code, data = run_json(capsys, "catalog", "list")
    assert code == 0
    assert [family["family"] for family in data][:3] == ["NullFiliformAlg", "NgFiliformAlg", "NullFiliformSuper"]


def test_catalog_list_pretty(capsys):
    code, out = run(capsys, "catalog", "list", "--pretty")
    assert code == 0
    assert "Families" in out and "z39" in out


def test_check_holds(capsys, write_algebra):
    code, data = run_json(capsys, "check", write_algebra(build_family("z39")))
    assert (code, data) == (0, {"zinbiel": True})


def test_check_fails_with_witness(capsys, write_algebra):
    idempotent = SuperAlgebra.from_rules(1, 0, {("e1", "e1"): {"e1": 1}})
    code, data = run_json(capsys, "check", write_algebra(idempotent))
    assert code == 1
    assert data["triple"] == ["e1", "e1", "e1"]


def test_check_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(dump_algebra(build_family("z33"))))
    code, data = run_json(capsys, "check")
    assert (code, data) == (0, {"zinbiel": True})


@pytest.mark.parametrize(
    "text",
    [
        '{"dim_even":1,"dim_odd":0,"products":[{"left":"e1","right":"e1","result":{"e1":"1/0"}}]}',
        "{not json",
        '{"dim_even":1}',
    ],
)
def test_malformed_input_exits_2(capsys, tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text, encoding="utf-8")
    code, data = run_json(capsys, "check", str(path))
    assert code == 2
    assert data["error"] == "InputError"


def test_missing_file_exits_2(capsys, tmp_path):
    code, data = run_json(capsys, "series", str(tmp_path / "absent.json"))
    assert code == 2
    assert "Cannot read" in data["message"]


def test_series_of_null_filiform_super(capsys, write_algebra):
    code, data = run_json(capsys, "series", write_algebra(build_family("NullFiliformSuper", dim=7)))
    assert code == 0
    assert data["full"] == [7, 6, 5, 4, 3, 2, 1, 0]
    assert data["nilpotency_index"] == 8
    assert data["null_filiform"] is True


def test_series_of_non_nilpotent_algebra(capsys, write_algebra):
    idempotent = SuperAlgebra.from_rules(1, 0, {("e1", "e1"): {"e1": 1}})
    code, data = run_json(capsys, "series", write_algebra(idempotent))
    assert code == 1
    assert data["nilpotency_index"] == "not_nilpotent"


def test_charseq_at_element(capsys, write_algebra):
    code, data = run_json(capsys, "charseq", write_algebra(build_family("NF1", n=6, m=4)), "--element", "e1")
    assert code == 0
    assert data == {"c0": [5, 1], "c1": [4], "witness": "e1"}


def test_seeded_runs_are_byte_identical(capsys, write_algebra):
    path = write_algebra(build_family("NF2", n=6, m=4, alpha="3/7"))
    first = run(capsys, "charseq", path, "--seed", "5", "--samples", "20")
    second = run(capsys, "charseq", path, "--seed", "5", "--samples", "20")
    assert first == second
    assert json.loads(first[1])["filiform"]["verdict"] == "yes"


def test_gr_reports_violation(capsys, write_algebra):
    code, data = run_json(capsys, "gr", write_algebra(build_family("z33")))
    assert code == 1
    assert data["natural_grading"]["verdict"] == "no"
    assert data["violation"]["layers"] == [1, 1]


def test_gr_of_naturally_graded_algebra(capsys, write_algebra):
    code, data = run_json(capsys, "gr", write_algebra(build_family("z38")))
    assert code == 0
    assert data["layers"] == [[1, 1], [0, 1]]
    assert data["natural_grading"]["verdict"] == "yes"


def test_structure(capsys, write_algebra):
    code, data = run_json(capsys, "structure", write_algebra(build_family("z39")))
    assert code == 0
    assert data["type_n1"] is True
    assert data["right_supercommutative"] is True


def test_structure_error_is_a_failed_property(capsys, write_algebra):
    idempotent = SuperAlgebra.from_rules(1, 0, {("e1", "e1"): {"e1": 1}})
    code, data = run_json(capsys, "structure", write_algebra(idempotent))
    assert code == 1
    assert "error" in data


def test_report_pretty(capsys, write_algebra):
    code, out = run(capsys, "report", write_algebra(build_family("z35")), "--pretty")
    assert code == 0
    assert "Invariants" in out


def test_iso_verify_without_map_names_an_invariant(capsys, write_algebra):
    first, second = write_algebra(build_family("z33"), "a.json"), write_algebra(build_family("z34"), "b.json")
    code, data = run_json(capsys, "iso-verify", first, second)
    assert code == 1
    assert data == {"verdict": "distinguishable", "invariant": "left_annihilator", "values": [[1, 1], [1, 0]]}


def test_iso_verify_with_map(capsys, tmp_path, write_algebra):
    source = write_algebra(build_family("z33"), "a.json")
    target = write_algebra(SuperAlgebra.from_rules(1, 2, {("f1", "f1"): {"e1": "1/4"}}), "b.json")
    graded_map = tmp_path / "map.json"
    graded_map.write_text(json.dumps({"even": [["1"]], "odd": [["2", "0"], ["0", "1"]]}), encoding="utf-8")
    code, data = run_json(capsys, "iso-verify", source, target, str(graded_map))
    assert (code, data) == (0, {"isomorphism": True})


def test_transport_check(capsys, write_algebra):
    code, data = run_json(capsys, "transport-check", write_algebra(build_family("z37", alpha="1/2")), "--samples", "2")
    assert code == 0
    assert data == {"invariant_under_transport": True, "samples": 2}


def test_reductions(capsys):
    code, data = run_json(capsys, "reductions", "--samples", "1")
    assert code == 0
    assert all(entry["ok"] for entry in data)


def test_classify_system_compare(capsys):
    code, data = run_json(capsys, "classify-system", "--compare")
    assert code == 0
    assert data["reproducing"] == ["standard"]
    assert data["comparison"]["standard"]["matched"] == 40


def test_classify_system_printed_sign_fails_comparison(capsys):
    code, data = run_json(capsys, "classify-system", "--sign", "printed", "--compare")
    assert code == 1
    assert data["sign"] == "printed"


def test_classify_system_compare_needs_1_2(capsys):
    code, data = run_json(capsys, "classify-system", "--pattern", "2,1", "--compare")
    assert code == 2
    assert data["error"] == "InputError"


def test_classify_verify_single_family(capsys):
    code, data = run_json(capsys, "classify-verify", "--family", "g", "--samples", "2")
    assert code == 0
    assert [entry["family"] for entry in data["families"]] == ["g"]
    assert "cross_validation" not in data


def test_parse_pattern():
    assert parse_pattern("1,2") == (1, 2)
    for text in ("1", "a,b", "0,2"):
        with pytest.raises(InputError):
            parse_pattern(text)


def test_config_set_and_use(capsys, isolated_config):
    code, out = run(capsys, "config", "--seed", "7", "--indent", "2")
    assert code == 0
    assert "Configuration saved." in out
    assert isolated_config.exists()
    config = Config.load()
    assert (config.seed, config.json_indent) == (7, 2)

    code, out = run(capsys, "catalog", "build", "z33")
    assert out.startswith('{\n  "dim_even": 1')


def test_config_show(capsys):
    code, out = run(capsys, "config")
    assert code == 0
    assert "Configuration" in out and "Seed" in out
