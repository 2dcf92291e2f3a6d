"""CLI verbs, spec parsing, report rendering, exit codes."""

import json

import pytest

from cutlab.cli import (
    EXIT_DISAGREEMENT,
    EXIT_EXPECTATION,
    EXIT_OK,
    EXIT_ORDER_CAP,
    EXIT_PARSE,
    main,
    parse_group_spec,
)
from cutlab.constructors import metacyclic
from cutlab.corpus import builtin_corpus
from cutlab.errors import InvalidParameters, ParseError


def spec_file(tmp_path, payload, name="group.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


# -- parse_group_spec ---------------------------------------------------------

def test_parse_metacyclic():
    spec = parse_group_spec('{"kind":"metacyclic","m":12,"n":2,"r":5}')
    assert spec == metacyclic(12, 2, 5)


def test_parse_trivial_cyclic():
    spec = parse_group_spec('{"kind":"cyclic","n":1}')
    assert spec.kind == "cyclic" and spec.n == 1


def test_parse_rejects_invalid_metacyclic_with_residue():
    with pytest.raises(InvalidParameters, match=r"7"):
        parse_group_spec('{"kind":"metacyclic","m":9,"n":2,"r":4}')


def test_parse_rejects_bad_json_with_position():
    with pytest.raises(ParseError) as err:
        parse_group_spec('{"kind": cyclic}')
    assert err.value.position is not None


def test_parse_rejects_unknown_kind():
    with pytest.raises(InvalidParameters):
        parse_group_spec('{"kind":"simple","n":60}')


def test_parse_nested_product():
    spec = parse_group_spec(
        '{"kind":"product","parts":[{"kind":"cyclic","n":2},'
        '{"kind":"dicyclic","n":2}]}'
    )
    assert spec.kind == "product" and len(spec.parts) == 2


def test_parse_render_roundtrip_on_corpus_descriptors():
    for entry in builtin_corpus():
        echoed = json.dumps(entry.spec.to_dict())
        assert parse_group_spec(echoed) == entry.spec


# -- analyze ------------------------------------------------------------------

def test_analyze_paper_positive(tmp_path, capsys):
    path = spec_file(tmp_path, {"kind": "metacyclic", "m": 12, "n": 2, "r": 5})
    assert main(["analyze", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "cut: true" in out
    assert "eppo: false" in out


def test_analyze_paper_negative_text(tmp_path, capsys):
    path = spec_file(tmp_path, {"kind": "metacyclic", "m": 9, "n": 9, "r": 4})
    assert main(["analyze", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "cut: false  witness: (b, j=2)" in out


def test_analyze_central_height_zero(tmp_path, capsys):
    path = spec_file(tmp_path, {"kind": "metacyclic", "m": 7, "n": 3, "r": 2})
    assert main(["analyze", path]) == EXIT_OK
    assert "central_height: 0" in capsys.readouterr().out


def test_analyze_trivial_group(tmp_path, capsys):
    path = spec_file(tmp_path, {"kind": "cyclic", "n": 1})
    assert main(["analyze", path, "--format", "json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["cut"] is True and doc["witnesses"] == []


def test_analyze_expectation_mismatch(tmp_path, capsys):
    path = spec_file(tmp_path, {"kind": "metacyclic", "m": 12, "n": 2, "r": 5})
    assert main(["analyze", path, "--expect", "not-cut"]) == EXIT_EXPECTATION
    capsys.readouterr()


def test_analyze_json_is_canonical(tmp_path, capsys):
    path = spec_file(tmp_path, {"kind": "heisenberg", "p": 3})
    assert main(["analyze", path, "--format", "json"]) == EXIT_OK
    first = json.loads(capsys.readouterr().out)
    assert main(["analyze", path, "--format", "json"]) == EXIT_OK
    second = json.loads(capsys.readouterr().out)
    first.pop("seconds")
    second.pop("seconds")
    assert first == second
    assert first["descriptor"] == {"kind": "heisenberg", "p": 3}


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert main(["analyze", str(path)]) == EXIT_PARSE
    capsys.readouterr()


def test_invalid_parameters_exit_code(tmp_path, capsys):
    path = spec_file(tmp_path, {"kind": "metacyclic", "m": 9, "n": 2, "r": 4})
    assert main(["analyze", path]) == EXIT_PARSE
    assert "7" in capsys.readouterr().err


def test_order_cap_exit_code(tmp_path, capsys):
    path = spec_file(tmp_path, {"kind": "cyclic", "n": 500})
    assert main(["analyze", path, "--max-order", "100"]) == EXIT_ORDER_CAP
    capsys.readouterr()


# -- verify -------------------------------------------------------------------

def test_verify_reports_agreement(tmp_path, capsys):
    path = spec_file(tmp_path, {"kind": "metacyclic", "m": 9, "n": 9, "r": 4})
    assert main(["verify", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "thm_nilpotent" in out and "agrees=true" in out


def test_verify_json(tmp_path, capsys):
    path = spec_file(tmp_path, {"kind": "dicyclic", "n": 2})
    assert main(["verify", path, "--format", "json"]) == EXIT_OK
    reports = json.loads(capsys.readouterr().out)
    names = {r["name"] for r in reports}
    assert "thm_nilpotent" in names and "cor_p6_products" in names


# -- construct ----------------------------------------------------------------

def test_construct_emit_table_roundtrip(tmp_path, capsys):
    path = spec_file(tmp_path, {"kind": "cyclic", "n": 6})
    assert main(["construct", path, "--emit-table"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["order"] == 6
    table_path = spec_file(
        tmp_path, {"kind": "table", "order": 6, "table": payload["table"]}, "t.json"
    )
    assert main(["analyze", table_path]) == EXIT_OK
    assert "cut: true" in capsys.readouterr().out


def test_construct_summary(tmp_path, capsys):
    path = spec_file(tmp_path, {"kind": "symmetric", "degree": 4})
    assert main(["construct", path]) == EXIT_OK
    assert "24" in capsys.readouterr().out


# -- corpus run ---------------------------------------------------------------

def test_corpus_run_filtered(tmp_path, capsys):
    code = main(["corpus", "run", "--filter", "paper-example", "--format", "json"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    payload = json.loads(out)
    ids = [e["id"] for e in payload["entries"]]
    assert ids == ["paper-cut-24", "paper-noncut-81"]
    assert payload["aggregate"]["disagreements"] == 0
    assert payload["aggregate"]["oracle_mismatches"] == 0


def test_corpus_run_text_format(capsys):
    code = main(["corpus", "run", "--filter", "paper-example"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "2 groups analyzed" in out
    assert "disagreements: 0" in out


def test_corpus_run_expectation_exit_code(monkeypatch, capsys):
    from cutlab import cli as cli_module
    from cutlab.corpus import CorpusEntry
    from cutlab.constructors import cyclic

    monkeypatch.setattr(
        cli_module,
        "builtin_corpus",
        lambda: [CorpusEntry("mislabeled", cyclic(5), frozenset({"cut-expected"}))],
    )
    assert main(["corpus", "run"]) == EXIT_EXPECTATION
    capsys.readouterr()


def test_corpus_run_order_cap_exit_code(monkeypatch, capsys):
    from cutlab import cli as cli_module
    from cutlab.corpus import CorpusEntry
    from cutlab.constructors import cyclic

    monkeypatch.setattr(
        cli_module,
        "builtin_corpus",
        lambda: [
            CorpusEntry("small", cyclic(3), frozenset({"cut-expected"})),
            CorpusEntry("big", cyclic(30), frozenset()),
        ],
    )
    assert main(["corpus", "run", "--max-order", "10"]) == EXIT_ORDER_CAP
    capsys.readouterr()


def test_corpus_run_output_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code = main(
        [
            "corpus", "run",
            "--filter", "paper-example",
            "--format", "json",
            "--output", str(out_path),
        ]
    )
    assert code == EXIT_OK
    assert "report written" in capsys.readouterr().out
    payload = json.loads(out_path.read_text())
    assert payload["aggregate"]["groups_analyzed"] == 2
