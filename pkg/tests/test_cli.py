"""CLI behaviour: formats, determinism, exit codes, rendering."""

import io
import json
import sys
import xml.dom.minidom

import pytest

from tilebalance.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_runs(capsys):
    code, out, _ = run_cli(["list"], capsys)
    assert code == 0
    assert "square" in out and "pentagon-type-5" in out


def test_stats_human_values(capsys):
    code, out, _ = run_cli(["stats", "pentagon-type-5"], capsys)
    assert code == 0
    assert "v            = 3/2" in out
    assert "avg_valence  = 10/3" in out


def test_stats_json_round_trips(capsys):
    code, out, _ = run_cli(["stats", "square", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["v"] == "1" and doc["t_4"] == "1" and doc["edge_to_edge"] is True


def test_patch_reference_example(capsys):
    code, out, _ = run_cli(
        ["patch", "square", "--radius", "1.2", "--center", "0.5,0.5",
         "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert (doc["v"], doc["e"], doc["t"], doc["euler"]) == (16, 24, 9, 1)
    assert (doc["f1"], doc["f2"], doc["f3"]) == (1, 8, 0)


def test_radius_unit_suffix(capsys):
    code1, out1, _ = run_cli(["patch", "square", "--radius", "2U",
                              "--format", "json"], capsys)
    code2, out2, _ = run_cli(["patch", "square", "--radius", "1.4142135624",
                              "--format", "json"], capsys)
    assert code1 == code2 == 0
    a, b = json.loads(out1), json.loads(out2)
    assert (a["v"], a["e"], a["t"]) == (b["v"], b["e"], b["t"])


def test_byte_identical_reports(capsys):
    for argv in (["stats", "pentagon-type-13", "--format", "csv"],
                 ["list", "--format", "json"],
                 ["converge", "square", "--radii", "2U:4U:1U", "--format", "csv"],
                 ["verify", "pentagon-type-4"]):
        _, out1, _ = run_cli(argv, capsys)
        _, out2, _ = run_cli(argv, capsys)
        assert out1 == out2


def test_csv_uses_crlf(capsys):
    code, out, _ = run_cli(["list", "--format", "csv"], capsys)
    assert code == 0
    assert "\r\n" in out
    assert out.splitlines()[0] == "name,label,edge_to_edge,tiles"


def test_converge_ordered_by_radius(capsys):
    code, out, _ = run_cli(
        ["converge", "square", "--radii", "2U:6U:2U", "--format", "json"], capsys)
    assert code == 0
    rows = json.loads(out)
    radii = [r["radius"] for r in rows if r["radius"] != "limit"]
    assert radii == sorted(radii)
    assert rows[-1]["radius"] == "limit"
    assert rows[-1]["v_over_t"] == "1"


def test_verify_exit_zero_on_catalog(capsys):
    code, out, _ = run_cli(["verify", "pentagon-type-11"], capsys)
    assert code == 0
    assert "FAIL" not in out


def test_unknown_name_is_usage_error(capsys):
    code, _, err = run_cli(["stats", "does-not-exist"], capsys)
    assert code == 2
    assert "does-not-exist" in err


def test_bad_radius_is_usage_error(capsys):
    code, _, err = run_cli(["patch", "square", "--radius", "nope"], capsys)
    assert code == 2


def test_missing_subcommand_is_usage_error(capsys):
    assert run_cli([], capsys)[0] == 2


def test_render_svg_with_patch_classes(tmp_path, capsys):
    out_file = tmp_path / "sq.svg"
    code, _, _ = run_cli(["render", "square", "--radius", "1.2",
                          "--center", "0.5,0.5", "-o", str(out_file)], capsys)
    assert code == 0
    text = out_file.read_text()
    xml.dom.minidom.parseString(text)
    assert 'version="1.1"' in text
    assert 'class="f1"' in text and 'class="f2"' in text
    assert text.count("Z") >= 9


def test_render_without_radius(tmp_path, capsys):
    out_file = tmp_path / "plain.svg"
    code, _, _ = run_cli(["render", "pentagon-type-5", "-o", str(out_file)], capsys)
    assert code == 0
    text = out_file.read_text()
    xml.dom.minidom.parseString(text)
    assert 'class="f1"' not in text


def test_check_valid_and_invalid(tmp_path, capsys):
    from tilebalance.catalog import load_template, serialize_template, template_to_dict

    good = tmp_path / "good.json"
    good.write_text(serialize_template(load_template("pentagon-type-5")))
    code, out, _ = run_cli(["check", str(good)], capsys)
    assert code == 0 and "valid        = true" in out

    data = template_to_dict(load_template("square"))
    data["lattice"] = [[1.0, 0.0], [2.0, 0.0]]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out, _ = run_cli(["check", str(bad)], capsys)
    assert code == 1 and "invalid" in out

    code, _, err = run_cli(["check", str(tmp_path / "absent.json")], capsys)
    assert code == 2


def test_converge_figure(tmp_path, capsys):
    fig = tmp_path / "conv.png"
    code, _, _ = run_cli(["converge", "square", "--radii", "2U:4U:1U",
                          "--figure", str(fig)], capsys)
    assert code == 0
    assert fig.stat().st_size > 0
