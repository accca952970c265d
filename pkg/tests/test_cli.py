import json
import os

import pytest

import support
from support import CLI_CASES, golden_path, run_cli

REGEN = os.environ.get("REGEN_GOLDEN") == "1"


@pytest.mark.parametrize("name,argv,expected_exit",
                         CLI_CASES, ids=[case[0] for case in CLI_CASES])
def test_cli_golden(name, argv, expected_exit):
    code_first, out_first = run_cli(argv)
    code_second, out_second = run_cli(argv)
    assert code_first == code_second == expected_exit
    assert out_first == out_second  # byte-identical across runs
    path = golden_path(name, argv)
    if REGEN:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(out_first)
    expected = path.read_bytes()
    assert out_first == expected


def test_json_outputs_round_trip():
    for name, argv, _ in CLI_CASES:
        path = golden_path(name, argv)
        if path.suffix != ".json":
            continue
        text = path.read_text(encoding="utf-8")
        parsed = json.loads(text)
        assert json.dumps(parsed, sort_keys=True) + "\n" == text


def test_json_payload_shapes():
    shapes = {
        "tbmax_basic": {"tb_max": int},
        "count_vertical_max": {"count": int},
        "classify_pair_true": {"isotopic": bool},
        "classify_single_nonvertical": {"class": dict},
        "dividing_profile_slope": {"slope": str, "count": int},
        "destabilize_mixed": {"parents": list},
        "range_json": {"n": int, "direction": list, "tb_max": int, "rows": list},
        "stable_merge_adjacent": {"merge": list},
        "transverse_simple": {"transversally_simple": bool},
        "transverse_sl": {"count": int},
        "oracle_vertical": {"n": int, "direction": list, "depth": int,
                            "ok": bool, "rows": list, "mismatches": list},
        "error_not_primitive": {"error": str},
    }
    by_name = {name: argv for name, argv, _ in CLI_CASES}
    for name, expected in shapes.items():
        payload = json.loads(golden_path(name, by_name[name]).read_text(encoding="utf-8"))
        assert set(payload) == set(expected)
        for key, kind in expected.items():
            assert isinstance(payload[key], kind), (name, key)


def test_pinned_payload_values():
    by_name = {name: argv for name, argv, _ in CLI_CASES}

    def load(name):
        return json.loads(golden_path(name, by_name[name]).read_text(encoding="utf-8"))

    assert load("tbmax_basic") == {"tb_max": -6}
    assert load("count_vertical_max") == {"count": 2}
    assert load("classify_pair_true") == {"isotopic": True}
    assert load("classify_pair_false") == {"isotopic": False}
    assert load("dividing_profile_infinite") == {"count": 4, "slope": "inf"}
    assert load("dividing_profile_slope") == {"count": 2, "slope": "-2/3"}
    assert load("stable_merge_adjacent") == {"merge": [1, 0]}
    assert load("stable_merge_opposite") == {"merge": [1, 1]}
    assert load("transverse_simple") == {"transversally_simple": True}
    assert load("transverse_not_simple") == {"transversally_simple": False}
    assert load("transverse_sl") == {"count": 2}
    assert load("error_not_primitive") == {"error": "not primitive"}
    assert load("oracle_vertical")["ok"] is True


def test_tsv_format():
    text = golden_path("range_tsv", ["--format", "tsv"]).read_text(encoding="utf-8")
    lines = text.splitlines()
    assert lines[0] == "tb\tr\tcount"
    assert lines[1:] == ["0\t0\t2", "-1\t-1\t1", "-1\t1\t1",
                         "-2\t-2\t1", "-2\t0\t1", "-2\t2\t1"]
    assert text.endswith("\n")


def test_svg_format():
    text = golden_path("range_svg", ["--format", "svg"]).read_text(encoding="utf-8")
    assert text.startswith('<?xml version="1.0" encoding="UTF-8"?>')
    assert 'version="1.1"' in text
    assert text.rstrip().endswith("</svg>")


def test_out_writes_identical_bytes(tmp_path):
    target = tmp_path / "range.svg"
    argv = ["range", "--n", "1", "--direction", "0,0,1",
            "--tb-min", "-3", "--format", "svg"]
    code, out = run_cli(argv, extra_args=["--out", str(target)])
    assert code == 0
    assert out == b""
    assert target.read_bytes() == golden_path("range_svg", argv).read_bytes()


def test_usage_errors_exit_two():
    code, out = run_cli(["no-such-command"])
    assert code == 2
    code, out = run_cli(["tbmax", "--direction", "1,0,0"])  # missing --n
    assert code == 2
    code, out = run_cli([])
    assert code == 2


def test_domain_errors_exit_one():
    code, out = run_cli(["count", "--n", "0", "--direction", "1,0,0",
                         "--tb", "0", "--r", "0"])
    assert code == 1
    assert json.loads(out)["error"]
    code, out = run_cli(["classify", "--n", "1", "--direction", "1,0,0",
                         "--pres", "1:0"])  # vertical needs base:p:m
    assert code == 1
    assert "base:p:m" in json.loads(out)["error"]
    code, out = run_cli(["stabilize", "--n", "1", "--direction", "1,0,0",
                         "--pres", "0:0:0", "--sign", "x"])
    assert code == 1


def test_help_exits_zero():
    code, _ = run_cli(["--help"])
    assert code == 0
