import json
import subprocess
import sys

import pytest

THREE_LOOP = '{"vertices":["0"],"edges":[["0","0"],["0","0"],["0","0"]]}'
JORDAN = '{"vertices":["0"],"edges":[["0","0"]]}'
DOUBLED_A2 = '{"vertices":["0","1"],"edges":[["0","1"],["1","0"]]}'
G2 = '{"vertices":["0"],"edges":[["0","0"],["0","0"]]}'

INVOCATIONS = [
    ["describe", "--quiver", THREE_LOOP],
    ["build", "triple", "--quiver", JORDAN],
    ["build", "double", "--quiver", JORDAN],
    ["build", "frame", "--quiver", JORDAN, "--alpha", "2"],
    ["build", "companion", "--quiver", DOUBLED_A2],
    ["magic-gens", "--quiver", THREE_LOOP, "--d", '{"0":2}', "--v", "0"],
    ["magic-gens", "--quiver", THREE_LOOP, "--d", '{"0":2}', "--mu", "0:-1",
     "--window", "dd"],
    ["decompose", "--quiver", THREE_LOOP, "--d", '{"0":2}',
     "--chi", '{"0":["-2","2"]}'],
    ["sod", "framed", "--quiver", THREE_LOOP, "--d", '{"0":2}',
     "--mu", "0:-1", "--alpha", "1", "--gen-counts"],
    ["sod", "unframed", "--quiver", THREE_LOOP, "--d", '{"0":2}',
     "--w", "0", "--window=-3/2,3/2"],
    ["sod", "preprojective", "--quiver", G2, "--d", '{"0":2}',
     "--window=-1,1"],
    ["check", "good-weight", "--quiver", THREE_LOOP, "--d", '{"0":2}',
     "--delta", '{"0":"1/3"}'],
    ["check", "support", "--d", '{"0":2}', "--v", "1"],
    ["check", "structure", "--quiver", G2, "--d", '{"0":2}', "--v", "1"],
    ["knorrer", "--quiver", DOUBLED_A2, "--d", '{"0":1,"1":1}',
     "--partition", '[{"0":1,"1":0},{"0":0,"1":1}]'],
    ["verify", "--samples", "10"],
]


def run_cli(args):
    return subprocess.run([sys.executable, "-m", "qbps.cli"] + args,
                          capture_output=True)


@pytest.mark.parametrize("args", INVOCATIONS, ids=lambda a: " ".join(a[:2]))
def test_deterministic_output(args):
    first = run_cli(args)
    second = run_cli(args)
    assert first.returncode == 0, first.stderr.decode()
    assert first.stdout == second.stdout
    assert first.stdout


def test_json_outputs_reparse():
    for args in INVOCATIONS:
        if args[0] == "verify":
            continue
        out = run_cli(args).stdout.decode()
        payload = json.loads(out)
        assert isinstance(payload, dict)


def test_build_round_trip():
    out = json.loads(run_cli(["build", "triple", "--quiver", JORDAN]).stdout)
    quiver = out["quiver"]
    # the emitted quiver re-parses and describes identically
    again = run_cli(["describe", "--quiver", json.dumps(quiver)])
    assert again.returncode == 0
    body = json.loads(again.stdout)
    assert body["edge_count"] == 3
    assert body["assum11"] is True


def test_tsv_output():
    res = run_cli(["magic-gens", "--quiver", THREE_LOOP, "--d", '{"0":2}',
                   "--v", "0", "--tsv"])
    lines = res.stdout.decode().strip().split("\n")
    assert lines == ["-1\t1", "0\t0"]


def test_exit_code_validation():
    res = run_cli(["magic-gens", "--quiver", "not json {", "--d", '{"0":2}'])
    assert res.returncode == 2
    res = run_cli(["magic-gens", "--quiver", THREE_LOOP, "--d", '{"9":2}'])
    assert res.returncode == 2
    res = run_cli(["describe", "--quiver", '{"vertices":["∞"],"edges":[]}'])
    assert res.returncode == 2


def test_exit_code_precondition():
    res = run_cli(["sod", "framed", "--quiver", THREE_LOOP, "--d", '{"0":2}',
                   "--mu", "0", "--alpha", "1"])
    assert res.returncode == 3
    res = run_cli(["decompose", "--quiver", THREE_LOOP, "--d", '{"0":2}',
                   "--chi", '{"0":["2","0"]}'])
    assert res.returncode == 3


def test_quiver_from_file(tmp_path):
    path = tmp_path / "quiver.json"
    path.write_text(THREE_LOOP)
    res = run_cli(["describe", "--quiver", str(path)])
    assert res.returncode == 0
    assert json.loads(res.stdout)["very_symmetric_A"] == 3


def test_zonotope_subcommand():
    res = run_cli(["zonotope", "rinv", "--quiver", THREE_LOOP,
                   "--d", '{"0":2}', "--x", '{"0":["-5/2","5/2"]}'])
    assert res.returncode == 0
    assert json.loads(res.stdout) == {"r": "5/6"}
    res = run_cli(["zonotope", "contains", "--quiver", THREE_LOOP,
                   "--d", '{"0":2}', "--x", '{"0":["-3/2","3/2"]}'])
    assert json.loads(res.stdout) == {"contains": True}
    res = run_cli(["zonotope", "boundary", "--quiver", THREE_LOOP,
                   "--d", '{"0":2}', "--x", '{"0":["-2","2"]}'])
    assert res.returncode == 2  # outside: boundary test precondition fails
