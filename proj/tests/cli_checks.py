"""End-to-end checks of the yukawa executable: exit codes, determinism and schemas."""

import argparse
import filecmp
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def run(binary, *args):
    return subprocess.run([binary, *args], capture_output=True, text=True)


def verify(binary, scenario, out, *extra):
    return run(binary, "verify", "--scenario", str(scenario), "--out", str(out), *extra)


def check_exit_codes(binary, root, tmp):
    scen = root / "scenarios"
    cases = {
        "constant_all.json": 0,
        "exponential_n1.json": 0,
        "growth_outside_hypothesis.json": 0,
        "harmonic_bmo.json": 0,
    }
    for name, code in cases.items():
        res = verify(binary, scen / name, tmp / name)
        assert res.returncode == code, f"{name}: exit {res.returncode}\n{res.stderr}"
    res = verify(binary, scen / "growth_outside_hypothesis.json", tmp / "gate")
    assert "warning: radial_growth inapplicable: lambda >= 4n/p" in res.stderr, res.stderr

    bad = tmp / "bad.json"
    bad.write_text('{\n  "solution": {"catalogue": "exp_n1"},\n  "checks": ["residual", "no_such_check"]\n}\n')
    res = verify(binary, bad, tmp / "bad")
    assert res.returncode == 2, res.returncode
    assert "line 3" in res.stderr and "/checks/1" in res.stderr, res.stderr
    meta = json.loads((tmp / "bad" / "bundle.json").read_text())
    assert meta["status"] == "failed" and meta["errors"], meta

    empty = tmp / "empty.json"
    empty.write_text('{"solution": {"catalogue": "exp_n1"}, "checks": []}')
    res = verify(binary, empty, tmp / "empty")
    assert res.returncode == 0, res.stderr
    assert json.loads((tmp / "empty" / "reports.json").read_text()) == []
    meta = json.loads((tmp / "empty" / "bundle.json").read_text())
    assert meta["checks"] == [] and meta["scenario_hash"], meta

    res = run(binary, "means", "--solution", "planar_z", "--p", "2", "--p", "4", "--r-grid", "0:0.9:10", "--out", str(tmp / "means"))
    assert res.returncode == 0, res.stderr
    for p in ("2", "4"):
        lines = (tmp / "means" / f"means_value_p{p}.csv").read_text().splitlines()
        assert lines[0] == "r,M_p"
        for row in lines[1:]:
            r, m = map(float, row.split(","))
            assert abs(r - m) <= 1e-15, row

    res = run(binary, "sweep-lambda", "--solution", "exp_n1", "--p", "2", "--lambda-grid", "0:4:5", "--out", str(tmp / "sweep"))
    assert res.returncode == 0, res.stderr
    lines = (tmp / "sweep" / "sweep_lambda.csv").read_text().splitlines()
    assert lines[0] == "lambda,inside_hypothesis,status,min_margin"
    assert lines[-1].startswith("4,false,outside theorem hypothesis"), lines

    res = verify(binary, scen / "exponential_n1.json", tmp / "csv", "--format", "csv")
    assert res.returncode == 0
    head = (tmp / "csv" / "reports.csv").read_text().splitlines()[0]
    assert head == "check_id,verdict,row,label,params,relation,lhs,rhs,margin,allowance", head


def check_determinism(binary, root, tmp):
    scen = root / "scenarios" / "default_suite_n2.json"
    runs = []
    for threads in ("1", "4"):
        out = tmp / f"threads{threads}"
        res = verify(binary, scen, out, "--parallel", threads)
        assert res.returncode == 0, res.stderr
        runs.append(out)
    cmp = filecmp.dircmp(runs[0], runs[1])
    assert not cmp.left_only and not cmp.right_only, (cmp.left_only, cmp.right_only)
    for name in cmp.common_files:
        a = (runs[0] / name).read_bytes()
        b = (runs[1] / name).read_bytes()
        assert a == b, f"{name} differs between thread counts"
        assert b"\r\n" not in a
    res = verify(binary, scen, tmp / "seeded", "--seed", "12")
    other = (tmp / "seeded" / "reports.json").read_bytes()
    assert other != (runs[0] / "reports.json").read_bytes(), "seed override has no effect"


def check_schemas(binary, root, tmp):
    load = lambda p: json.loads(pathlib.Path(p).read_text())
    schemas = {name: load(root / "schemas" / f"{name}.schema.json") for name in ("scenario", "report", "bundle")}
    for s in schemas.values():
        jsonschema.Draft202012Validator.check_schema(s)
    validator = lambda name: jsonschema.Draft202012Validator(schemas[name])
    for scen in sorted((root / "scenarios").glob("*.json")):
        validator("scenario").validate(load(scen))
        out = tmp / scen.stem
        verify(binary, scen, out)
        validator("report").validate(load(out / "reports.json"))
        validator("bundle").validate(load(out / "bundle.json"))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("check", choices=["exit_codes", "determinism", "schemas"])
    parser.add_argument("--binary", required=True)
    parser.add_argument("--root", required=True)
    args = parser.parse_args()
    fn = {"exit_codes": check_exit_codes, "determinism": check_determinism, "schemas": check_schemas}[args.check]
    with tempfile.TemporaryDirectory() as tmp:
        fn(args.binary, pathlib.Path(args.root), pathlib.Path(tmp))
    print(f"{args.check}: ok")


if __name__ == "__main__":
    sys.exit(main())
