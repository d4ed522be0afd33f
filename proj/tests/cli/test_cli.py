import json
import os
import pathlib
import subprocess

import jsonschema
import pytest
from referencing import Registry, Resource

CLI = os.environ.get("MATSPLIT_CLI", "matsplit")
SCHEMAS = pathlib.Path(os.environ.get("MATSPLIT_SCHEMAS", pathlib.Path(__file__).resolve().parents[2] / "schemas"))


def _registry():
    resources = []
    for path in SCHEMAS.glob("*.json"):
        schema = json.loads(path.read_text())
        resource = Resource.from_contents(schema)
        resources.append((schema["$id"], resource))
        resources.append((path.name, resource))
    return Registry().with_resources(resources)


REGISTRY = _registry()


def validate(doc, name):
    schema = json.loads((SCHEMAS / name).read_text())
    jsonschema.Draft202012Validator(schema, registry=REGISTRY).validate(doc)


def run(*args, stdin=None, env=None, expect=0):
    full_env = dict(os.environ)
    full_env.pop("MATSPLIT_SEED", None)
    if env:
        full_env.update(env)
    proc = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, env=full_env, timeout=300)
    assert proc.returncode == expect, f"exit {proc.returncode}, stderr: {proc.stderr}"
    return proc


def run_json(*args, **kw):
    return json.loads(run(*args, **kw).stdout)


def quaternion_table(a, b):
    """Quaternion algebra on 1, i, j, k with i^2 = a, j^2 = b, ij = -ji = k."""
    g = [[["0"] * 4 for _ in range(4)] for _ in range(4)]

    def put(x, y, z, c):
        g[x][y][z] = str(c)

    for x in range(4):
        put(0, x, x, 1)
        put(x, 0, x, 1)
    put(1, 1, 0, a)
    put(2, 2, 0, b)
    put(3, 3, 0, -a * b)
    put(1, 2, 3, 1)
    put(2, 1, 3, -1)
    put(1, 3, 2, a)
    put(3, 1, 2, -a)
    put(2, 3, 1, -b)
    put(3, 2, 1, b)
    return {"field": {"type": "Q"}, "dim": 4, "gamma": g}


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    return tmp_path_factory.mktemp("cli")


def write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


def test_fixture_list_and_contents():
    names = run_json("fixture", "--list")
    validate(names, "fixture-list.json")
    assert "gaussian-lambda" in names
    for name in names:
        doc = run_json("fixture", name)
        if name in ("A2", "A2-dual"):
            validate(doc, "lattice.json")
        elif name == "d5-matrix":
            validate(doc, "matrix.json")
        else:
            validate(doc, "algebra.json")


def test_unknown_fixture_is_input_error():
    run("fixture", "no-such-fixture", expect=4)


@pytest.mark.parametrize("seed", range(1, 51))
def test_gen_split_verify_pipeline(seed):
    algebra = run("gen", "--n", "2", "--seed", str(seed)).stdout
    validate(json.loads(algebra), "algebra.json")
    result = run("split", stdin=algebra).stdout
    validate(json.loads(result), "split-result.json")
    report = run_json("verify", stdin=result)
    validate(report, "verify-report.json")
    assert report["valid"] and report["ideal_rank"] == 1


def test_split_fields_and_engines(workdir):
    for field in ("gauss", "eisenstein"):
        algebra = run("gen", "--n", "2", "--field", field, "--seed", "4").stdout
        result = run_json("split", stdin=algebra)
        validate(result, "split-result.json")
        assert result["stats"]["minimal_class_size"] >= 1
    three = write(workdir / "m3.json", run_json("gen", "--n", "3", "--seed", "2"))
    for extra, engine in (([], "ordered"), (["--engine", "box"], "box"), (["--engine", "box", "--dynamic-pruning"], "box-dynamic")):
        result = run_json("split", "--input", three, *extra)
        validate(result, "split-result.json")
        assert result["stats"]["engine"] == engine


def test_split_output_file_and_verify_with_algebra(workdir):
    algebra = write(workdir / "a.json", run_json("gen", "--n", "2", "--seed", "9"))
    out = workdir / "r.json"
    run("split", "-i", algebra, "--output", str(out))
    result = json.loads(out.read_text())
    del result["algebra"]
    bare = write(workdir / "bare.json", result)
    report = run_json("verify", "--input", bare, "--algebra", algebra)
    assert report["valid"]


def test_verify_detects_tampering(workdir):
    result = run_json("split", stdin=run("gen", "--n", "2", "--seed", "5").stdout)
    result["witness"]["images"][0][0][0] = "12345"
    report = json.loads(run("verify", stdin=json.dumps(result), expect=1).stdout)
    validate(report, "verify-report.json")
    assert not report["valid"]


def test_seed_from_environment_is_deterministic():
    a = run("gen", "--n", "2", env={"MATSPLIT_SEED": "17"}).stdout
    b = run("gen", "--n", "2", "--seed", "17").stdout
    c = run("gen", "--n", "2", "--seed", "18").stdout
    assert a == b and a != c
    run("gen", "--n", "2", env={"MATSPLIT_SEED": "abc"}, expect=4)


def test_non_square_dimension_is_input_error():
    table = {"field": {"type": "Q"}, "dim": 2, "gamma": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]]}
    proc = run("split", stdin=json.dumps(table), expect=4)
    assert "matsplit:" in proc.stderr


def test_malformed_json_is_input_error():
    run("split", stdin="{not json", expect=4)
    run("split", "--input", "/nonexistent/file.json", expect=4)


def test_hamilton_quaternions_violate_promise():
    proc = run("split", stdin=json.dumps(quaternion_table(-1, -1)), expect=2)
    assert "promise" in proc.stderr


def test_split_quaternions_succeed():
    result = run_json("split", stdin=json.dumps(quaternion_table(1, -1)))
    validate(result, "split-result.json")
    assert run_json("verify", stdin=json.dumps(result))["valid"]


def test_budgets_and_precision_map_to_exit_3(workdir):
    algebra = run("gen", "--n", "3", "--seed", "3").stdout
    run("split", "--node-budget", "1", stdin=algebra, expect=3)


def test_bad_arguments_are_input_errors():
    algebra = run("gen", "--n", "2").stdout
    run("split", "--engine", "bogus", stdin=algebra, expect=4)
    run("split", "--precision-bits", "16", stdin=algebra, expect=4)
    run("gen", "--n", "2", "--field", "bogus", expect=4)


def test_order():
    doc = run_json("order", stdin=run("gen", "--n", "2", "--seed", "3").stdout)
    validate(doc, "order.json")
    assert doc["discriminant"] in ("1", "-1")
    gauss = run_json("order", stdin=json.dumps(run_json("fixture", "eisenstein-M2")))
    validate(gauss, "order.json")
    assert gauss["coordinates"] == "restricted"


def test_lll_and_enumerate(workdir):
    a2 = json.dumps(run_json("fixture", "A2"))
    doc = run_json("lll", stdin=a2)
    validate(doc, "lll.json")
    assert doc["lll_reduced"]
    skew = write(workdir / "skew.json", {"dim": 2, "basis": [["201", "1"], ["200", "1"]]})
    doc = run_json("lll", "-i", skew)
    validate(doc, "lll.json")
    assert doc["orthogonality_defect"]["reduced"] < doc["orthogonality_defect"]["input"]
    doc = run_json("enumerate", "--bound", "1.1", stdin=a2)
    validate(doc, "enumerate.json")
    assert doc["count"] == 3
    run("enumerate", stdin=a2, expect=4)


def test_lattice_rejects_non_positive_gram(workdir):
    bad = write(workdir / "bad.json", {"dim": 2, "gram": [["1", "2"], ["2", "1"]]})
    run("lll", "-i", bad, expect=4)


def test_tensor_experiment_pair():
    doc = run_json("tensor-experiment", "--left", "A2", "--right", "A2-dual")
    validate(doc, "tensor-pair.json")
    assert doc["lambda1"]["norm2"] == "4/3"
    rank2 = [r for r in doc["min_by_rank"] if r["rank"] == 2][0]
    assert rank2["norm2"] == "2"
    assert doc["floor_violations"] == []


def test_tensor_experiment_random():
    doc = run_json("tensor-experiment", "--random", "10", "--rankmax", "3", "--bound-factor", "1.5")
    validate(doc, "tensor-random.json")
    assert doc["floor_violations"] == 0 and doc["lambda1_not_rank_one"] == 0
    assert len(doc["results"]) == 10


def test_constants():
    doc = run_json("constants", "--cm", "4", "--minfloor", "8", "--kappa", "11", "--gammah", "7")
    validate(doc, "constants.json")
    assert doc["c_m"]["exact"] == "648"
    assert doc["min_rank_floor"]["argmin"] == 2 and doc["min_rank_floor"]["ratio"]["exact"] == "3/2"
    by_d = {f["d"]: f for f in doc["fields"]}
    assert by_d[11]["kappa"]["square"] == "9/11"
    assert by_d[7]["gamma_h_kappa_upper"]["square"] == "7/3"
    validate(run_json("constants"), "constants.json")
    run("constants", "--kappa", "4", expect=4)


def test_rank():
    doc = run_json("rank", stdin=json.dumps(run_json("fixture", "d5-matrix")))
    validate(doc, "rank.json")
    assert doc["rank"] == 1 and doc["det"] == {"a": "0", "b": "0"}


def test_human_output():
    proc = run("--human", "constants", "--cm", "4")
    assert "648" in proc.stdout
    with pytest.raises(json.JSONDecodeError):
        json.loads(proc.stdout)
    algebra = run("gen", "--n", "2").stdout
    assert "rank_one_element" in run("--human", "split", stdin=algebra).stdout


def test_help_and_unknown_subcommand():
    assert "split" in run("--help").stdout
    proc = subprocess.run([CLI, "frobnicate"], capture_output=True, text=True)
    assert proc.returncode != 0
