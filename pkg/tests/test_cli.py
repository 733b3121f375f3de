"""End-to-end tests for the restricted-lie command line."""

import json

import pytest

L2_FILE = "p=2\ndim=4\nbasis=x y z w\n[w,x]=y\n"
N5_FILE = "p=3\ndim=4\nbasis=x y z w\n[z,x]=y\n[z,y]=x\n[w,x]=x\n[w,z]=z\n"
L5_FILE = "p=7\ndim=4\nbasis=x y z w\n[w,x]=x\n[w,y]={xi}y\n"
L2_F3 = "p=3\ndim=4\nbasis=x y z w\n[w,x]=y\n"

pytestmark = pytest.mark.integration

# Parser and exit code tests


def test_help_exits_zero(run_cli):
    """Test --help is not an error."""
    assert run_cli("--help").exit_code == 0


def test_threads_help(run_cli, capsys):
    """Test the --threads help says runs are single-threaded."""
    assert run_cli("check", "--help").exit_code == 0
    assert "single-threaded" in "".join(capsys.readouterr().out.split())


@pytest.mark.parametrize("threads,code", [("4", 0), ("0", 2)])
def test_threads_accepted(run_cli, threads, code):
    """Test --threads is validated but does not change the result."""
    result = run_cli("suite", "groebner_a", "--threads", threads)
    assert result.exit_code == code


def test_unknown_command(run_cli):
    """Test argparse errors exit 2."""
    assert run_cli("frobnicate").exit_code == 2


def test_missing_source(run_cli):
    """Test check needs exactly one source."""
    result = run_cli("check")
    assert result.exit_code == 2
    assert "Give exactly one of FILE, --family or --row" in result.stderr


# check tests


def test_check_lie_algebra(run_cli, algebra_file):
    """Test a valid file passes."""
    result = run_cli("check", algebra_file(L2_FILE))
    assert result.exit_code == 0
    assert "Jacobi identity: holds" in result.stdout
    assert result.stdout.strip().endswith("check: pass")


def test_check_json_contract(run_cli, algebra_file):
    """Test the JSON report fields."""
    path = algebra_file(L2_FILE + "pmap w = y\n")
    result = run_cli("check", path, "--json")
    assert result.exit_code == 0
    report = result.json()
    assert report["command"] == "check"
    assert report["passed"] is True
    assert report["result"]["jacobi"] is True
    assert report["result"]["pmap"] is True
    assert len(report["result"]["profile"]) == 3
    assert len(report["inputsDigest"]) == 64
    assert report["findings"] == []


def test_inputs_digest_is_stable(run_cli, algebra_file):
    """Test equal inputs give equal digests."""
    path = algebra_file(L2_FILE)
    first = run_cli("check", path, "--json").json()["inputsDigest"]
    second = run_cli("check", path, "--json").json()["inputsDigest"]
    assert first == second


def test_check_jacobi_failure(run_cli, algebra_file):
    """Test a Jacobi violation exits 1 with a finding."""
    result = run_cli("check", algebra_file(N5_FILE), "--json")
    assert result.exit_code == 1
    report = result.json()
    assert report["passed"] is False
    assert report["findings"][0]["kind"] == "jacobi"
    assert report["findings"][0]["detail"] == "J(x,z,w) = 2*y"


def test_check_invalid_pmap(run_cli, algebra_file):
    """Test a map that is not a p-map exits 1."""
    result = run_cli("check", algebra_file(L2_F3 + "pmap x = x\n"))
    assert result.exit_code == 1
    assert "FAIL: p-map" in result.stdout


def test_check_debug_checks(run_cli, algebra_file):
    """Test order checks run when enabled from the environment."""
    path = algebra_file(L2_F3 + "pmap x = z\npmap y = y\n")
    result = run_cli("check", path, environ={"RESTRICTED_LIE_DEBUG_CHECKS": "1"})
    assert result.exit_code == 0


def test_check_parse_error(run_cli, algebra_file):
    """Test syntax errors exit 2 with their location."""
    result = run_cli("check", algebra_file(L2_FILE + "[w,y]=y $\n"))
    assert result.exit_code == 2
    assert "check: error: 5:9: Unexpected character" in result.stderr


def test_check_parse_error_json(run_cli, algebra_file):
    """Test errors become a JSON payload with --json."""
    result = run_cli("check", algebra_file("p=2\ndim=4\n"), "--json")
    payload = result.json()
    assert result.exit_code == 2
    assert payload["passed"] is False
    assert payload["error"]["exitCode"] == 2
    assert payload["error"]["type"] == "ParseError"


def test_check_missing_file(run_cli, tmp_path):
    """Test unreadable files are a usage error."""
    result = run_cli("check", str(tmp_path / "absent.lie"))
    assert result.exit_code == 2
    assert "Cannot read" in result.stderr


def test_check_row(run_cli):
    """Test a catalog row is checked with its p-map."""
    result = run_cli("check", "--row", "L2.10", "-p", "3", "--json")
    assert result.exit_code == 0
    assert result.json()["result"]["pmap"] is True


def test_check_unknown_row(run_cli):
    """Test unknown rows exit 2."""
    result = run_cli("check", "--row", "L2.99", "-p", "3")
    assert result.exit_code == 2
    assert "Unknown catalog row" in result.stderr


def test_check_broken_family(run_cli):
    """Test N5 needs --allow-broken outside characteristic 2."""
    assert run_cli("check", "--family", "N5", "-p", "3").exit_code == 2
    result = run_cli("check", "--family", "N5", "-p", "3", "--allow-broken")
    assert result.exit_code == 1


def test_check_family_needs_p(run_cli):
    """Test --family without -p is a usage error."""
    result = run_cli("check", "--family", "L2")
    assert result.exit_code == 2
    assert "needs -p" in result.stderr


def test_bad_parameter_syntax(run_cli):
    """Test --param must be NAME=VALUE."""
    result = run_cli("check", "--family", "L5", "-p", "5", "--param", "xi")
    assert result.exit_code == 2
    assert "expected NAME=VALUE" in result.stderr


# Settings tests


def test_invalid_environment(run_cli, algebra_file):
    """Test bad environment values exit 2."""
    result = run_cli(
        "check", algebra_file(L2_FILE), environ={"RESTRICTED_LIE_BUDGET": "many"}
    )
    assert result.exit_code == 2
    assert "Invalid environment setting" in result.stderr


def test_invalid_ladder_flag(run_cli, algebra_file):
    """Test a descending ladder is rejected."""
    result = run_cli("check", algebra_file(L2_FILE), "--ladder", "4,1")
    assert result.exit_code == 2


# pmaps tests


def test_pmaps_solve(run_cli):
    """Test the p-map family of L2 over F_2."""
    result = run_cli("pmaps", "--family", "L2", "-p", "2", "--json")
    assert result.exit_code == 0
    data = result.json()["result"]
    assert data["exists"] is True
    assert data["count"] == 256
    assert data["centerDim"] == 2


def test_pmaps_enumerate(run_cli):
    """Test enumeration lists every map."""
    result = run_cli("pmaps", "--family", "L2", "-p", "2", "--enumerate", "--json")
    assert result.exit_code == 0
    assert len(result.json()["result"]["pmaps"]) == 256


def test_pmaps_none(run_cli):
    """Test algebras without p-maps are reported, not failed."""
    result = run_cli("pmaps", "--family", "L7", "-p", "3")
    assert result.exit_code == 0
    assert "count: 0" in result.stdout


def test_pmaps_enumeration_guardrail(run_cli):
    """Test oversized enumerations exit 1."""
    result = run_cli("pmaps", "--family", "L1", "-p", "5", "--enumerate")
    assert result.exit_code == 1
    assert "exceeds the bound 2^20" in result.stderr


# catalog and orbits tests


def test_catalog_count(run_cli):
    """Test the class count at p = 5 with its note."""
    result = run_cli("catalog", "-p", "5", "--count", "--json")
    assert result.exit_code == 0
    report = result.json()
    assert report["result"]["total"] == 76
    assert report["result"]["individual"] == 51
    assert report["findings"][0]["severity"] == "note"
    assert report["passed"] is True


def test_catalog_rows(run_cli):
    """Test the rows valid at p = 2."""
    result = run_cli("catalog", "-p", "2", "--json")
    ids = [row["id"] for row in result.json()["result"]["rows"]]
    assert "N2.2" in ids
    assert "gl2.1" not in ids


def test_catalog_needs_p(run_cli):
    """Test catalog without -p exits 2."""
    assert run_cli("catalog").exit_code == 2


def test_catalog_rejects_composite_p(run_cli):
    """Test -p must be prime."""
    result = run_cli("catalog", "-p", "4")
    assert result.exit_code == 2
    assert "must be prime" in result.stderr


def test_orbits(run_cli):
    """Test the S3-orbit count at p = 7."""
    result = run_cli("orbits", "-p", "7", "--json")
    assert result.exit_code == 0
    data = result.json()["result"]
    assert data["count"] == 10
    assert data["formula"] == 10


# conjugate tests


def test_conjugate_lie_algebras(run_cli, algebra_file):
    """Test L5(2) and L5(4) are isomorphic over F_7."""
    first = algebra_file(L5_FILE.format(xi=2), "first.lie")
    second = algebra_file(L5_FILE.format(xi=4), "second.lie")
    result = run_cli("conjugate", first, second, "--json")
    assert result.exit_code == 0
    data = result.json()["result"]
    assert data["isomorphic"] is True
    assert data["degree"] == 1
    assert len(data["witness"]) == 4


def test_conjugate_restricted(run_cli, algebra_file):
    """Test the zero map and w -> y on L2 are conjugate."""
    first = algebra_file(L2_FILE + "pmap w = 0\n", "first.lie")
    second = algebra_file(L2_FILE + "pmap w = y\n", "second.lie")
    result = run_cli("conjugate", first, second)
    assert result.exit_code == 0
    assert "isomorphic over F_2" in result.stdout


def test_conjugate_not_found(run_cli, algebra_file):
    """Test no witness over F_3 exits 1."""
    first = algebra_file(L2_F3 + "pmap y = y\n", "first.lie")
    second = algebra_file(L2_F3 + "pmap y = 2y\n", "second.lie")
    result = run_cli("conjugate", first, second, "--ladder", "1", "--json")
    assert result.exit_code == 1
    assert result.json()["result"]["isomorphic"] is False


def test_conjugate_mixed_inputs(run_cli, algebra_file):
    """Test both files must agree on declaring a p-map."""
    first = algebra_file(L2_FILE, "first.lie")
    second = algebra_file(L2_FILE + "pmap w = y\n", "second.lie")
    assert run_cli("conjugate", first, second).exit_code == 2


def test_conjugate_budget_exhausted(run_cli, algebra_file):
    """Test a search cut short by the budget exits 1."""
    abelian = "p=2\ndim=4\nbasis=x y z w\n"
    first = algebra_file(abelian, "first.lie")
    second = algebra_file(L2_FILE, "second.lie")
    result = run_cli("conjugate", first, second, "--budget", "1", "--ladder", "1")
    assert result.exit_code == 1


# Catalog check commands


def test_index_emit_and_load(run_cli, tmp_path):
    """Test the emitted index reloads cleanly."""
    emitted = run_cli("index", "--json")
    assert emitted.exit_code == 0
    index = json.loads(emitted.json()["result"]["index"])
    assert index["version"] == 1

    path = tmp_path / "catalog.json"
    path.write_text(json.dumps(index))
    loaded = run_cli("index", "--load", str(path), "-p", "2", "--json")
    assert loaded.exit_code == 0
    assert loaded.json()["result"]["rows"] == 67


def test_existence(run_cli):
    """Test the existence matrix at p = 3."""
    result = run_cli("existence", "-p", "3")
    assert result.exit_code == 0
    assert "existence: pass" in result.stdout


def test_table_one(run_cli):
    """Test table 1 at p = 3 has seven rows."""
    result = run_cli("tables", "--table", "1", "-p", "3", "--json")
    assert result.exit_code == 0
    table = result.json()["result"]["tables"]["1"]
    assert table["family"] == "L2"
    assert len(table["rows"]) == 7
    assert table["rows"]["L2.10"] == [2, 1, 1]


@pytest.mark.parametrize("selector", ["1", "L2"])
def test_table_text(run_cli, selector):
    """Test tables are named by number and family in text output."""
    result = run_cli("tables", "--table", selector, "-p", "3")
    assert result.exit_code == 0
    assert "Table 1: L2 (p=3)" in result.stdout


@pytest.mark.parametrize("selector", ["L9", "6"])
def test_unknown_table(run_cli, selector):
    """Test unknown tables exit 2."""
    result = run_cli("tables", "--table", selector)
    assert result.exit_code == 2
    assert "Unknown table" in result.stderr


@pytest.mark.parametrize("name", ["groebner_a", "gl2_ideal"])
def test_suite(run_cli, name):
    """Test a single suite run by name or alias."""
    result = run_cli("suite", name, "--json")
    assert result.exit_code == 0
    (suite,) = result.json()["result"]["suites"]
    assert suite["checked"] == 1


def test_suites_by_name(run_cli):
    """Test several suites at one characteristic."""
    result = run_cli("suite", "adwLi", "jacobson_remarks", "-p", "3", "--json")
    assert result.exit_code == 0
    assert result.json()["passed"]


def test_unknown_suite(run_cli):
    """Test unknown suites exit 2."""
    result = run_cli("suite", "nope")
    assert result.exit_code == 2
    assert "Unknown suite" in result.stderr


def test_parameterization(run_cli):
    """Test AutoLb over F_2."""
    result = run_cli("parameterization", "AutoLb", "-q", "2", "--json")
    assert result.exit_code == 0
    data = result.json()["result"]
    assert data["id"] == "AutoLb"
    assert data["family"] == "L2"
    assert data["parameterized"] == data["bruteForce"] == 192


def test_parameterization_alias(run_cli):
    """Test the Lie family id is accepted for a closed form."""
    result = run_cli("parameterization", "L2", "-q", "2")
    assert result.exit_code == 0
    assert "AutoLb (L2) over F_2" in result.stdout


def test_parameterization_characteristic(run_cli):
    """Test closed forms outside their characteristic exit 2."""
    assert run_cli("parameterization", "gl2", "-q", "2").exit_code == 2


@pytest.mark.slow
def test_classify(run_cli):
    """Test the L2 2-map classification."""
    result = run_cli("classify", "--json")
    assert result.exit_code == 0
    assert result.json()["result"]["pmaps"] == 256


@pytest.mark.slow
def test_distinct_sample(run_cli):
    """Test a sampled distinctness run at p = 2."""
    result = run_cli("distinct", "-p", "2", "--sample", "5", "--json")
    assert result.exit_code == 0
    assert result.json()["result"]["compared"] == 5
