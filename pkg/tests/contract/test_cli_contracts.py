"""
Contract Tests for the Command Line

Tests the observable CLI surface:
- Golden text and JSON outputs
- Deterministic output
- Exit codes 0 / 1 / 2
- Grid file validation
"""

import json
import sys

import pytest
from pydantic import ValidationError
from typer.testing import CliRunner

from cli.main import app
from cli.schemas import GridEntry, RealizabilityPayload
from core.portraits import CertificateFailure
from core.verification import IdentitySuite, SuiteRegistry

REALIZES_EXCEPTION_JSON = (
    '{"x":"-1/2","M":0,"N":2,"d":2,"realizable":false,'
    '"P":{"vars":["C"],"terms":[[1,"1"],[0,"3/4"]]},'
    '"S":{"vars":["C"],"terms":[[1,"1"],[0,"3/4"]]},'
    '"Pstar":{"vars":["C"],"terms":[[0,"1"]]},'
    '"witnesses":[],'
    '"certificate":{"gcd_Pstar_S_is_one":true,"deg_Pstar":0}}\n'
)


@pytest.mark.contract
class TestGoldenOutputs:
    """Exact outputs for small inputs"""

    def test_dynatomic_text(self, run_cli):
        """Test Phi_2 for z^2 + c"""
        assert run_cli("dynatomic", "2", "2") == (0, "X^2 + X + C + 1\n", "")

    def test_dynatomic_json(self, run_cli):
        """Test the JSON polynomial layout"""
        code, out, _ = run_cli("dynatomic", "2", "2", "--format", "json")
        assert code == 0
        assert out == '{"vars":["X","C"],"terms":[[2,0,"1"],[1,0,"1"],[0,1,"1"],[0,0,"1"]]}\n'

    def test_gen_dynatomic(self, run_cli):
        """Test Phi_{1,2} for z^2 + c"""
        assert run_cli("gen-dynatomic", "2", "1", "2")[1] == "X^2 - X + C + 1\n"

    def test_iterate(self, run_cli):
        """Test f^1 and f^0"""
        assert run_cli("iterate", "2", "1")[1] == "X^2 + C\n"
        assert run_cli("iterate", "3", "0")[1] == "X\n"

    def test_resultant(self, run_cli):
        """Test Res_X(Phi_2, Phi_1) = 4C + 3"""
        assert run_cli("resultant", "2", "2", "1")[1] == "4*C + 3\n"

    def test_realizes_exception_json(self, run_cli):
        """Test -1/2 with portrait (0,2) in degree 2 answers false with exit 0"""
        code, out, err = run_cli("realizes", "-1/2", "0", "2", "2", "--format", "json")
        assert code == 0
        assert out == REALIZES_EXCEPTION_JSON
        assert err == ""

    def test_realizes_exception_text(self, run_cli):
        """Test the text rendering of an unrealizable portrait"""
        code, out, _ = run_cli("realizes", "-1/2", "0", "2", "2")
        assert code == 0
        assert out.splitlines() == [
            "x: -1/2",
            "portrait: (0,2)",
            "d: 2",
            "realizable: false",
            "P: C + 3/4",
            "S: C + 3/4",
            "Pstar: 1",
            "certificate: gcd(Pstar, S) = 1 is true, deg Pstar = 0",
        ]

    def test_realizes_witness(self, run_cli):
        """Test a realizable portrait reports its verified witness"""
        code, out, _ = run_cli("realizes", "1", "1", "1", "2")
        assert code == 0
        assert "realizable: true" in out
        assert "Pstar: C + 2" in out
        assert "witness: c = -2, orbit = [1, -1], portrait = (1,1)" in out

    def test_realizes_witness_limit(self, run_cli):
        """Test --witness-limit 0 hides witnesses without changing the answer"""
        _, out, _ = run_cli("realizes", "1", "1", "1", "2", "--format", "json", "--witness-limit", "0")
        data = json.loads(out)
        assert data["realizable"] is True
        assert data["witnesses"] == []

    def test_realizes_over_quotient_ring(self, run_cli):
        """Test x = i over Q(i): realizable, no rational witnesses, modulus in P"""
        code, out, _ = run_cli(
            "realizes", "t", "0", "1", "2", "--modulus", "t^2 + 1", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["realizable"] is True
        assert data["witnesses"] == []
        assert data["P"]["modulus"] == "t^2 + 1"
        RealizabilityPayload.model_validate(data)

    def test_portrait(self, run_cli):
        """Test the orbit of 1/2 under z^2 - 3/4"""
        code, out, _ = run_cli("portrait", "1/2", "-3/4", "2")
        assert code == 0
        assert out == "portrait: (1,1)\norbit: [1/2, -1/2]\nbound: 64\n"

    def test_portrait_json_escape(self, run_cli):
        """Test an escaping orbit reports the marker"""
        _, out, _ = run_cli("portrait", "2", "0", "2", "--format", "json", "--bound", "5")
        assert out == '{"orbit":["2"],"portrait":"NotPreperiodicWithinBound","bound":5}\n'

    def test_portrait_over_quotient_ring(self, run_cli):
        """Test i -> -1 -> 1 under z^2"""
        _, out, _ = run_cli("portrait", "t", "0", "2", "--modulus", "t^2 + 1", "--format", "json")
        data = json.loads(out)
        assert data["orbit"] == ["t", "-1", "1"]
        assert data["portrait"] == [2, 1]

    def test_portrait_bound_from_environment(self, run_cli, monkeypatch):
        """Test DYNPORTRAITS_ORBIT_BOUND sets the default bound"""
        monkeypatch.setenv("DYNPORTRAITS_ORBIT_BOUND", "7")
        assert run_cli("portrait", "0", "-1", "2")[1].endswith("bound: 7\n")

    def test_curve_info_json(self, run_cli):
        """Test degrees and components of Phi_{2,1} for z^3 + c"""
        _, out, _ = run_cli("curve-info", "3", "2", "1", "--format", "json")
        assert json.loads(out) == {
            "M": 2,
            "N": 1,
            "d": 3,
            "degX": 18,
            "degC": 6,
            "components": 2,
            "singular_note": "points with f_{d,c}^{M-1}(x) = 0",
        }

    def test_curve_info_text(self, run_cli):
        """Test key: value lines"""
        _, out, _ = run_cli("curve-info", "2", "0", "1")
        assert out.splitlines()[:6] == ["M: 0", "N: 1", "d: 2", "degX: 2", "degC: 1", "components: 1"]


@pytest.mark.contract
class TestDeterminism:
    """Identical invocations print identical bytes"""

    @pytest.mark.parametrize(
        "argv",
        [
            ("dynatomic", "3", "2", "--format", "json"),
            ("realizes", "1/2", "1", "1", "2", "--format", "json"),
            ("verify", "--suite", "period-inequality", "--format", "json"),
        ],
    )
    def test_repeatable(self, run_cli, argv):
        """Test two runs give the same stdout"""
        first = run_cli(*argv)
        second = run_cli(*argv)
        assert first == second
        assert first[0] == 0


@pytest.mark.contract
class TestVerifyCommand:
    """Contract tests for verify"""

    def test_single_suite(self, run_cli):
        """Test a passing suite prints PASS with counts"""
        assert run_cli("verify", "--suite", "period-inequality") == (
            0,
            "period-inequality: PASS (48 checked, 0 skipped)\n",
            "",
        )

    def test_single_suite_json(self, run_cli):
        """Test the JSON layout omits an empty first_failure"""
        _, out, _ = run_cli("verify", "--suite", "period-inequality", "--format", "json")
        assert out == (
            '{"passed":true,"suites":[{"suite":"period-inequality","passed":true,'
            '"checked":48,"skipped":0,"skipped_cases":[]}]}\n'
        )

    def test_list(self, run_cli):
        """Test --list names every suite"""
        code, out, _ = run_cli("verify", "--list")
        assert code == 0
        names = [line.split(":", 1)[0] for line in out.splitlines()]
        assert names == SuiteRegistry.list_suites()

    def test_list_json(self, run_cli):
        """Test --list --format json is a name to description object"""
        _, out, _ = run_cli("verify", "--list", "--format", "json")
        assert json.loads(out) == SuiteRegistry.describe()

    def test_unknown_suite(self, run_cli):
        """Test an unknown suite is a usage error"""
        code, out, err = run_cli("verify", "--suite", "no-such-suite")
        assert code == 1
        assert out == ""
        assert "no-such-suite" in err

    def test_violation_exits_two(self, run_cli, monkeypatch):
        """Test a failing identity exits 2 and names the suite"""

        class Broken(IdentitySuite):
            name = "broken"
            description = "always fails"

            def cases(self):
                return [1]

            def check(self, case):
                return "1 != 2"

        monkeypatch.setitem(SuiteRegistry._suites, "broken", Broken)
        code, out, err = run_cli("verify", "--suite", "broken")
        assert code == 2
        assert "broken: FAIL (1 checked, 0 skipped)" in out
        assert "identity violated in broken: 1 != 2" in err

    def test_skipped_cases_are_listed(self, run_cli, monkeypatch):
        """Test unaffordable cases are named in text and JSON output"""

        class Partial(IdentitySuite):
            name = "partial"
            description = "skips its large case"

            def cases(self):
                return [1, 2]

            def affordable(self, case):
                return case == 1

            def describe_case(self, case):
                return f"n={case}"

            def check(self, case):
                return None

        monkeypatch.setitem(SuiteRegistry._suites, "partial", Partial)
        assert run_cli("verify", "--suite", "partial") == (
            0,
            "partial: PASS (1 checked, 1 skipped)\n  skipped: n=2\n",
            "",
        )
        _, out, _ = run_cli("verify", "--suite", "partial", "--format", "json")
        assert json.loads(out)["suites"][0]["skipped_cases"] == ["n=2"]


@pytest.mark.contract
class TestSweepCommand:
    """Contract tests for sweep"""

    ENTRIES = [
        {"x": "1", "M": 1, "N": 1, "d": 2},
        {"x": "-1/2", "M": 0, "N": 2, "d": 2},
    ]

    def test_text(self, run_cli, grid_file):
        """Test one line per entry followed by totals"""
        code, out, _ = run_cli("sweep", "--grid", str(grid_file(self.ENTRIES)))
        assert code == 0
        assert out.splitlines() == [
            "x=1 M=1 N=1 d=2 realizable=true matches_classification=true",
            "x=-1/2 M=0 N=2 d=2 realizable=false matches_classification=true",
            "total: 2",
            "realizable: 1",
            "mismatches: 0",
        ]

    def test_json(self, run_cli, grid_file):
        """Test records keep input order and carry the classification flag"""
        _, out, _ = run_cli("sweep", "--grid", str(grid_file(self.ENTRIES)), "--format", "json")
        data = json.loads(out)
        assert [e["x"] for e in data["entries"]] == ["1", "-1/2"]
        assert all(e["matches_classification"] for e in data["entries"])
        assert (data["total"], data["realizable"], data["mismatches"]) == (2, 1, 0)

    @pytest.mark.parametrize(
        "entries",
        [
            [{"x": "1", "M": 0, "N": 1, "d": 1}],
            [{"x": "0.5", "M": 0, "N": 1, "d": 2}],
            [{"x": "1", "M": -1, "N": 1, "d": 2}],
            {"x": "1", "M": 0, "N": 1, "d": 2},
        ],
    )
    def test_invalid_entries(self, run_cli, grid_file, entries):
        """Test invalid grids are usage errors"""
        code, out, _ = run_cli("sweep", "--grid", str(grid_file(entries)))
        assert code == 1
        assert out == ""

    def test_malformed_json(self, run_cli, tmp_path):
        """Test a grid file that is not JSON"""
        path = tmp_path / "grid.json"
        path.write_text("[{", encoding="utf-8")
        assert run_cli("sweep", "--grid", str(path))[0] == 1

    def test_missing_file(self, run_cli, tmp_path):
        """Test a grid file that does not exist"""
        code, _, err = run_cli("sweep", "--grid", str(tmp_path / "missing.json"))
        assert code == 1
        assert "missing.json" in err


@pytest.mark.contract
class TestExitCodes:
    """Usage errors exit 1, internal failures exit 2"""

    @pytest.mark.parametrize("token", ["0.5", "1/0", "1e3", "one"])
    def test_malformed_rational(self, run_cli, token):
        """Test the offending token is echoed on stderr"""
        code, out, err = run_cli("realizes", token, "0", "2", "2")
        assert code == 1
        assert out == ""
        assert token in err

    @pytest.mark.parametrize(
        "argv",
        [
            ("dynatomic", "1", "2"),
            ("dynatomic", "2", "0"),
            ("gen-dynatomic", "2", "-1", "1"),
            ("iterate", "2", "-1"),
            ("resultant", "2", "2", "0"),
            ("realizes", "0", "0", "0", "2"),
            ("portrait", "0", "0", "2", "--bound", "0"),
            ("realizes", "t", "0", "1", "2", "--modulus", "2*t^2 + 1"),
            ("dynatomic", "two", "2"),
            ("no-such-command",),
        ],
    )
    def test_usage_errors(self, run_cli, argv):
        """Test invalid arguments exit 1 with nothing on stdout"""
        code, out, err = run_cli(*argv)
        assert code == 1
        assert out == ""
        assert err

    def test_invalid_environment(self, run_cli, monkeypatch):
        """Test an invalid setting is a usage error"""
        monkeypatch.setenv("DYNPORTRAITS_LOG_FORMAT", "xml")
        code, _, err = run_cli("dynatomic", "2", "1")
        assert code == 1
        assert "DYNPORTRAITS_LOG_FORMAT" in err

    def test_certificate_failure(self, run_cli, monkeypatch):
        """Test an uncertifiable decision exits 2"""

        def broken(*args, **kwargs):
            raise CertificateFailure("witness check failed")

        monkeypatch.setattr(sys.modules["cli.main"], "realizes", broken)
        code, out, err = run_cli("realizes", "0", "0", "2", "2")
        assert code == 2
        assert out == ""
        assert "internal error: witness check failed" in err


@pytest.mark.contract
class TestCliRunner:
    """The typer app invoked through its test runner"""

    def test_help(self):
        """Test --help lists the subcommands"""
        result = CliRunner().invoke(app, ["--help"])
        assert result.exit_code == 0
        for command in ("dynatomic", "gen-dynatomic", "realizes", "portrait", "verify", "sweep"):
            assert command in result.output

    def test_realizes(self):
        """Test a successful invocation"""
        result = CliRunner().invoke(app, ["realizes", "0", "0", "2", "2", "--format", "json"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["witnesses"] == [{"c": "-1", "orbit": ["0", "-1"], "portrait": [0, 2]}]

    def test_usage_failure_exit_code(self):
        """Test domain usage errors exit 1 under the runner too"""
        result = CliRunner().invoke(app, ["dynatomic", "1", "2"])
        assert result.exit_code == 1


@pytest.mark.contract
class TestGridEntrySchema:
    """Contract tests for sweep grid entries"""

    def test_valid(self):
        """Test a valid entry; x is stripped"""
        entry = GridEntry(x=" -1/2 ", M=0, N=2, d=2)
        assert entry.x == "-1/2"

    @pytest.mark.parametrize(
        "fields",
        [
            {"x": "0.5", "M": 0, "N": 1, "d": 2},
            {"x": "1", "M": -1, "N": 1, "d": 2},
            {"x": "1", "M": 0, "N": 0, "d": 2},
            {"x": "1", "M": 0, "N": 1, "d": 1},
            {"M": 0, "N": 1, "d": 2},
        ],
    )
    def test_invalid(self, fields):
        """Test invalid entries raise ValidationError"""
        with pytest.raises(ValidationError):
            GridEntry(**fields)
