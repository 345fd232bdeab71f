import csv
import io

import pytest

from main import EXIT_INPUT, EXIT_OK, EXIT_PRECONDITION, EXIT_VERIFY_FAILED, main

DIAMOND = (
    "poset 4\nlabel 0 bottom\nlabel 3 top\n"
    "cover bottom 1\ncover bottom 2\ncover 1 top\ncover 2 top\n"
)

BOWTIE = "poset 4\ncover 0 2\ncover 0 3\ncover 1 2\ncover 1 3\n"

SEVEN = """\
gf inline 3
poset 7
cover 0 1
cover 0 2
cover 0 3
cover 1 4
cover 1 6
cover 2 4
cover 2 5
cover 3 5
cover 3 6
index 4,5,6
z 4 1
z 5 2
F 4 0 1
F 4 1 2
F 5 0 -1
F 5 2 3
F 6 0 2
F 6 1 1
F 6 3 -2
F 6 6 5
"""


@pytest.fixture(autouse=True)
def isolated_env(monkeypatch, tmp_path):
    """Logs go to a temporary file and defaults are not overridden."""
    monkeypatch.setenv("MEETDET_LOG_FILE", str(tmp_path / "logs" / "meetdet.log"))
    monkeypatch.delenv("MEETDET_THREADS", raising=False)
    monkeypatch.delenv("MEETDET_MAX_TERMS", raising=False)
    return monkeypatch


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def output_fields(text: str) -> dict[str, str]:
    return dict(line.split(": ", 1) for line in text.splitlines() if ": " in line)


class TestLatticeCommand:
    def test_check_yes(self, write, capsys):
        assert main(["lattice", "check", write("d.poset", DIAMOND)]) == EXIT_OK
        assert capsys.readouterr().out == "meet-semilattice: yes (4 elements)\n"

    def test_check_no_with_witness(self, write, capsys):
        assert main(["lattice", "check", write("b.poset", BOWTIE)]) == EXIT_OK
        assert capsys.readouterr().out == "meet-semilattice: no (witness: 0,1)\n"

    def test_info(self, write, capsys):
        assert main(["lattice", "info", "--mobius", write("d.poset", DIAMOND)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "linear extension: bottom 1 2 top" in out
        assert "covers: bottom<1 bottom<2 1<top 2<top" in out
        assert "  bottom bottom bottom bottom" in out
        assert "  1 -1 -1 1" in out

    def test_malformed_poset(self, write):
        assert main(["lattice", "check", write("bad.poset", "poset 2\ncover 0 7\n")]) == EXIT_INPUT

    def test_missing_file(self, tmp_path):
        assert main(["lattice", "check", str(tmp_path / "absent")]) == EXIT_INPUT


class TestEvalCommand:
    def test_methods_agree(self, write, capsys):
        gf = write("seven.gf", SEVEN)
        values = {}
        for method in ("brute", "expand", "ligen"):
            assert main(["eval", "--method", method, "--gf", gf, "--k", "3"]) == EXIT_OK
            fields = output_fields(capsys.readouterr().out)
            assert fields["method"] == method
            values[method] = (fields["value"], fields["input"])
        assert len(set(values.values())) == 1
        assert fields["terms"] == str(35 * 6)

    def test_timing_is_opt_in(self, write, capsys):
        gf = write("seven.gf", SEVEN)
        argv = ["eval", "--method", "ligen", "--gf", gf, "--k", "3"]
        assert main(argv) == EXIT_OK
        assert "wall_ms" not in output_fields(capsys.readouterr().out)
        assert main([*argv, "--timing"]) == EXIT_OK
        fields = output_fields(capsys.readouterr().out)
        assert float(fields["wall_ms"]) >= 0
        assert fields["method"] == "ligen"

    def test_table_fmap(self, write, capsys):
        gf = write("seven.gf", SEVEN)
        table = write("f.table", "1,2,3 -> 2\n2,1,3 -> x\ndefault -> 1\n")
        values = set()
        for method in ("brute", "ligen"):
            argv = ["eval", "--method", method, "--gf", gf, "--k", "3"]
            argv += ["--fmap", f"table:{table}"]
            assert main(argv) == EXIT_OK
            values.add(output_fields(capsys.readouterr().out)["value"])
        assert len(values) == 1

    def test_lowered_grounding_vanishes(self, write, capsys):
        gf = write("chain.gf", "gf inline 2\nposet 2\ncover 0 1\nz 1 0\nsymbolic\n")
        assert main(["eval", "--method", "lindstrom", "--gf", gf, "--k", "3"]) == EXIT_OK
        assert output_fields(capsys.readouterr().out)["value"] == "0"

    def test_hypermatrix_input(self, write, capsys):
        m = write("m.txt", "hypermatrix 2 2\n1\n2\n3\n4\n")
        assert main(["eval", "--method", "brute", "--hypermatrix", m]) == EXIT_OK
        assert output_fields(capsys.readouterr().out)["value"] == "-2"

    def test_closed_form_needs_grounded_function(self, write):
        m = write("m.txt", "hypermatrix 2 2\n1\n2\n3\n4\n")
        assert main(["eval", "--method", "ligen", "--hypermatrix", m]) == EXIT_PRECONDITION

    def test_precondition_failure(self, write):
        gf = write("seven.gf", SEVEN)
        assert main(["eval", "--method", "meetclosed", "--gf", gf]) == EXIT_PRECONDITION

    def test_enumeration_guard(self, write, isolated_env):
        isolated_env.setenv("MEETDET_MAX_TERMS", "10")
        gf = write("seven.gf", SEVEN)
        assert main(["eval", "--method", "brute", "--gf", gf, "--k", "3"]) == EXIT_PRECONDITION
        assert main(["eval", "--method", "brute", "--gf", gf, "--k", "3", "--force"]) == EXIT_OK

    def test_unknown_fmap(self, write):
        gf = write("seven.gf", SEVEN)
        assert main(["eval", "--method", "brute", "--gf", gf, "--fmap", "odd"]) == EXIT_INPUT

    def test_bad_thread_count(self, write):
        gf = write("seven.gf", SEVEN)
        assert main(["--threads", "0", "eval", "--method", "brute", "--gf", gf]) == EXIT_INPUT


class TestVerifyCommand:
    ARGS = ["verify", "--seed", "7", "--trials", "2", "--nmax", "3", "--kmax", "3"]

    def test_passes_and_is_deterministic(self, capsys):
        assert main(self.ARGS) == EXIT_OK
        serial = capsys.readouterr().out
        assert "expansion-equals-bruteforce: 2/2" in serial
        assert "FAILED" not in serial
        assert main(["--threads", "4", *self.ARGS]) == EXIT_OK
        assert capsys.readouterr().out == serial

    def test_no_trials(self, capsys):
        assert main(["verify", "--trials", "0"]) == EXIT_OK
        assert capsys.readouterr().out == ""

    def test_bad_bounds(self):
        assert main(["verify", "--trials", "1", "--kmax", "1"]) == EXIT_INPUT

    def test_reports_counterexample(self, isolated_env, capsys):
        isolated_env.setattr(
            "verification.properties.fdet_expansion", lambda *args, **kwargs: 10**9
        )
        argv = ["verify", "--trials", "1", "--nmax", "2", "--kmax", "3"]
        assert main(argv) == EXIT_VERIFY_FAILED
        out = capsys.readouterr().out
        assert "expansion-equals-bruteforce: 0/1" in out
        assert "FAILED expansion-equals-bruteforce (seed 42, trial 0)" in out
        assert "# hypermatrix" in out


class TestExamplesCommand:
    @pytest.mark.parametrize("command", ["paper-examples", "examples"])
    def test_all_match(self, command, capsys):
        assert main([command]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.count("match: yes") == 4
        assert "match: no" not in out


class TestBenchCommand:
    def test_rows(self, capsys):
        assert main(["bench", "--sizes", "4x3", "--seed", "3"]) == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert [row["method"] for row in rows] == ["brute", "expand", "ligen"]
        assert [row["terms"] for row in rows] == ["576", "24", "24"]
        assert len({row["value_digest"] for row in rows}) == 1

    def test_no_methods(self, capsys):
        assert main(["bench", "--methods", ""]) == EXIT_OK
        assert capsys.readouterr().out == "method,n,k,terms,wall_ms,value_digest\n"

    def test_output_file(self, tmp_path):
        target = tmp_path / "bench.csv"
        argv = ["bench", "--sizes", "2x2,3x3", "--methods", "brute,lindstrom"]
        argv += ["--output", str(target)]
        assert main(argv) == EXIT_OK
        assert len(target.read_text().splitlines()) == 5

    @pytest.mark.parametrize("sizes", ["4", "4x1", "axb"])
    def test_bad_sizes(self, sizes):
        assert main(["bench", "--sizes", sizes]) == EXIT_INPUT


class TestGcdCommand:
    def test_methods_agree(self, capsys):
        values = set()
        for method in ("brute", "ligen"):
            argv = ["gcd", "--set", "2,3,4", "--k", "3", "--method", method, "--function", "phi"]
            assert main(argv) == EXIT_OK
            out = capsys.readouterr().out
            assert out.startswith("set: 2,3,4\n")
            values.add(output_fields(out)["value"])
        assert len(values) == 1

    def test_smith(self, capsys):
        assert main(["gcd", "--set", "1,2,3,4,5,6", "--method", "factorclosed"]) == EXIT_OK
        assert output_fields(capsys.readouterr().out)["value"] == "32"

    def test_closure(self, capsys):
        argv = ["gcd", "--set", "4,6", "--closure", "gcd", "--method", "meetclosed"]
        assert main(argv) == EXIT_OK
        assert capsys.readouterr().out.startswith("set: 2,4,6\n")

    def test_bad_set(self):
        assert main(["gcd", "--set", "2,x"]) == EXIT_INPUT
        assert main(["gcd", "--set", "0,2"]) == EXIT_INPUT
