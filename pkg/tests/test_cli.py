"""CLI behaviour: commands, output routing and exit codes."""

import io
import os

from httplift.cli import main, EXIT_OK, EXIT_VIOLATIONS, EXIT_ERROR
from httplift.rdf import isomorphic_datasets
from httplift.turtle import parse_trig, parse_turtle

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")
SAMPLE = os.path.join(FIXTURES, "registration.http")
HAR = os.path.join(FIXTURES, "registration.har")
GOLDEN = os.path.join(FIXTURES, "registration_golden.trig")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestLift:
    def test_transcript_to_trig(self, capsys):
        code, out, _ = run(capsys, "lift", SAMPLE)
        assert code == EXIT_OK
        assert isomorphic_datasets(parse_trig(out),
                                   parse_trig(open(GOLDEN).read()))

    def test_har_input_by_extension(self, capsys):
        code, out, _ = run(capsys, "lift", HAR)
        assert code == EXIT_OK
        assert isomorphic_datasets(parse_trig(out),
                                   parse_trig(open(GOLDEN).read()))

    def test_turtle_flag_emits_default_graph_only(self, capsys):
        code, out, _ = run(capsys, "lift", "--turtle", SAMPLE)
        assert code == EXIT_OK
        g = parse_turtle(out)
        assert len(g) == 75

    def test_output_is_deterministic(self, capsys):
        _, out1, _ = run(capsys, "lift", SAMPLE)
        _, out2, _ = run(capsys, "lift", SAMPLE)
        assert out1 == out2

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "lifted.trig"
        code, out, _ = run(capsys, "lift", SAMPLE, "--out", str(target))
        assert code == EXIT_OK and out == ""
        assert isomorphic_datasets(parse_trig(target.read_text()),
                                   parse_trig(open(GOLDEN).read()))

    def test_stdin_dash(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(open(SAMPLE).read()))
        code, out, _ = run(capsys, "lift", "-", "--format", "transcript")
        assert code == EXIT_OK and out


class TestValidate:
    def test_clean_input_exits_zero(self, capsys):
        code, out, _ = run(capsys, "validate", SAMPLE)
        assert code == EXIT_OK
        assert "no findings" in out

    def test_violation_sets_exit_code(self, capsys, tmp_path):
        # a request without a method breaks R2
        broken = tmp_path / "broken.trig"
        broken.write_text(
            "@prefix : <http://w3id.org/http#> .\n"
            "_:q a :Request .\n")
        code, out, _ = run(capsys, "validate", str(broken))
        assert code == EXIT_VIOLATIONS
        assert "R2" in out

    def test_tsv_report(self, capsys, tmp_path):
        broken = tmp_path / "broken.trig"
        broken.write_text(
            "@prefix : <http://w3id.org/http#> .\n"
            "_:q a :Request .\n")
        code, out, _ = run(capsys, "validate", "--report", "tsv", str(broken))
        assert code == EXIT_VIOLATIONS
        first = out.strip().splitlines()[0].split("\t")
        assert first[0].startswith("R") and first[1] == "violation"

    def test_lift_then_validate_composes(self, capsys, tmp_path):
        lifted = tmp_path / "lifted.trig"
        assert run(capsys, "lift", SAMPLE, "--out", str(lifted))[0] == EXIT_OK
        code, out, _ = run(capsys, "validate", str(lifted))
        assert code == EXIT_OK, out


class TestQuery:
    def test_cq1(self, capsys):
        code, out, _ = run(capsys, "query", "1", SAMPLE)
        assert code == EXIT_OK
        assert "text/turtle" in out

    def test_cq2(self, capsys):
        code, out, _ = run(capsys, "query", "2", SAMPLE)
        assert code == EXIT_OK
        statuses = sorted(line.split("\t")[1] for line in out.strip().splitlines())
        assert statuses == ["200", "201"]

    def test_cq3(self, capsys):
        code, out, _ = run(capsys, "query", "3", SAMPLE)
        assert "x8344" in out

    def test_cq4(self, capsys):
        code, out, _ = run(capsys, "query", "4", SAMPLE)
        assert out.strip() == "200"

    def test_cq5_prints_per_request_verdicts(self, capsys):
        code, out, _ = run(capsys, "query", "5", SAMPLE)
        verdicts = sorted(line.split("\t")[1]
                          for line in out.strip().splitlines())
        assert verdicts == ["false", "true"]

    def test_cq6_needs_prop(self, capsys):
        code, _, err = run(capsys, "query", "6", SAMPLE)
        assert code == EXIT_ERROR and "prop" in err

    def test_cq6(self, capsys):
        code, out, _ = run(capsys, "query", "6", SAMPLE,
                           "--prop", "http://example.org/ns#ids")
        assert out.split() == ["14", "35", "28", "6", "22"]

    def test_cq7(self, capsys):
        code, out, _ = run(capsys, "query", "7", SAMPLE, "--name", "count")
        assert out.strip() == '"5"'

    def test_cq7_needs_name(self, capsys):
        code, _, err = run(capsys, "query", "7", SAMPLE)
        assert code == EXIT_ERROR and "name" in err

    def test_unknown_cq(self, capsys):
        code, _, err = run(capsys, "query", "9", SAMPLE)
        assert code == EXIT_ERROR


class TestOntology:
    def test_prints_parseable_turtle(self, capsys):
        code, out, _ = run(capsys, "ontology")
        assert code == EXIT_OK
        assert len(parse_turtle(out)) > 500

    def test_extensions_flag_adds_terms(self, capsys):
        _, base, _ = run(capsys, "ontology")
        _, ext, _ = run(capsys, "ontology", "--extensions")
        assert len(parse_turtle(ext)) > len(parse_turtle(base))
        assert "content-type" in ext


class TestErrors:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "lift", "/nonexistent/input.http")
        assert code == EXIT_ERROR and err

    def test_malformed_transcript(self, capsys, tmp_path):
        bad = tmp_path / "bad.http"
        bad.write_text("HTTP/1.1 200 OK\n")  # response with no request
        code, _, err = run(capsys, "lift", str(bad))
        assert code == EXIT_ERROR and err

    def test_malformed_trig(self, capsys, tmp_path):
        bad = tmp_path / "bad.trig"
        bad.write_text("@prefix broken")
        code, _, err = run(capsys, "validate", str(bad))
        assert code == EXIT_ERROR and err

    def test_no_command_errors(self, capsys):
        assert main([]) == EXIT_ERROR

    def test_console_script_installed(self):
        import shutil
        assert shutil.which("httplift")
