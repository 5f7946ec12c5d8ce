"""Proof text round trips and the command-line surface.

Exit statuses are contractual: 0 terminating / check passed, 1 unknown /
check failed, 2 timeout, 3 usage or parse error.
"""

import json

import pytest

from gwpo import (
    CertificateError,
    Proof,
    emit_proof,
    parse_ari,
    parse_certificate,
    proof_from_search,
    verify_certificate,
)
from gwpo.cli import main
from gwpo.dp import direct_obligation, dp_obligation
from gwpo.search import SearchSpace, find_certificate


@pytest.fixture(scope="module")
def stretch_cert_text(problems_dir):
    return (problems_dir / "certs" / "stretch-direct.cert").read_text()


@pytest.fixture(scope="module")
def stretch_proof_text(problems_dir, stretch_cert_text):
    """Proof text for the bundled stretch parameters."""
    trs = parse_ari((problems_dir / "stretch.ari").read_text())
    cert = parse_certificate(stretch_cert_text)
    report = verify_certificate(direct_obligation(trs), cert)
    assert report.ok
    cert.obligations = report.entries
    return emit_proof(Proof("terminating", "mgwpo-direct", cert))


class TestEmit:
    def test_parameter_lines(self, stretch_proof_text):
        lines = stretch_proof_text.splitlines()
        assert lines[0] == "YES"
        assert "template mgwpo-direct" in lines
        assert "s_A(x) = x + 1" in lines
        # max{1, x + 1} folds onto its argument branch...
        assert "s_B(x) = x + 1" in lines
        # ...but a negative offset keeps the constant floor
        assert "p_B(x) = max{0, x - 1}" in lines

    def test_obligation_lines(self, stretch_proof_text):
        tail = stretch_proof_text.split("obligations\n", 1)[1]
        assert tail.splitlines() == [
            "strict p(s(x)) -> x  [1]",
            "strict f(s(x)) -> f(p(s(x)))  [2b(i)]",
        ]

    def test_emission_is_deterministic(self, stretch_proof_text, problems_dir,
                                       stretch_cert_text):
        trs = parse_ari((problems_dir / "stretch.ari").read_text())
        cert = parse_certificate(stretch_cert_text)
        report = verify_certificate(direct_obligation(trs), cert)
        cert.obligations = report.entries
        again = emit_proof(Proof("terminating", "mgwpo-direct", cert))
        assert again == stretch_proof_text

    def test_negative_verdicts(self):
        assert emit_proof(Proof("unknown", "wpo", None, tried=615168)) == (
            "MAYBE\n"
            "search space of template wpo exhausted:"
            " 615168 candidates, no certificate\n"
        )
        assert emit_proof(Proof("timeout", "spo", None, 7, budget=2.5)) == (
            "TIMEOUT\ntime budget of 2.5 s exhausted before the search space\n"
        )
        # without a stated budget the note stays generic (and stable)
        assert emit_proof(Proof("timeout", "spo", None, 7)) == (
            "TIMEOUT\ntime budget exhausted before the search space\n"
        )

    def test_terminating_needs_a_certificate(self):
        with pytest.raises(ValueError):
            emit_proof(Proof("terminating", "wpo", None))


class TestParseCertificate:
    def test_whole_proof_parses_as_its_certificate(self, stretch_proof_text):
        cert = parse_certificate(stretch_proof_text)
        assert cert.template == "mgwpo-direct"
        assert cert.kind == "direct"

    def test_reemission_is_byte_identical(self, problems_dir, stretch_proof_text):
        trs = parse_ari((problems_dir / "stretch.ari").read_text())
        cert = parse_certificate(stretch_proof_text)
        report = verify_certificate(direct_obligation(trs), cert)
        assert report.ok
        cert.obligations = report.entries
        assert emit_proof(Proof("terminating", cert.template, cert)) == (
            stretch_proof_text
        )

    def test_search_emit_parse_verify_loop(self, problems_dir):
        trs = parse_ari((problems_dir / "collapse.ari").read_text())
        problem = dp_obligation(trs)
        result = find_certificate(problem, SearchSpace("spo"))
        assert result.outcome == "found"
        text = emit_proof(proof_from_search(result, "spo", None))
        reread = parse_certificate(text)
        assert verify_certificate(problem, reread).ok

    def test_z08_certificate_file(self, problems_dir, z08_trs):
        text = (problems_dir / "certs" / "z08-spo.cert").read_text()
        cert = parse_certificate(text)
        assert cert.status.positions(z08_trs.signature.symbol("f")) == ()
        assert verify_certificate(dp_obligation(z08_trs), cert).ok

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("a_A = 1\n", "missing 'template' line"),
            ("template lpo\na_A = 1\n", "unknown template 'lpo'"),
            ("template spo\nrank(f) = 1\n", "max/plus layer, not ranks"),
            (
                "template kbo-like\nf_B(x) = x + 1\n",
                "precedence, not a max/plus layer",
            ),
            ("template wpo\nrank(f) = fast\n", "bad rank"),
            ("template spo\nstatus(f) = [1]\n", "unknown symbol f"),
            ("template wpo\nf_A(x) = x ** 2\n", "cannot read"),
            ("template gwpo\nf_B(x) = max{}\n", "cannot read max/plus branch"),
            ("template gwpo\nf_B(x) = max{y + 1}\n", "cannot read max/plus branch"),
            ("template wpo\nwhat even = is this\n", "cannot read line"),
        ],
    )
    def test_rejections(self, text, fragment):
        with pytest.raises(CertificateError, match=None) as info:
            parse_certificate(text)
        assert fragment in str(info.value)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestProveCommand:
    def test_direct_proof(self, capsys, problems_dir):
        code, out, _ = run(
            capsys, "prove", str(problems_dir / "stretch.ari"),
            "--template", "mgwpo-direct",
        )
        assert code == 0
        assert out.startswith("YES\n")
        assert "obligations" in out

    def test_exhausted_space(self, capsys, problems_dir):
        code, out, _ = run(
            capsys, "prove", str(problems_dir / "loop.ari"),
            "--template", "kbo-like",
        )
        assert code == 1
        assert out.startswith("MAYBE\n")
        assert "2 candidates" in out

    def test_timeout(self, capsys, problems_dir):
        code, out, _ = run(
            capsys, "prove", str(problems_dir / "z08.ari"),
            "--template", "spo", "--timeout", "0",
        )
        assert code == 2
        assert out.startswith("TIMEOUT\n")

    def test_proof_file_mirrors_stdout(self, capsys, problems_dir, tmp_path):
        target = tmp_path / "out.proof"
        code, out, _ = run(
            capsys, "prove", str(problems_dir / "collapse.ari"),
            "--template", "spo", "--proof", str(target),
        )
        assert code == 0
        assert target.read_text() == out

    def test_proof_file_feeds_verify(self, capsys, problems_dir, tmp_path):
        target = tmp_path / "out.proof"
        run(
            capsys, "prove", str(problems_dir / "stretch.ari"),
            "--template", "mgwpo-direct", "--proof", str(target),
        )
        code, out, _ = run(
            capsys, "verify", str(problems_dir / "stretch.ari"),
            "--params", str(target),
        )
        assert code == 0
        assert out.splitlines()[-1] == "certificate accepted"

    def test_config_file(self, capsys, problems_dir, tmp_path):
        config = tmp_path / "space.json"
        config.write_text('{"statuses": "total", "const_max": 1}')
        code, out, _ = run(
            capsys, "prove", str(problems_dir / "collapse.ari"),
            "--template", "spo", "--config", str(config),
        )
        assert code == 0

    def test_flags_override_config(self, capsys, problems_dir, tmp_path):
        config = tmp_path / "space.json"
        config.write_text('{"statuses": "total"}')
        code, _, err = run(
            capsys, "prove", str(problems_dir / "collapse.ari"),
            "--template", "spo", "--config", str(config),
            "--statuses", "bogus",
        )
        assert code == 3  # the flag is validated even with a config present
        assert "invalid choice" in err

    @pytest.mark.parametrize(
        "payload,fragment",
        [
            ('{"max_coeff": 1}', "unknown search-space key"),
            ("[1, 2]", "expected a JSON object"),
            ("{not json", "cannot parse"),
            ('{"const_max": -1}', "const_max must be non-negative"),
        ],
    )
    def test_bad_config(self, capsys, problems_dir, tmp_path, payload, fragment):
        config = tmp_path / "space.json"
        config.write_text(payload)
        code, _, err = run(
            capsys, "prove", str(problems_dir / "collapse.ari"),
            "--template", "spo", "--config", str(config),
        )
        assert code == 3
        assert err.startswith("usage error: ")
        assert fragment in err

    def test_jobs_must_be_positive(self, capsys, problems_dir):
        code, _, err = run(
            capsys, "prove", str(problems_dir / "collapse.ari"), "--jobs", "0"
        )
        assert code == 3
        assert "--jobs must be at least 1" in err

    def test_missing_problem_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "prove", str(tmp_path / "absent.ari"))
        assert code == 3
        assert "cannot read" in err


class TestVerifyCommand:
    def test_bundled_certificates(self, capsys, problems_dir):
        for problem, cert in (
            ("stretch.ari", "stretch-direct.cert"),
            ("z08.ari", "z08-spo.cert"),
        ):
            code, out, _ = run(
                capsys, "verify", str(problems_dir / problem),
                "--params", str(problems_dir / "certs" / cert),
            )
            assert code == 0, cert
            assert out.splitlines()[-1] == "certificate accepted"

    def test_broken_parameters_rejected(self, capsys, problems_dir, tmp_path):
        text = (problems_dir / "certs" / "z08-spo.cert").read_text()
        assert "a_A = 1" in text
        bad = tmp_path / "bad.cert"
        bad.write_text(text.replace("a_A = 1", "a_A = 0"))
        code, out, _ = run(
            capsys, "verify", str(problems_dir / "z08.ari"),
            "--params", str(bad),
        )
        assert code == 1
        assert out.splitlines()[-1] == "certificate REJECTED"
        assert any("FAILED" in line for line in out.splitlines())

    def test_mismatched_certificate(self, capsys, problems_dir):
        code, _, err = run(
            capsys, "verify", str(problems_dir / "stretch.ari"),
            "--params", str(problems_dir / "certs" / "z08-spo.cert"),
        )
        assert code == 3
        assert err.startswith("certificate error: ")


class TestCompareCommand:
    def test_strict_comparison(self, capsys, problems_dir):
        code, out, _ = run(
            capsys, "compare", str(problems_dir / "stretch.ari"),
            "--lhs", "(p (s x))", "--rhs", "x",
            "--params", str(problems_dir / "certs" / "stretch-direct.cert"),
        )
        assert code == 0
        assert out.splitlines() == [
            "weak: yes",
            "strict: yes",
            "base comparisons: weak_a=0 strict_a=1 weak_b=0 strict_b=0 total=1",
        ]

    def test_reflexive_comparison_is_weak_only(self, capsys, problems_dir):
        code, out, _ = run(
            capsys, "compare", str(problems_dir / "stretch.ari"),
            "--lhs", "x", "--rhs", "x",
            "--params", str(problems_dir / "certs" / "stretch-direct.cert"),
        )
        assert code == 1
        assert "weak: yes" in out
        assert "strict: no" in out

    def test_term_syntax_errors(self, capsys, problems_dir):
        code, _, err = run(
            capsys, "compare", str(problems_dir / "stretch.ari"),
            "--lhs", "(q x)", "--rhs", "x",
            "--params", str(problems_dir / "certs" / "stretch-direct.cert"),
        )
        assert code == 3
        assert err.startswith("parse error: ")
        assert "undeclared function symbol: q" in err


class TestOracleCommand:
    def test_laws_check(self, capsys):
        code, out, _ = run(capsys, "oracle", "order-laws", "--size", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload["check"] == "order-laws"
        assert payload["ok"] is True
        assert "violation caught" in payload["lines"][-1]

    def test_alias(self, capsys):
        code, out, _ = run(capsys, "oracle", "thm2.5", "--size", "3")
        assert code == 0
        assert json.loads(out)["check"] == "mgwpo-mspo-agreement"

    def test_unknown_check(self, capsys):
        code, _, err = run(capsys, "oracle", "nonesuch")
        assert code == 3
        assert "unknown check 'nonesuch'" in err
        assert "mgwpo-mspo-agreement" in err  # the message lists what exists


class TestUsage:
    def test_unrecognized_flag(self, capsys, problems_dir):
        code, _, err = run(
            capsys, "prove", str(problems_dir / "stretch.ari"), "--nope"
        )
        assert code == 3
        assert err.startswith("usage error: ")
        assert "unrecognized arguments: --nope" in err

    def test_subcommand_required(self, capsys):
        code, _, err = run(capsys)
        assert code == 3

    def test_parse_error_status(self, capsys, tmp_path):
        bad = tmp_path / "bad.ari"
        bad.write_text("(format TRS)(fun g 1)(rule x (g x))")
        code, _, err = run(capsys, "prove", str(bad))
        assert code == 3
        assert err.startswith("parse error: ")
        assert "left-hand side is a variable" in err
