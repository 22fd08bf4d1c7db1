import json
import math
import os

import pytest

from harmcert.cli import (
    EXIT_BOUNDARY_SHARP,
    EXIT_INPUT_ERROR,
    EXIT_MEMBER,
    EXIT_NON_MEMBER,
    FunctionFile,
    FunctionFileError,
    main,
    parse_function_file,
    serialize_function_file,
)

IDENTITY_TEXT = """{
  "lambda": 1,
  "h_coeffs": [
    [0, 0],
    [1, 0]
  ],
  "g_coeffs": [
    [0, 0],
    [0, 0]
  ],
  "meta": {
  }
}
"""


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestFunctionFileFormat:
    def test_round_trip_byte_identical(self):
        ff = FunctionFile(
            lam=1.0,
            h=(0j, 1 + 0j, 0.1 - 0.2j),
            g=(0j, 0j, 0.3333333333333333 + 0j),
            meta={"name": "demo", "note": "x"},
        )
        text = serialize_function_file(ff)
        again = serialize_function_file(parse_function_file(text))
        assert text == again

    def test_seventeen_digit_floats_survive(self):
        value = 1 / 3 + 1e-16
        ff = FunctionFile(lam=value, h=(0j, 1 + 0j), g=(0j, 0j), meta={})
        parsed = parse_function_file(serialize_function_file(ff))
        assert parsed.lam == value

    def test_canonical_key_order(self):
        text = serialize_function_file(
            FunctionFile(lam=2.0, h=(0j, 1 + 0j), g=(0j, 0j), meta={"a": "b"})
        )
        keys = [line.split(":")[0].strip().strip('"')
                for line in text.splitlines() if '":' in line and line.startswith('  "')]
        assert keys == ["lambda", "h_coeffs", "g_coeffs", "meta"]

    def test_parse_identity(self):
        ff = parse_function_file(IDENTITY_TEXT)
        assert ff.lam == 1.0
        assert ff.h == (0j, 1 + 0j)

    def test_malformed_json_reports_line(self):
        with pytest.raises(FunctionFileError, match="line"):
            parse_function_file("{\n  broken\n}")

    def test_linear_coefficient_enforced(self):
        bad = IDENTITY_TEXT.replace("[1, 0]", "[0.9, 0]")
        with pytest.raises(FunctionFileError, match="linear coefficient"):
            parse_function_file(bad)

    def test_coanalytic_linear_term_enforced(self):
        bad = IDENTITY_TEXT.replace(
            '"g_coeffs": [\n    [0, 0],\n    [0, 0]',
            '"g_coeffs": [\n    [0, 0],\n    [0.1, 0]',
        )
        with pytest.raises(FunctionFileError,
                           match="co-analytic linear term must vanish"):
            parse_function_file(bad)

    def test_unknown_field_rejected(self):
        bad = IDENTITY_TEXT.replace('"meta"', '"extra": 1,\n  "meta"')
        with pytest.raises(FunctionFileError, match="unknown"):
            parse_function_file(bad)


class TestCheckCommand:
    def test_sharp_function_exits_two(self, tmp_path, capsys):
        out = str(tmp_path / "fb.json")
        assert main(["example", "f_b", "--lambda", "1", "--out", out]) == 0
        code = main(["check", out])
        captured = capsys.readouterr().out
        assert code == EXIT_BOUNDARY_SHARP
        assert "BoundarySharp" in captured

    def test_identity_exits_zero(self, tmp_path, capsys):
        path = write(tmp_path, "id.json", IDENTITY_TEXT)
        assert main(["check", path]) == EXIT_MEMBER
        assert "measured_sup: 0.0" in capsys.readouterr().out

    def test_json_payload(self, tmp_path, capsys):
        path = write(tmp_path, "id.json", IDENTITY_TEXT)
        code = main(["check", path, "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert code == EXIT_MEMBER
        for key in ("verdict", "measured_sup", "margin", "witness_angle"):
            assert key in payload

    def test_lambda_override(self, tmp_path):
        out = str(tmp_path / "fa.json")
        main(["example", "f_a", "--lambda", "1", "--out", out])
        assert main(["check", out]) == EXIT_BOUNDARY_SHARP
        assert main(["check", out, "--lambda", "2"]) == EXIT_MEMBER
        assert main(["check", out, "--lambda", "0.5"]) == EXIT_NON_MEMBER

    def test_zeta_samples_flag(self, tmp_path, capsys):
        out = str(tmp_path / "fb.json")
        main(["example", "f_b", "--lambda", "1", "--out", out])
        capsys.readouterr()
        code = main(["check", out, "--json", "--zeta-samples", "64"])
        payload = json.loads(capsys.readouterr().out)
        assert code == EXIT_BOUNDARY_SHARP
        assert payload["zeta_family_gap"] <= 1e-6

    def test_bad_file_exits_three(self, tmp_path, capsys):
        bad = IDENTITY_TEXT.replace(
            '"g_coeffs": [\n    [0, 0],\n    [0, 0]',
            '"g_coeffs": [\n    [0, 0],\n    [0.1, 0]',
        )
        path = write(tmp_path, "bad.json", bad)
        assert main(["check", path]) == EXIT_INPUT_ERROR
        assert "co-analytic linear term" in capsys.readouterr().err

    def test_missing_file_exits_three(self, tmp_path):
        assert main(["check", str(tmp_path / "nope.json")]) == EXIT_INPUT_ERROR


class TestExampleCommand:
    def test_cubic_showcase_coefficients(self, tmp_path):
        out = str(tmp_path / "eq13.json")
        assert main(["example", "eq13", "--lambda", "1", "--out", out]) == 0
        text = open(out).read()
        assert "[0.5, 0]" in text and "[0.25, 0]" in text

    def test_quadratic(self, tmp_path):
        out = str(tmp_path / "f3.json")
        main(["example", "f3", "--lambda", "1", "--eta", "1", "--out", out])
        ff = parse_function_file(open(out).read())
        assert ff.h == (0j, 1 + 0j, 1 + 0j)

    def test_polynomial_family(self, tmp_path):
        out = str(tmp_path / "p2.json")
        main(["example", "p2", "--s", "1", "--c", "2", "--eta", "1",
              "--out", out])
        ff = parse_function_file(open(out).read())
        assert ff.g[2] == 0.5

    def test_stdout_when_no_out(self, capsys):
        assert main(["example", "eq13", "--lambda", "2"]) == 0
        ff = parse_function_file(capsys.readouterr().out)
        assert ff.h[2] == 1.0

    def test_unknown_name(self, capsys):
        assert main(["example", "zmaps"]) == EXIT_INPUT_ERROR

    def test_round_trip_reproduces_verdict(self, tmp_path, capsys):
        from harmcert.catalog import CatalogParams, make_example
        from harmcert.membership import ClassParams, harmonic_membership

        out = str(tmp_path / "fb5.json")
        main(["example", "f_b", "--lambda", "0.7", "--n", "5", "--out", out])
        capsys.readouterr()
        code = main(["check", out, "--json"])
        payload = json.loads(capsys.readouterr().out)
        direct = harmonic_membership(
            make_example(CatalogParams(name="f_b", lam=0.7, n=5)),
            ClassParams(lam=0.7),
        )
        assert payload["verdict"] == direct.verdict.value
        assert payload["measured_sup"] == direct.measured_sup
        assert code == EXIT_BOUNDARY_SHARP


class TestRadiusCommand:
    def test_starlike_sharp_quadratic(self, tmp_path, capsys):
        out = str(tmp_path / "f3.json")
        main(["example", "f3", "--lambda", "1", "--out", out])
        assert main(["radius", out, "--kind", "starlike"]) == 0
        text = capsys.readouterr().out
        radius = float(text.split("radius: ")[1].splitlines()[0])
        assert radius == pytest.approx(0.5, abs=1e-4)

    def test_convex_sharp_quadratic(self, tmp_path, capsys):
        out = str(tmp_path / "f3.json")
        main(["example", "f3", "--lambda", "1", "--out", out])
        assert main(["radius", out, "--kind", "convex"]) == 0
        radius = float(capsys.readouterr().out.split("radius: ")[1].splitlines()[0])
        assert radius == pytest.approx(0.25, abs=1e-4)

    def test_identity_capped(self, tmp_path, capsys):
        path = write(tmp_path, "id.json", IDENTITY_TEXT)
        assert main(["radius", path]) == 0
        assert "capped" in capsys.readouterr().out

    def test_non_member_exits_one(self, tmp_path, capsys):
        out = str(tmp_path / "fa.json")
        main(["example", "f_a", "--lambda", "1", "--out", out])
        assert main(["radius", out, "--lambda", "0.4"]) == EXIT_NON_MEMBER


class TestCurveCommand:
    def test_identity_circle_outputs(self, tmp_path, capsys):
        path = write(tmp_path, "id.json", IDENTITY_TEXT)
        csv_path = str(tmp_path / "curve.csv")
        svg_path = str(tmp_path / "curve.svg")
        code = main(["curve", path, "--samples", "4096",
                     "--csv", csv_path, "--svg", svg_path])
        text = capsys.readouterr().out
        assert code == 0
        length = float(text.split("polygonal_length: ")[1].splitlines()[0])
        assert length == pytest.approx(2 * math.pi, abs=1e-3)
        lines = open(csv_path).read().splitlines()
        assert lines[0] == "theta,re,im"
        assert len(lines) == 4097
        svg = open(svg_path).read()
        assert svg.startswith("<svg")
        assert "<path" in svg and "</svg>" in svg
        allowed = {"svg", "line", "circle", "path"}
        import re
        tags = set(re.findall(r"<(\w+)", svg))
        assert tags <= allowed

    def test_small_level_bound(self, tmp_path, capsys):
        out = str(tmp_path / "f3.json")
        main(["example", "f3", "--lambda", "0.5", "--out", out])
        assert main(["curve", out, "--samples", "1024"]) == 0
        text = capsys.readouterr().out
        length = float(text.split("polygonal_length: ")[1].splitlines()[0])
        assert length <= 4 * math.pi + 1e-3

    def test_disk_radius_two_bound(self, tmp_path, capsys):
        out = str(tmp_path / "fb.json")
        main(["example", "f_b", "--lambda", "0.5", "--out", out])
        assert main(["curve", out, "--samples", "1024"]) == 0
        text = capsys.readouterr().out
        max_mod = float(text.split("max_modulus: ")[1].splitlines()[0])
        assert max_mod <= 2.0 + 1e-9

    def test_sample_floor(self, tmp_path):
        path = write(tmp_path, "id.json", IDENTITY_TEXT)
        assert main(["curve", path, "--samples", "100"]) == EXIT_INPUT_ERROR

    def test_unwritable_output(self, tmp_path):
        path = write(tmp_path, "id.json", IDENTITY_TEXT)
        assert main(["curve", path, "--csv", "/nonexistent-dir/x.csv"]) \
            == EXIT_INPUT_ERROR


class TestHyperCommand:
    def test_holds(self, capsys):
        code = main(["hyper", "--which", "213", "--a", "1", "--b", "1",
                     "--c", "3", "--lambda", "2.5", "--eta", "1"])
        text = capsys.readouterr().out
        assert code == EXIT_MEMBER
        assert float(text.split("lhs: ")[1].splitlines()[0]) == pytest.approx(2.0)

    def test_equality_fails(self, capsys):
        code = main(["hyper", "--which", "215", "--a", "1", "--b", "1",
                     "--c", "4", "--lambda", "3"])
        assert code == EXIT_NON_MEMBER
        assert "equals" in capsys.readouterr().out

    def test_polynomial_condition(self, capsys):
        code = main(["hyper", "--which", "216", "--s", "1", "--c", "1",
                     "--lambda", "3"])
        text = capsys.readouterr().out
        assert code == EXIT_MEMBER
        assert float(text.split("lhs: ")[1].splitlines()[0]) == pytest.approx(2.0)

    def test_guard_violation(self, capsys):
        code = main(["hyper", "--which", "214", "--a", "1", "--b", "1",
                     "--c", "3", "--lambda", "5"])
        assert code == EXIT_INPUT_ERROR

    def test_missing_parameters(self, capsys):
        assert main(["hyper", "--which", "216"]) == EXIT_INPUT_ERROR


class TestExitCodeTotality:
    def test_no_arguments(self):
        assert main([]) == EXIT_INPUT_ERROR

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0

    def test_bad_flag(self, capsys):
        assert main(["check", "--bogus"]) == EXIT_INPUT_ERROR
