import io
import json
import contextlib

import pytest

from orefields.cli import Config, Report, build_parser, emit, main, run_suite
from orefields.literals import (
    ExprError, parse_expression, parse_field_literal, parse_matrix,
)
from orefields.fields import GF, Qsqrt, with_parameter
from orefields.orbits import Mat2Z


def run_main(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


class TestLiterals:
    def test_rat(self):
        assert parse_field_literal("rat:2/3").rep.numerator == 2
        assert parse_field_literal("rat:2/3", 5) == GF(5).from_int(4)

    def test_quad(self):
        K = Qsqrt(2)
        assert parse_field_literal("quad:(0+1*sqrt(2))/1") == K.gen()
        assert parse_field_literal("quad:(1-2*sqrt(2))/3") == (1 - K.gen() * 2) / 3

    def test_param(self):
        K = with_parameter(GF(3))
        a = K.gen()
        assert parse_field_literal("param", 3) == a
        assert parse_field_literal("param:(a^2+1)/(a-1)", 3) == (a ** 2 + 1) / (a - 1)

    def test_ff(self):
        F9 = GF(3, 2)
        assert parse_field_literal("ff:3^2:0,1") == F9.gen()

    def test_malformed(self):
        with pytest.raises(ValueError):
            parse_field_literal("nope:1")
        with pytest.raises(ValueError):
            parse_field_literal("quad:(1+sqrt(2))/1")

    def test_matrix(self):
        assert parse_matrix("1,2,3,4") == Mat2Z(1, 2, 3, 4)
        with pytest.raises(ValueError):
            parse_matrix("1,2,3")

    def test_expression_parser(self):
        K = with_parameter(GF(5))
        a = K.gen()
        env = {"a": a}
        assert parse_expression("-a^2 + 3*a - 1", env, K.one()) == -a ** 2 + a * 3 - 1
        assert parse_expression("(a+1)/(a-1)", env, K.one()) == (a + 1) / (a - 1)
        assert parse_expression("a^-1", env, K.one()) == a.inverse()
        with pytest.raises(ExprError):
            parse_expression("a +", env, K.one())
        with pytest.raises(ExprError):
            parse_expression("b", env, K.one())


class TestEmit:
    def test_empty_report(self):
        payload = json.loads(emit(Report("demo", {}), "json"))
        assert payload["checks"] == []
        assert payload["summary"]["fail"] == 0

    def test_passing_check(self):
        report = Report("demo", {})
        report.run("ok", "one equals one", lambda: 1 == 1)
        payload = json.loads(emit(report, "json"))
        assert payload["checks"][0]["status"] == "pass"

    def test_failing_check_sets_failures(self):
        report = Report("demo", {})
        report.run("bad", "one equals two", lambda: 1 == 2)
        assert report.failures
        text = emit(report, "text")
        assert "[fail] bad" in text


class TestDriver:
    def test_verify_centers_passes(self):
        code, out = run_main(["verify", "centers", "--char", "5",
                              "--alpha", "rat:2"])
        assert code == 0
        payload = json.loads(out)
        assert payload["summary"]["fail"] == 0
        assert any(c["status"] == "out-of-scope" for c in payload["checks"])

    def test_verify_all_char2_param(self):
        code, out = run_main(["verify", "all", "--char", "2", "--alpha", "param"])
        assert code == 0
        assert json.loads(out)["summary"]["fail"] == 0

    def test_verify_morphisms_quad(self):
        code, _ = run_main(["verify", "morphisms", "--char", "0",
                            "--alpha", "quad:(0+1*sqrt(2))/1",
                            "--matrix", "1,1,0,1"])
        assert code == 0

    def test_failing_matrix_gives_exit_1(self):
        code, out = run_main(["verify", "morphisms", "--char", "3",
                              "--alpha", "param", "--matrix", "1,2,1,2"])
        assert code == 1
        assert json.loads(out)["summary"]["fail"] >= 1

    def test_bad_literal_gives_exit_2(self):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(buf):
            code = main(["verify", "centers", "--alpha", "garbage"])
        assert code == 2

    def test_orbits_finite(self):
        code, out = run_main(["orbits", "finite", "--ell", "3", "--ext", "2",
                              "--group", "sl"])
        assert code == 0
        payload = json.loads(out)
        assert any("size 6" in c["claim"] for c in payload["checks"])

    def test_orbits_cf(self):
        code, out = run_main(["orbits", "cf",
                              "--alpha", "quad:(0+1*sqrt(2))/1"])
        assert code == 0
        assert "[1;(2)]" in out

    def test_orbits_equiv(self):
        code, out = run_main(["orbits", "equiv",
                              "--alpha", "quad:(0+1*sqrt(2))/1",
                              "--beta", "quad:(1+1*sqrt(2))/1"])
        assert code == 0
        assert json.loads(out)["checks"][0]["witness"] is not None

    def test_classify(self):
        code, out = run_main(["classify", "--char", "0",
                              "--caseA", "g:quad:(0+1*sqrt(2))/1",
                              "--caseB", "q"])
        assert code == 0
        assert "not-valued-isomorphic" in out

    def test_pdo_command(self):
        code, out = run_main(["pdo", "--char", "3", "--alpha", "param",
                              "--precision", "6"])
        assert code == 0
        assert json.loads(out)["summary"]["fail"] == 0

    def test_json_deterministic(self):
        argv = ["verify", "all", "--char", "2", "--alpha", "param", "--seed", "0"]
        _, out1 = run_main(argv)
        _, out2 = run_main(argv)
        assert out1 == out2

    def test_text_format(self):
        code, out = run_main(["verify", "presentations", "--char", "3",
                              "--alpha", "param", "--format", "text"])
        assert code == 0
        assert out.startswith("suite presentations")

    def test_parser_surface(self):
        parser = build_parser()
        args = parser.parse_args(["verify", "centers", "--char", "5",
                                  "--alpha", "rat:2", "--format", "text"])
        assert args.suite == "centers" and args.fmt == "text"

    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError):
            run_suite("wat", Config())


class TestElementExpressions:
    def test_parse_ratfunc(self):
        from orefields.literals import parse_ratfunc
        from orefields.ratfunc import FunctionField2
        K = with_parameter(GF(3))
        ctx = FunctionField2(K)
        y, z = ctx.gens()
        a = ctx.const(K.gen())
        assert parse_ratfunc("y^2*z - 1", ctx) == y ** 2 * z - 1
        assert parse_ratfunc("(y + a)/(z - a)", ctx) == (y + a) / (z - a)

    def test_parse_skew_preserves_order(self):
        from orefields.literals import parse_skew
        from orefields.presentations import CaseSpec, algebra_make
        K = with_parameter(GF(3))
        pres = algebra_make(CaseSpec("g", K, K.gen()))
        f = parse_skew("x*y - y*x", pres)
        assert f == pres.y                       # the bracket [x, y] = y
        g = parse_skew("(x + y)^2", pres)
        assert g == (pres.x + pres.y) ** 2

    def test_parse_skew_t_coordinates(self):
        from orefields.literals import parse_skew
        from orefields.presentations import CaseSpec, algebra_make
        pres = algebra_make(CaseSpec("q", GF(3)), coords="yt")
        f = parse_skew("x*t - t*x", pres)
        assert f == pres.embed(pres.ctx.one())
