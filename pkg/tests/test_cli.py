from fractions import Fraction

import orjson
import pytest

from cli.commands import InvariantInput, TrClassInput, VerifyInput, cmd_invariant, cmd_tr_class
from cli.rendering import render_latex, to_json
from cli.report_models import CheckStatus, show
from cli.verify_suites import SuiteRegistry, run_suite
from main import main


def run_json(capsys, *argv):
    exit_code = main([*argv, "--json"])
    return exit_code, orjson.loads(capsys.readouterr().out)


def values(report):
    return {entry["name"]: entry["value"] for entry in report["results"]}


def test_invariant_json(capsys):
    exit_code, payload = run_json(capsys, "invariant", "N", "--d", "3")
    assert exit_code == 0
    assert payload == {"name": "N", "params": {"d": "3"}, "value": "80"}


def test_invariant_json_with_several_parameters(capsys):
    exit_code, payload = run_json(capsys, "invariant", "c", "--d", "4", "--g", "4", "--gamma", "2")
    assert exit_code == 0
    assert set(payload) == {"name", "params", "value"}
    assert payload["value"] == "14"
    assert payload["params"]["gamma"] == "2"


def test_invariant_text(capsys):
    assert main(["invariant", "r", "--a", "3", "--b", "2"]) == 0
    assert "70" in capsys.readouterr().out


def test_invariant_missing_parameter(capsys):
    assert main(["invariant", "a", "--d", "3"]) == 2
    assert "--g" in capsys.readouterr().err


def test_invariant_outside_domain(capsys):
    assert main(["invariant", "a", "--d", "1", "--g", "1"]) == 2
    assert "domain" in capsys.readouterr().err


def test_unknown_invariant_is_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main(["invariant", "Z", "--d", "3"])
    assert excinfo.value.code == 2


def test_tr_class_solver(capsys):
    exit_code, report = run_json(capsys, "tr-class", "--d", "3")
    assert exit_code == 0
    assert values(report)["TR"] == "2912λ - 311δ0 - 824δ1"
    assert (values(report)["A"], values(report)["B0"], values(report)["B1"]) == ("2912", "311", "824")
    statuses = {check["name"]: check["status"] for check in report["checks"]}
    assert statuses["closed_form_corrected"] == "pass"
    assert statuses["a_constant_1885"] == "flag"
    assert statuses["higherdeltas_factor_48"] == "flag"


def test_tr_class_closed_form_as_printed(capsys):
    exit_code, report = run_json(capsys, "tr-class", "--d", "3", "--method", "closed-form", "--variant", "as_printed")
    assert exit_code == 0
    assert values(report)["A"] == str(2912 - 30160)
    assert report["parameters"]["variant"] == "as_printed"


def test_tr_class_rejects_small_degree(capsys):
    assert main(["tr-class", "--d", "2"]) == 2


def test_json_output_is_deterministic(capsys):
    main(["tr-class", "--d", "4", "--json"])
    first = capsys.readouterr().out
    main(["tr-class", "--d", "4", "--json"])
    assert capsys.readouterr().out == first


def test_latex_output(capsys):
    assert main(["tr-class", "--d", "4", "--format", "latex"]) == 0
    out = capsys.readouterr().out
    assert "10948\\lambda - 1260\\delta_{0}" in out
    assert "\\begin{tabular}" in out
    assert "a\\_constant\\_1885" in out


def test_verify_unknown_suite(capsys):
    assert main(["verify", "--suite", "nope"]) == 2
    assert "nope" in capsys.readouterr().err


def test_verify_empty_range(capsys):
    assert main(["verify", "--suite", "solver", "--d-min", "5", "--d-max", "4"]) == 2


def test_verify_pullback(capsys):
    exit_code, report = run_json(capsys, "verify", "--suite", "pullback", "--d-min", "3", "--d-max", "4")
    assert exit_code == 0
    names = {(check["name"], check["d"]) for check in report["checks"]}
    assert ("route_D2", 3) in names
    assert ("route_D3", 4) in names
    assert ("route_D3", 3) not in names


def test_verify_solver_small_range():
    checks = run_suite("solver", 3, 5)
    assert not [check for check in checks if check.failed]
    assert {check.d for check in checks if check.name == "residuals"} == {3, 4, 5}


def test_registry():
    assert SuiteRegistry.get_suite_names() == ["identities", "schubert", "solver", "pullback", "abelian", "oracle", "ratmaps"]
    with pytest.raises(KeyError):
        run_suite("nope")


def test_schubert_command(capsys):
    exit_code, report = run_json(capsys, "schubert", "--n", "4")
    assert exit_code == 0
    assert values(report)["integral"] == "5"
    assert report["checks"][0]["name"] == "catalan"


def test_schubert_not_top_degree(capsys):
    assert main(["schubert", "--n", "3", "--specials", "1"]) == 2


def test_pic_command(capsys):
    exit_code, report = run_json(capsys, "pic", "--d", "3")
    assert exit_code == 0
    assert values(report)["D2_from_TR"] == "160ψ - 200λ + 17δ0"
    assert values(report)["chi_pullback"] == "824ψ - 1208λ + 101δ0"


def test_abelian_command(capsys):
    exit_code, report = run_json(capsys, "abelian", "--g", "3", "--b", "2", "--c", "3")
    assert exit_code == 0
    assert values(report)["theta_pullback"] == "216"


def test_ratmaps_command(capsys):
    exit_code, report = run_json(capsys, "ratmaps")
    assert exit_code == 0
    assert values(report)["inversion_constant"] == "4"
    flagged = [check["name"] for check in report["checks"] if check["status"] == "flag"]
    assert flagged == ["inversion_constant_printed", "tail_parameters_printed"]


def test_oracle_command(capsys):
    exit_code, report = run_json(capsys, "oracle", "--n", "3")
    assert exit_code == 0
    assert int(values(report)["order"]) % 9 == 0
    assert values(report)["triple_torsion_choices"] == "8"
    assert values(report)["affine_triple_solutions"] == "9"


def test_commands_directly():
    report = cmd_invariant(InvariantInput(name="c", d=4, g=4, gamma=2))
    assert report.results[0].value == "14"
    assert report.results[0].params == {"d": "4", "g": "4", "gamma": "2"}
    assert report.timing_seconds is not None

    tr_report = cmd_tr_class(TrClassInput(d=4))
    assert not tr_report.exit_code
    assert orjson.loads(to_json(tr_report))["command"] == "tr-class"
    assert "\\[" in render_latex(tr_report)
    assert all(check.status is not CheckStatus.FAIL for check in tr_report.checks)


def test_verify_input_validation():
    with pytest.raises(ValueError):
        VerifyInput(suite="unknown")
    assert VerifyInput(suite="all").suite == "all"


@pytest.mark.parametrize(
    "argv",
    [
        ["tr-class", "--d", "3"],
        ["tr-class", "--d", "5", "--method", "closed-form"],
        ["verify", "--suite", "solver", "--d-min", "3", "--d-max", "4"],
        ["verify", "--suite", "abelian"],
    ],
)
def test_json_numbers_are_plain_strings(capsys, argv):
    main([*argv, "--json"])
    out = capsys.readouterr().out
    assert "Fraction(" not in out
    orjson.loads(out)


def test_solver_residuals_render_as_rationals(capsys):
    _, report = run_json(capsys, "verify", "--suite", "solver", "--d-min", "3", "--d-max", "3")
    residuals = next(check for check in report["checks"] if check["name"] == "residuals")
    assert residuals["actual"] == "[0, 0, 0]"
    published = next(check for check in report["checks"] if check["name"] == "published_values")
    assert published["actual"] == "(2912, 311, 824)"


def test_show_formats_containers_element_wise():
    assert show([Fraction(0)] * 3) == "[0, 0, 0]"
    assert show((Fraction(2912), Fraction(-311), Fraction(-824))) == "(2912, -311, -824)"
    assert show({"W": Fraction(3, 2)}) == "{W: 3/2}"
    assert show(True) == "True"
