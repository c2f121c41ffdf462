import json

import pytest

from conjlogic.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_predict_prints_value(capsys):
    code, out, err = invoke(capsys, "predict", "<XZ,ZX>", "<YY>")
    assert (code, out, err) == (0, "1\n", "")


def test_predict_indeterminate_and_negative(capsys):
    code, out, _ = invoke(capsys, "predict", "<ZZ>", "<ZI>")
    assert (code, out) == (0, "?\n")
    code, out, _ = invoke(capsys, "predict", "<XX,ZZ>", "<YY>")
    assert (code, out) == (0, "0\n")
    code, out, _ = invoke(capsys, "predict", "<XX,ZZ>", "<YY>", "--theory", "toy")
    assert (code, out) == (0, "1\n")


def test_reduce_worked_example(capsys):
    code, out, _ = invoke(capsys, "reduce", "<XYZIZY>")
    assert code == 0
    assert "S@2; S@6; H@2; H@6; CZ@(1,2); CZ@(1,3); CZ@(1,5); CZ@(1,6)" in out
    assert "reduced: <XIIIII>" in out
    assert "relation: single" in out


def test_reduce_pair_and_set(capsys):
    code, out, _ = invoke(capsys, "reduce", "<IX,IY>")
    assert code == 0
    assert "relation: incompatible-same-system" in out
    code, out, _ = invoke(capsys, "reduce", "<ZI,IZ>")
    assert "relation: compatible-distinct-systems" in out
    code, _, err = invoke(capsys, "reduce", "<XII,IXI,ZIZ>")
    assert code == 1
    assert "incompatible" in err


def test_reduce_set_three_props(capsys):
    code, out, _ = invoke(capsys, "reduce", "<XII,IXI,IIX>")
    assert code == 0
    assert "reduced: <XII> <IXI> <IIX>" in out


def test_laws_text_and_json(capsys):
    code, out, _ = invoke(capsys, "laws")
    assert code == 0
    assert "E9" in out and "FAILS" in out and "(I2) Law of syllogism" in out
    code, out, _ = invoke(capsys, "laws", "--format", "json")
    data = json.loads(out)
    assert len(data) == 21
    failing = {entry["law_id"] for entry in data if not entry["holds"]}
    assert failing == {"E9", "E11", "I6"}


def test_eval_with_assignment(capsys):
    code, out, _ = invoke(capsys, "eval", "p | !p", "--assign", "p=?")
    assert (code, out) == (0, "?\n")
    code, out, _ = invoke(capsys, "eval", "p & !p", "--assign", "p=1")
    assert (code, out) == (0, "0\n")


def test_eval_table(capsys):
    code, out, _ = invoke(capsys, "eval", "p -> q")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "p q  value"
    assert len(lines) == 10
    assert "? 0  0" in out and "? ?  1" in out


def test_eval_errors(capsys):
    code, _, err = invoke(capsys, "eval", "p &", "--assign", "p=1")
    assert code == 1 and err
    code, _, err = invoke(capsys, "eval", "p", "--assign", "q=1")
    assert code == 1 and "missing" in err


def test_closure_streams_sorted(capsys):
    code, out, _ = invoke(capsys, "closure", "<XZ,ZX>")
    assert code == 0
    assert out == "<II>\n<XZ>\n<YY>\n<ZX>\n"


def test_measure_deterministic_bytes(capsys):
    args = ("measure", "<ZI>", "<XI>", "<XI>", "--seed", "42")
    code1, out1, _ = invoke(capsys, *args)
    code2, out2, _ = invoke(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    lines = out1.strip().split("\n")
    assert len(lines) == 3
    assert "(random)" in lines[0]
    assert "(predicted)" in lines[1]
    assert lines[2].startswith("state: ")


def test_measure_predicted_question(capsys):
    code, out, _ = invoke(capsys, "measure", "<ZI>", "<ZI>", "--seed", "1")
    assert code == 0
    assert "-> 0 (predicted)" in out
    assert "state: <ZI>" in out


def test_measure_requires_seed(capsys):
    code, _, err = invoke(capsys, "measure", "<ZI>", "<XI>")
    assert code == 1
    assert "seed" in err


def test_pm_text(capsys):
    code, out, _ = invoke(capsys, "pm")
    assert code == 0
    assert "satisfiable: no" in out
    assert "column 3: ZZ ^ XX ^ YY = 1" in out
    code, out, _ = invoke(capsys, "pm", "--theory", "toy")
    assert "satisfiable: yes" in out and "witness:" in out


def test_consistency_exit_codes(capsys):
    code, out, _ = invoke(capsys, "consistency")
    assert code == 0
    assert "contradiction: no" in out
    code, out, _ = invoke(capsys, "consistency", "--cz", "tilde")
    assert code == 2
    assert "route a: <YIY>" in out
    assert "route b: <-YIY>" in out
    assert "contradiction: yes" in out


def test_contradictory_generators_exit_2(capsys):
    code, _, err = invoke(capsys, "predict", "<XI,-XI>", "<IX>")
    assert code == 2
    assert "contradiction" in err.lower()


def test_parse_error_exit_1(capsys):
    code, _, err = invoke(capsys, "predict", "<XQ>", "<YY>")
    assert code == 1
    assert "position 2" in err
    code, _, err = invoke(capsys, "nonsense")
    assert code == 1
    code, _, err = invoke(capsys)
    assert code == 1


def test_incompatible_set_exit_1(capsys):
    code, _, err = invoke(capsys, "closure", "<ZI,XI>")
    assert code == 1
    assert "incompatible" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("laws",),
        ("predict", "<XZ,ZX>", "<YY>"),
        ("closure", "<XI,IX>"),
        ("pm", "--theory", "toy"),
        ("consistency", "--cz", "tilde"),
        ("reduce", "<XYZIZY>"),
        ("measure", "<ZI>", "<XI>", "--seed", "9"),
        ("eval", "p -> q"),
    ],
)
def test_json_round_trips_byte_identical(capsys, argv):
    code, out, _ = invoke(capsys, *argv, "--format", "json")
    assert out.endswith("\n")
    reparsed = json.dumps(json.loads(out), indent=2) + "\n"
    assert reparsed == out


def test_format_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("CONJLOGIC_FORMAT", "json")
    code, out, _ = invoke(capsys, "predict", "<XZ,ZX>", "<YY>")
    assert code == 0
    assert json.loads(out)["value"] == "1"
    monkeypatch.setenv("CONJLOGIC_FORMAT", "yaml")
    code, _, err = invoke(capsys, "predict", "<XZ,ZX>", "<YY>")
    assert code == 1 and "CONJLOGIC_FORMAT" in err


def test_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("CONJLOGIC_FORMAT", "json")
    code, out, _ = invoke(capsys, "predict", "<XZ,ZX>", "<YY>", "--format", "text")
    assert (code, out) == (0, "1\n")


def test_bench_smoke(capsys):
    code, out, _ = invoke(
        capsys, "bench", "--n", "32", "--k", "4", "--reps", "2", "--seed", "3"
    )
    assert code == 0
    assert "reduce_set median=" in out
    assert "gates/s" in out


def test_bench_rejects_k_above_n(capsys):
    code, _, err = invoke(capsys, "bench", "--n", "8", "--k", "9", "--reps", "1")
    assert code == 1 and "exceeds" in err


def test_identical_invocations_identical_bytes(capsys):
    first = invoke(capsys, "pm", "--theory", "toy", "--format", "json")
    second = invoke(capsys, "pm", "--theory", "toy", "--format", "json")
    assert first == second
