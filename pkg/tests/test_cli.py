import json

import pytest

from skewlr.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_product_text(capsys):
    code, out, _ = run(capsys, "product", "--algebra", "schur", "[1]", "[1]")
    assert code == 0
    assert out == "1\ts[2]\n1\ts[1,1]\n"


def test_product_json_round_trip(capsys):
    code, out, _ = run(capsys, "product", "--algebra", "schur",
                       "--format", "json", "[2,1]", "[1]")
    assert code == 0
    data = json.loads(out)
    assert data == {"terms": [
        {"coeff": "1", "index": "s[3,1]"},
        {"coeff": "1", "index": "s[2,2]"},
        {"coeff": "1", "index": "s[2,1,1]"},
    ]}


def test_product_q_uses_q_display(capsys):
    code, out, _ = run(capsys, "product", "--algebra", "q", "[1]", "[1]")
    assert code == 0
    assert out == "2\tQ[2]\n"


def test_product_ribbon(capsys):
    code, out, _ = run(capsys, "product", "--algebra", "ribbon",
                       "(2)", "(1)")
    assert code == 0
    assert out == "1\tR(3)\n1\tR(2,1)\n"


def test_skew_product_schur(capsys):
    code, out, _ = run(capsys, "skew-product", "--algebra", "schur",
                       "[2,1]/[1]", "[1]/[]")
    assert code == 0
    lines = out.splitlines()
    assert lines == [
        "1\t[3,1]/[1]",
        "1\t[2,2]/[1]",
        "1\t[2,1,1]/[1]",
        "-1\t[2,1]/[]",
        "--",
        "1\ts[3]",
        "2\ts[2,1]",
        "1\ts[1,1,1]",
    ]


def test_skew_product_kschur_golden(capsys):
    code, out, _ = run(capsys, "skew-product", "--algebra", "kschur",
                       "--k", "2", "[2,1,1]/[1]", "[2]/[]")
    assert code == 0
    assert out.splitlines()[:3] == [
        "1\t[2,2,1,1]/[1]",
        "-1\t[2,1,1,1]/[]",
        "--",
    ]


def test_skew_product_ribbon(capsys):
    code, out, _ = run(capsys, "skew-product", "--algebra", "ribbon",
                       "(2,2,1)/(1,1,1)", "(1)/()")
    assert code == 0
    head, _, tail = out.partition("--\n")
    assert set(tail.splitlines()) == {
        "1\tR(3)", "1\tR(2,1)", "1\tR(1,2)", "1\tR(1,1,1)"}


def test_skew_product_combinatorial_matches_engine(capsys):
    code, a, _ = run(capsys, "skew-product", "--algebra", "schur",
                     "[2,1]/[1]", "[1]/[]")
    code2, b, _ = run(capsys, "skew-product", "--algebra", "schur",
                      "--combinatorial", "[2,1]/[1]", "[1]/[]")
    assert code == code2 == 0
    assert a == b


def test_skew_product_json_shape(capsys):
    code, out, _ = run(capsys, "skew-product", "--algebra", "schur",
                       "--format", "json", "[2,1]/[1]", "[1]/[]")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"skew_terms", "terms"}
    assert {"coeff": "-1", "outer": "[2,1]", "inner": "[]"} in data["skew_terms"]
    assert {"coeff": "2", "index": "s[2,1]"} in data["terms"]


def test_lr_values(capsys):
    code, out, _ = run(capsys, "lr", "--algebra", "schur",
                       "[2,1]", "[2,1]", "[3,2,1]")
    assert code == 0 and out == "2\n"
    code, out, _ = run(capsys, "lr", "--algebra", "schur", "[1]", "[1]", "[2]")
    assert code == 0 and out == "1\n"
    code, out, _ = run(capsys, "lr", "--algebra", "q", "[2]", "[1]", "[2,1]")
    assert code == 0 and out == "1\n"


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--algebra", "schur",
                       "--max-degree", "3", "--check", "axioms")
    assert code == 0
    assert out.startswith("PASS axioms")


def test_verify_all_kschur(capsys):
    code, out, _ = run(capsys, "verify", "--algebra", "kschur", "--k", "2",
                       "--max-degree", "3")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "product", "--algebra", "schur", "[1", "[1]")
    assert code == 2
    code, _, err = run(capsys, "product", "--algebra", "schur", "[1,2]", "[1]")
    assert code == 2
    code, _, err = run(capsys, "product", "--algebra", "q", "[2,2]", "[1]")
    assert code == 2
    code, _, err = run(capsys, "skew-product", "--algebra", "ribbon",
                       "--combinatorial", "(1)/()", "(1)/()")
    assert code == 2
    code, _, err = run(capsys, "skew-product", "--algebra", "schur",
                       "[2,1]", "[1]/[]")
    assert code == 2
    code, _, err = run(capsys, "product", "--algebra", "kschur", "[1]", "[1]")
    assert code == 2   # kschur requires --k
    code, _, err = run(capsys, "product", "--algebra", "kschur", "--k", "2",
                       "[3]", "[1]")
    assert code == 2   # part above k


def test_degree_guard_exit_3(capsys):
    code, _, err = run(capsys, "product", "--algebra", "schur",
                       "[20]", "[20]")
    assert code == 3
    code, _, _ = run(capsys, "product", "--algebra", "schur",
                     "--max-degree", "40", "[20]", "[20]")
    assert code == 0


def test_empty_shapes(capsys):
    code, out, _ = run(capsys, "product", "--algebra", "schur", "[]", "[2]")
    assert code == 0
    assert out == "1\ts[2]\n"
