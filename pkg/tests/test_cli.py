"""Command-line interface: verdicts, payload round-trips, exit codes."""

import json

import pytest

from leibniz_lab.cli import run_command
from leibniz_lab.io import (parse_algebra, parse_dendriform, parse_document,
                            parse_matrix, parse_representation,
                            serialize_algebra, serialize_dendriform,
                            serialize_matrix, serialize_representation)
from leibniz_lab.errors import ParseError, ValidationError
from leibniz_lab import (LeibnizAlgebra, regular_rep, subadjacent,
                         tensors_equal, verify_leibniz)
from leibniz_lab.scalars import Scalar

ALGEBRA_DOC = {"dim": 4, "field": "Q", "basis": ["e1", "e2", "e3", "e4"],
               "brackets": [{"i": 0, "j": 2, "value": [{"k": 3, "c": "2"}]}]}
ZERO_DENDRIFORM_DOC = {"dim": 2, "field": "Q", "left": [], "right": []}


@pytest.fixture
def write_doc(tmp_path):
    counter = [0]

    def write(doc):
        counter[0] += 1
        path = tmp_path / ("doc%d.json" % counter[0])
        path.write_text(json.dumps(doc))
        return str(path)

    return write


def endo(rows):
    return {"matrix": [[str(e) for e in row] for row in rows]}


def test_parse_algebra_roundtrip():
    A = parse_algebra(ALGEBRA_DOC)
    assert A.dim == 4 and A.labels == ("e1", "e2", "e3", "e4")
    assert A.bracket_basis(0, 2)[3] == 2
    doc = serialize_algebra(A)
    assert tensors_equal(parse_algebra(doc), A)


def test_parse_validation_flag():
    bad = {"dim": 2, "brackets": [
        {"i": 0, "j": 1, "value": [{"k": 0, "c": "1"}]},
        {"i": 1, "j": 0, "value": [{"k": 1, "c": "1"}]}]}
    with pytest.raises(ValidationError):
        parse_algebra(bad)
    A = parse_algebra(dict(bad, validate=False))
    assert not verify_leibniz(A).ok


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_algebra({"brackets": []})            # missing dim
    with pytest.raises(ParseError):
        parse_algebra({"dim": 1, "field": "R"})    # unknown field
    with pytest.raises(ParseError):
        parse_algebra({"dim": 1, "brackets": [
            {"i": 0, "j": 5, "value": []}]})       # index out of range
    with pytest.raises(ParseError):
        parse_algebra({"dim": 1, "brackets": [
            {"i": 0, "j": 0, "value": [{"k": 0, "c": "1/0"}]}]})
    with pytest.raises(ParseError):
        parse_algebra({"dim": 1, "brackets": [
            {"i": 0, "j": 0, "value": [{"k": 0, "c": "i"}]}]})  # i over Q
    with pytest.raises(ParseError):
        parse_matrix({"matrix": [["1", "2"], ["3"]]})


def test_parse_gaussian_document():
    doc = {"dim": 1, "field": "Q(i)", "brackets": [
        {"i": 0, "j": 0, "value": [{"k": 0, "c": "1+2*i"}]}]}
    A = parse_algebra(doc, validate=False)
    assert A.field == "Q(i)"
    assert A.constants[0][0][0] == Scalar.of(1, 2)


def test_parse_document_dispatch(write_doc):
    assert parse_document(ALGEBRA_DOC).dim == 4
    assert parse_document(ZERO_DENDRIFORM_DOC).dim == 2
    assert parse_document(endo([[1, 0], [0, 1]])).rows == 2
    assert parse_document({"vectors": [["1", "0"]]}).dim == 1
    rep_doc = serialize_representation(
        regular_rep(parse_algebra(ALGEBRA_DOC)))
    assert parse_document(rep_doc).rep_dim == 4
    with pytest.raises(ParseError):
        parse_document({"unknown": 1})


def test_representation_roundtrip():
    R = regular_rep(parse_algebra(ALGEBRA_DOC))
    doc = serialize_representation(R)
    R2 = parse_representation(doc)
    assert R2.rep_dim == 4
    assert R2.left_maps == R.left_maps and R2.right_maps == R.right_maps


def test_dendriform_roundtrip():
    doc = {"dim": 1, "left": [{"i": 0, "j": 0,
                               "value": [{"k": 0, "c": "2"}]}],
           "right": [{"i": 0, "j": 0, "value": [{"k": 0, "c": "-2"}]}]}
    D = parse_dendriform(doc)
    assert tensors_equal(parse_algebra(serialize_algebra(subadjacent(D))),
                         LeibnizAlgebra.abelian(1))
    doc2 = serialize_dendriform(D)
    assert parse_dendriform(doc2).left_constants == D.left_constants


def test_cli_verify_ok(write_doc):
    verdict, status = run_command(["verify", "leibniz",
                                   write_doc(ALGEBRA_DOC)])
    assert status == 0 and verdict["ok"] and verdict["reason"] is None


def test_cli_verify_violation(write_doc):
    bad = {"dim": 2, "brackets": [
        {"i": 0, "j": 1, "value": [{"k": 0, "c": "1"}]},
        {"i": 1, "j": 0, "value": [{"k": 1, "c": "1"}]}]}
    verdict, status = run_command(["verify", "leibniz", write_doc(bad)])
    assert status == 1 and not verdict["ok"]
    assert verdict["reason"] == "LEIBNIZ_FAILS"
    assert verdict["witnesses"][0]["lhs"] != verdict["witnesses"][0]["rhs"]


def test_cli_input_errors(write_doc):
    _, status = run_command(["verify", "leibniz", "/nonexistent.json"])
    assert status == 2
    verdict, status = run_command(["verify", "leibniz"])
    assert status == 2
    verdict, status = run_command(["verify", "nonsense",
                                   write_doc(ALGEBRA_DOC)])
    assert status == 2


def test_cli_classify_product(write_doc):
    verdict, status = run_command([
        "classify", "product", write_doc(ALGEBRA_DOC),
        write_doc(endo([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0],
                        [0, 0, 0, 1]]))])
    assert status == 0
    payload = verdict["payload"]
    assert payload == {"isProduct": True, "isStrict": True,
                       "isAbelian": False, "isParacomplex": False,
                       "plusDim": 3, "minusDim": 1}


def test_cli_solve_symplectic(write_doc):
    verdict, status = run_command(["solve", "symplectic",
                                   write_doc(ALGEBRA_DOC)])
    assert status == 0
    assert verdict["payload"]["dim"] == 7
    assert verdict["payload"]["sampleNondegenerate"] is not None
    # determinism with an explicit seed
    verdict2, _ = run_command(["solve", "symplectic", write_doc(ALGEBRA_DOC),
                               "--seed", "3"])
    verdict3, _ = run_command(["solve", "symplectic", write_doc(ALGEBRA_DOC),
                               "--seed", "3"])
    assert verdict2 == verdict3


def test_cli_construct_phase_space_roundtrip(write_doc):
    verdict, status = run_command(["construct", "phase-space",
                                   write_doc(ZERO_DENDRIFORM_DOC)])
    assert status == 0 and verdict["ok"]
    rebuilt = parse_algebra(verdict["payload"]["algebra"])
    assert rebuilt.dim == 4 and verify_leibniz(rebuilt).ok


def test_cli_check_para_kahler(write_doc):
    a = write_doc(ALGEBRA_DOC)
    b = write_doc(endo([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0],
                        [1, 0, 0, 0]]))
    e = write_doc(endo([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0],
                        [0, 0, 0, -1]]))
    verdict, status = run_command(["check", "para-kahler", a, b, e])
    assert status == 0 and verdict["ok"]


def test_cli_check_phase_space_and_enumerate(write_doc):
    verdict, status = run_command(["check", "phase-space",
                                   write_doc(ZERO_DENDRIFORM_DOC)])
    assert status == 0 and verdict["ok"]
    verdict, status = run_command(["enumerate", "products",
                                   write_doc(ALGEBRA_DOC)])
    assert status == 0 and verdict["payload"]["count"] >= 6


def test_cli_construct_levi_civita(write_doc):
    a = write_doc({"dim": 2, "brackets": []})
    s = write_doc(endo([[0, 1], [-1, 0]]))
    verdict, status = run_command(["construct", "levi-civita", a, s])
    assert status == 0
    assert verdict["payload"]["star"] == [[["0", "0"], ["0", "0"]],
                                          [["0", "0"], ["0", "0"]]]


def test_cli_math_precondition_failure_exits_1(write_doc):
    a = write_doc({"dim": 2, "brackets": []})
    s = write_doc(endo([[1, 0], [0, 1]]))   # not skew
    verdict, status = run_command(["construct", "levi-civita", a, s])
    assert status == 1 and verdict["reason"] == "DegenerateForm"
