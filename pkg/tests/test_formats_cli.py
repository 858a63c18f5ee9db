import json
from fractions import Fraction

import pytest

from liecone import cli, formats
from liecone.catalog import catalog_get, catalog_list, family_j
from liecone.exterior import KForm


def test_lie_roundtrip_catalog(tmp_path):
    for name in catalog_list():
        g = catalog_get(name).algebra
        p = tmp_path / "a.lie"
        formats.write_lie(g, p)
        assert formats.read_lie(p) == g


def test_parse_comments_and_rationals():
    g = formats.parse_lie("# heisenberg\ndim 3\n1 2 3 -3/2  # bracket\n")
    assert g.constant(1, 2, 3) == Fraction(-3, 2)


@pytest.mark.parametrize("text,line", [
    ("dim 4\n1 2 x 3\n", 2), ("dim 4\n2 1 3 1\n", 2), ("dim 4\n1 2 3 1\n1 2 3 2\n", 3),
    ("dim 4\n1 2 5 1\n", 2), ("dimension 4\n", 1), ("dim 4\n1 2 3 0.5\n", 2)])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(formats.ParseError) as exc:
        formats.parse_lie(text)
    assert exc.value.line == line
    assert f":{line}:" in str(exc.value)


def test_jacobi_error_in_file():
    with pytest.raises(formats.ParseError, match="Jacobi"):
        formats.parse_lie("dim 3\n1 2 3 1\n1 3 1 1\n")


def test_j_roundtrip():
    J = family_j("nil4", "J_t", Fraction(1, 2))
    assert formats.parse_j(formats.format_j(J)) == J
    with pytest.raises(formats.ParseError):
        formats.parse_j("1 0\n0 1\n")


def test_element_json_roundtrip():
    a = KForm(4, 2, {"12": Fraction(1, 3), "34": -2})
    obj = json.loads(formats.to_json(formats.element_json(a)))
    assert formats.element_from_json(obj) == a


@pytest.fixture
def files(tmp_path):
    alg = tmp_path / "nil3.lie"
    formats.write_lie(catalog_get("nil3xR").algebra, alg)
    paths = {"alg": str(alg)}
    for key, J in [("standard", family_j("nil3xR", "standard")), ("jab", family_j("nil3xR", "J_ab", 1, 1)),
                   ("jt", family_j("nil4", "J_t", Fraction(1, 2)))]:
        p = tmp_path / f"{key}.j"
        formats.write_j(J, p)
        paths[key] = str(p)
    nil4 = tmp_path / "nil4.lie"
    formats.write_lie(catalog_get("nil4").algebra, nil4)
    paths["nil4"] = str(nil4)
    return paths


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(files, capsys, tmp_path):
    code, out, _ = run(["validate", files["alg"], "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["unimodular"] and data["betti"][2] == 4
    ab = tmp_path / "ab.lie"
    ab.write_text("dim 4\n")
    code, out, _ = run(["validate", str(ab)], capsys)
    assert "1 4 6 4 1" in out
    bad = tmp_path / "bad.lie"
    bad.write_text("dim 4\n1 2 x 3\n")
    code, _, err = run(["validate", str(bad)], capsys)
    assert code == cli.EXIT_INPUT and ":2:" in err


def test_classify_exit_codes(files, capsys):
    code, out, _ = run(["classify", files["alg"], files["standard"]], capsys)
    assert code == 0 and "compatible_form" in out
    code, _, err = run(["classify", files["alg"], files["jab"]], capsys)
    assert code == cli.EXIT_ORIENTATION and "negate" in err
    code, out, _ = run(["classify", files["alg"], files["jab"], "--zeta", "-1",
                        "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 10 and data["witness_kind"] == "obstruction_vector"
    assert not data["tamed"] and data["integrable"]
    code, _, _ = run(["classify", files["nil4"], files["jt"]], capsys)
    assert code == 10


def test_classify_json_is_exact(files, capsys):
    _, out, _ = run(["classify", files["alg"], files["standard"], "--format", "json"], capsys)
    assert "." not in "".join(c for c in out if c not in " \n")  # no floats anywhere
    data = json.loads(out)
    w = formats.element_from_json(data["witness"])
    assert w == KForm(4, 2, {"12": 1, "34": 1})
    _, again, _ = run(["classify", files["alg"], files["standard"], "--format", "json"], capsys)
    assert again == out


@pytest.mark.parametrize("cls,code", [("1,1,0", 0), ("1,1,1", 10), ("2,3,2", 0),
                                      ("1,1,0;4", 0), ("1,1", 11), ("1,a,0", 11),
                                      ("1,1,0;1;2", 11), ("0.5,1,0", 11)])
def test_cone(files, capsys, cls, code):
    got, _, _ = run(["cone", files["alg"], files["standard"], "--class", cls], capsys)
    assert got == code


def test_cone_not_tamed(files, capsys):
    code, out, _ = run(["cone", files["alg"], files["jab"], "--zeta", "-1", "--class", "1,0"], capsys)
    assert code == 10 and "not tamed" in out


def test_catalog_commands(capsys, tmp_path):
    code, out, _ = run(["catalog", "--list"], capsys)
    assert out.split() == catalog_list()
    code, out, _ = run(["catalog", "--show", "nil4"], capsys)
    assert "4 2 1" not in out and "2 4 1 -1" in out
    p = tmp_path / "nil4.lie"
    run(["catalog", "--export", "nil4", str(p)], capsys)
    assert formats.read_lie(p) == catalog_get("nil4").algebra
    code, _, err = run(["catalog", "--show", "nope"], capsys)
    assert code == cli.EXIT_INPUT and "unknown" in err


def test_non_unimodular_exit(tmp_path, files, capsys):
    p = tmp_path / "aff.lie"
    p.write_text("dim 4\n1 2 2 1\n")
    code, _, _ = run(["classify", str(p), files["standard"]], capsys)
    assert code == cli.EXIT_UNIMODULAR
