# tests/unit/test_cli_dispatch.py
# To run these tests, use:
# poetry run pytest
import pytest

from signet.cli.dispatch import COMMANDS, PROVENANCE, SchemaError, dispatch, respond
from signet.maslov.defect import DEFAULT_CONVENTION


def _ok(request):
    response = dispatch(request)
    assert response.ok, response.error
    return response.as_dict()["result"]


# Successful commands
def test_forms_signature():
    out = dispatch({"cmd": "forms signature", "S": [["2", "1"], ["1", "2"]]}).as_dict()
    assert out["ok"] is True
    assert out["result"] == {"p": 2, "q": 0, "nullity": 0}
    assert [tag for tag, _ in out["provenance"]] == ["sylvester-inertia", "sjgf"]


def test_forms_minors_and_lpoly():
    assert _ok({"cmd": "forms minors", "S": [["0", "1"], ["1", "0"]]}) == {
        "minors": ["1", "0", "-1"],
        "regular": False,
        "variation": None,
    }
    assert _ok({"cmd": "forms lpoly", "k": 1}) == {"k": 1, "polynomial": "1/3*p1"}


def test_sturm_commands():
    P = ["-1", "0", "1"]
    assert _ok({"cmd": "sturm count", "P": P, "a": "-2", "b": "2"}) == 2
    assert _ok({"cmd": "sturm cf", "a": 7, "c": 3}) == ["3", "2", "2"]
    assert _ok({"cmd": "sturm cf", "a": "3", "c": "2", "mode": "even"}) == ["2", "2"]
    roots = _ok({"cmd": "sturm isolate", "P": ["-2", "0", "1"], "width": "1/100"})
    assert len(roots) == 2
    assert roots[1]["minpoly"] == ["-2", "0", "1"]
    x = {"minpoly": ["-2", "0", "1"], "interval": ["0", "3"]}
    y = {"minpoly": ["-3", "2"], "interval": ["3/2", "3/2"]}
    assert _ok({"cmd": "sturm compare", "x": x, "y": y}) == -1


def test_root_counting_matrices():
    assert _ok({"cmd": "roots hermite", "P": ["2", "-3", "1"], "t": "5"}) == {"count": 2}
    out = _ok({"cmd": "roots bezout", "P": ["-1", "0", "1"]})
    assert out["count"] == 2


def test_lens_and_linking():
    out = _ok({"cmd": "lens", "c": 5, "a": 7})
    assert out["normalized"] == [5, 2]
    assert out["linking"] == {"summands": [[5, 2]]}
    assert _ok({"cmd": "link eq", "L1": [[5, 1], [5, 4]], "L2": []}) is True


def test_witt_q():
    assert _ok({"cmd": "witt q", "S": [["2"]]}) == {"signature": 1, "dim_mod2": 1, "two_adic": 1, "local": []}


def _strs(rows):
    return [[str(x) for x in r] for r in rows]


def test_forms_plumbing():
    edges = [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [4, 7]]
    out = _ok({"cmd": "forms plumbing", "weights": ["2"] * 8, "edges": edges})
    assert out["signature"] == {"p": 8, "q": 0, "nullity": 0}
    assert _strs(out["form"]["entries"])[0] == ["2", "1", "0", "0", "0", "0", "0", "0"]
    chain = _ok({"cmd": "forms plumbing", "weights": ["-2", "-2"], "edges": [[0, 1]]})
    assert chain["signature"] == {"p": 0, "q": 2, "nullity": 0}


def test_forms_formation():
    J = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    F, G = [[1, 0, 0, 0], [0, 1, 0, 0]], [[1, 0, 0, 0]]
    out = _ok({"cmd": "forms formation", "theta": J, "F": F, "G": G})
    assert out["form"]["epsilon"] == -1
    assert _strs(out["form"]["entries"]) == [["0", "1"], ["-1", "0"]]
    assert _strs(out["lagrangian"]) == [["1", "0"]]
    assert _ok({"cmd": "forms formation", "S": [["2"]]})["form"]["entries"] == []


def test_maslov_graph():
    out = _ok({"cmd": "maslov graph", "g": [[1, 0], [0, 1]]})
    assert out["n"] == 2
    assert _strs(out["basis"]) == [["1", "1", "0", "0"], ["0", "0", "1", "-1"]]
    out = _ok({"cmd": "maslov graph", "S": [["2"]]})
    assert out["n"] == 1
    assert _strs(out["basis"]) == [["1", "2"]]


def test_modular_commands():
    assert _ok({"cmd": "mod dedekind", "a": 1, "c": 3}) == {"s": "1/18"}
    assert _ok({"cmd": "mod dedekind", "a": 2, "c": 7, "check": True})["cotangent_agrees"] is True
    assert _ok({"cmd": "mod rademacher", "A": [[1, 1], [0, 1]]}) == {"word": "U S", "exponents": [1, 0], "rademacher": 1}
    assert _ok({"cmd": "mod defect", "chi": [2, 2]}) == {
        "lhs": "2/3",
        "rhs": "2/3",
        "equal": True,
        "convention": DEFAULT_CONVENTION.name,
    }
    assert DEFAULT_CONVENTION.name in _ok({"cmd": "mod defect", "search": [[2, 2], [3], [-2]]})


def test_maslov_commands():
    p, q, g = [["1", "0"]], [["0", "1"]], [["1", "1"]]
    assert _ok({"cmd": "maslov triple", "L1": p, "L2": q, "L3": g}) == 1
    identity = [[1, 0], [0, 1]]
    assert _ok({"cmd": "maslov meyer", "A": identity, "B": identity}) == 0
    assert _ok({"cmd": "maslov meyer", "g0": identity, "g1": identity, "g2": identity}) == 0


def test_knot_commands():
    assert _ok({"cmd": "knot signature", "braid": "2: 1 1 1"}) == -2
    assert _ok({"cmd": "knot alexander", "braid": "3: 1 -2 1 -2"}) == ["1", "-3", "1"]
    assert _ok({"cmd": "knot seifert", "braid": "2: 1 1 1"}) == {
        "sigma": [["-1", "1"], ["0", "-1"]],
        "components": 1,
    }
    assert _ok({"cmd": "knot omega", "sigma": [[-1, 1], [0, -1]], "angle": "1/3"}) == -2
    profile = _ok({"cmd": "knot profile", "braid": "2: 1 1 1", "jobs": 2})
    assert profile["plateaus"] == [0, -2]
    assert profile["milnor"][0]["value"] == "-1"


# Failures
@pytest.mark.parametrize(
    "request_, code",
    [
        ({"cmd": "sturm count", "P": ["-1", "0", "1"], "a": "1", "b": "1"}, "domain"),
        ({"cmd": "witt q", "S": [["1", "1"], ["1", "1"]]}, "singular"),
        ({"cmd": "knot seifert", "braid": "two: 1"}, "parse"),
        ({"cmd": "sturm cf", "a": 1, "c": 2}, "unsatisfiable"),
        ({"cmd": "maslov meyer", "A": [[2, 0], [0, 1]], "B": [[1, 0], [0, 1]]}, "not_symplectic"),
        ({"cmd": "forms signature", "S": [["1", "2"]]}, "shape"),
        ({"cmd": "sturm count", "P": ["-1", "0", "1"], "a": 0.5, "b": "2"}, "parse"),
        ({"cmd": "forms plumbing", "weights": ["1", "1"], "edges": [[0, 0]]}, "domain"),
        ({"cmd": "forms plumbing", "weights": ["1", "1"], "edges": [[0, 1, 1]]}, "parse"),
        ({"cmd": "maslov graph", "g": [[2, 0], [0, 1]]}, "not_symplectic"),
        ({"cmd": "forms formation", "theta": [[0, 1], [-1, 0]], "F": [[1, 0], [0, 1]]}, "domain"),
    ],
)
def test_module_failures_become_responses(request_, code):
    out = dispatch(request_).as_dict()
    assert out["ok"] is False
    assert out["error"]["code"] == code


@pytest.mark.parametrize(
    "request_",
    [
        {"cmd": "forms nothing"},
        {"cmd": "sturm count", "P": ["1", "1"], "a": "0"},
        {"cmd": "lens", "c": 5, "a": 2, "extra": 1},
        {"P": ["1"]},
        ["not", "an", "object"],
    ],
)
def test_schema_errors(request_):
    with pytest.raises(SchemaError):
        dispatch(request_)
    out = respond(request_).as_dict()
    assert out == {"ok": False, "error": {"code": "usage", "message": out["error"]["message"]}}


def test_every_tag_is_documented():
    for cmd in COMMANDS.values():
        assert cmd.tags
        assert all(tag in PROVENANCE for tag in cmd.tags)


# End of tests/unit/test_cli_dispatch.py
