# tests/unit/test_interfaces.py
# To run these tests, use:
# poetry run pytest
import signet.interfaces as api
from signet import errors


def test_public_names_resolve():
    missing = [name for name in api.__all__ if not hasattr(api, name)]
    assert missing == []


def test_errors_share_a_base():
    for name in ("DomainError", "SingularError", "ShapeError", "NotSymplecticError", "UnsatisfiableError", "ParseError"):
        cls = getattr(api, name)
        assert issubclass(cls, api.SignetError)
        assert issubclass(cls, ValueError)
        assert cls is getattr(errors, name)


def test_error_codes_are_distinct():
    codes = {api.DomainError.code, api.SingularError.code, api.ShapeError.code}
    codes |= {api.NotSymplecticError.code, api.UnsatisfiableError.code, api.ParseError.code}
    assert codes == {"domain", "singular", "shape", "not_symplectic", "unsatisfiable", "parse"}


def test_end_to_end_trefoil():
    s = api.seifert_matrix(api.parse_braid("2: 1 1 1"))
    assert api.knot_signature(s) == -2
    assert api.signature(api.e8_matrix()).tau == 8


# End of tests/unit/test_interfaces.py
