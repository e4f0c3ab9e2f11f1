# src/signet/cli/dispatch.py
"""Command table: request objects in, response objects out.

A request is a flat JSON object ``{"cmd": "<group> <name>", ...params}``.
Each command declares the parameters it accepts and the provenance tags of
the identities it exercises; every tag is listed in :data:`PROVENANCE`.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Mapping, Optional, Sequence, Tuple

from signet.cli import codec
from signet.errors import ParseError, SignetError
from signet.forms.diagonalize import diagonalize
from signet.forms.formation import Formation, boundary_formation, formation_boundary
from signet.forms.lpoly import l_polynomial
from signet.forms.matrix import EpsSymMatrix
from signet.forms.plumbing import plumbing_matrix
from signet.forms.signature import principal_minors, signature, variation
from signet.knots.braid import parse_braid
from signet.knots.seifert import SeifertMatrix, alexander, knot_signature, seifert_matrix
from signet.knots.signature import milnor_signatures, omega_signature, signature_function
from signet.maslov.dedekind import dedekind_cross_check, dedekind_sum
from signet.maslov.defect import DEFAULT_CONVENTION, search_conventions, signature_defect_check
from signet.maslov.modular import psl2_normal_form, rademacher
from signet.maslov.symplectic import Lagrangian, SympSpace, graph_lagrangian, symmetric_graph
from signet.maslov.wall import meyer, meyer_pair, wall_maslov
from signet.sturm.chain import count_roots, sturm_chain
from signet.sturm.contfrac import cf_expand, sturm_tri
from signet.sturm.hermite import bezoutian, hermite_count, jacobi_hermite
from signet.sturm.roots import isolate_roots, ra_compare, refine
from signet.witt.linking import LinkingFormZ, lens_linking, lens_normalize, linking_boundary, linking_witt_eq
from signet.witt.ratfunc import residue, witt_rx
from signet.witt.rational import witt_q

logger = logging.getLogger(__name__)

PROVENANCE: Dict[str, str] = {
    "sylvester-inertia": "signature is invariant under congruence",
    "sjgf": "signature from sign variations of leading principal minors",
    "lagrange-reduction": "diagonalization by congruence with hyperbolic 2x2 pivots",
    "l-genus": "Hirzebruch L-polynomials from the tanh power series",
    "plumbing": "symmetric matrix of a weighted graph, weights on the diagonal",
    "formation-boundary": "induced form on G-perp mod G and the image of F + G",
    "boundary-formation": "formation of a form from its hyperbolic double and graph",
    "sturm-theorem": "root count as a difference of sign variations",
    "sturm-tri": "tridiagonal form of the Sturm quotients",
    "jacobi-hermite": "root count as the signature of the Hankel matrix of power sums",
    "bezoutian": "root count as the signature of the Bezout matrix of P and P'",
    "euclid-cf": "continued fraction expansion by the Euclidean algorithm",
    "witt-q": "Witt class over Q from signature and residues at primes",
    "witt-rx": "Witt class over Q(X) from the sign function and non-real factors",
    "residue": "second residue at an irreducible polynomial",
    "linking-boundary": "boundary linking form of a nonsingular lattice",
    "lens-space": "linking form of a lens space",
    "wall-maslov": "triple index as the signature of the Wall form",
    "meyer-cocycle": "Meyer cocycle from the graphs of symplectic matrices",
    "graph-lagrangian": "graph of a symplectic map or a symmetric matrix as a lagrangian",
    "dedekind-reciprocity": "Dedekind sums by reciprocity",
    "dedekind-cotangent": "cotangent form of the Dedekind sum in interval arithmetic",
    "psl2-normal-form": "unique alternating word in S and U",
    "signature-defect": "tridiagonal signature against Dedekind sums",
    "seifert-surface": "canonical surface of a braid closure",
    "alexander": "det(z sigma - sigma^T)",
    "murasugi-signature": "signature of sigma + sigma^T",
    "tristram-levine": "signature of the hermitian form at a root of unity",
    "levine-jumps": "signature function with jumps at circle roots",
}


class SchemaError(Exception):
    """Unknown command or missing/unexpected parameter."""

    code = "usage"


@dataclass(frozen=True)
class Response:
    ok: bool
    result: Any = None
    provenance: Tuple[Tuple[str, str], ...] = ()
    error: Optional[Dict[str, str]] = None

    def as_dict(self) -> dict:
        if not self.ok:
            return {"ok": False, "error": dict(self.error or {})}
        return {"ok": True, "result": self.result, "provenance": [list(p) for p in self.provenance]}


class Params:
    """Request parameters with typed access."""

    def __init__(self, cmd: str, values: Mapping[str, Any]):
        self.cmd = cmd
        self.values = values

    def get(self, name: str, decode: Callable[[Any], Any] = lambda v: v, default: Any = ...):
        if name not in self.values:
            if default is ...:
                raise SchemaError(f"{self.cmd}: missing parameter {name!r}")
            return default
        return decode(self.values[name])

    def has(self, name: str) -> bool:
        return name in self.values


@dataclass(frozen=True)
class Command:
    name: str
    params: Tuple[str, ...]
    tags: Tuple[str, ...]
    handler: Callable[[Params], Any] = field(compare=False)


COMMANDS: Dict[str, Command] = {}


def command(name: str, params: Sequence[str], tags: Sequence[str]):
    """Register a handler under ``name``."""

    def register(fn: Callable[[Params], Any]) -> Callable[[Params], Any]:
        unknown = [t for t in tags if t not in PROVENANCE]
        if unknown:
            raise KeyError(f"undocumented provenance tags {unknown}")
        COMMANDS[name] = Command(name, tuple(params), tuple(tags), fn)
        return fn

    return register


# -------------------- forms --------------------
def _form(p: Params, name: str = "S") -> EpsSymMatrix:
    return EpsSymMatrix.of(p.get(name, codec.decode_matrix), p.get("epsilon", codec.decode_int, 1))


@command("forms signature", ("S", "epsilon", "method"), ("sylvester-inertia", "sjgf"))
def _forms_signature(p: Params):
    return signature(_form(p), p.get("method", str, "auto"))


@command("forms diagonalize", ("S",), ("lagrange-reduction", "sylvester-inertia"))
def _forms_diagonalize(p: Params):
    d = diagonalize(p.get("S", codec.decode_matrix))
    return {"A": d.A, "D": list(d.D)}


@command("forms minors", ("S",), ("sjgf",))
def _forms_minors(p: Params):
    mus = principal_minors(p.get("S", codec.decode_matrix))
    return {"minors": list(mus), "regular": mus.is_regular(), "variation": variation(mus) if mus.is_regular() else None}


def _weights(value):
    if not isinstance(value, list):
        raise ParseError("weights are an array of rationals")
    return [codec.decode_scalar(w) for w in value]


def _edges(value):
    if not isinstance(value, list):
        raise ParseError("edges are an array of vertex pairs")
    out = []
    for e in value:
        pair = codec.decode_int_list(e)
        if len(pair) != 2:
            raise ParseError(f"an edge is a pair of vertices, got {pair}")
        out.append((pair[0], pair[1]))
    return out


@command("forms plumbing", ("weights", "edges"), ("plumbing", "sjgf"))
def _forms_plumbing(p: Params):
    M = plumbing_matrix(p.get("weights", _weights), p.get("edges", _edges, []))
    return {"form": M, "signature": signature(M)}


@command("forms formation", ("S", "theta", "F", "G", "epsilon"), ("boundary-formation", "formation-boundary"))
def _forms_formation(p: Params):
    if p.has("S"):
        f = boundary_formation(p.get("S", codec.decode_matrix), p.get("epsilon", codec.decode_int, 1))
    else:
        f = Formation.of(
            p.get("theta", codec.decode_matrix),
            p.get("F", codec.decode_matrix),
            p.get("G", codec.decode_matrix, []),
            p.get("epsilon", codec.decode_int, -1),
        )
    return formation_boundary(f)


@command("forms lpoly", ("k",), ("l-genus",))
def _forms_lpoly(p: Params):
    L = l_polynomial(p.get("k", codec.decode_int))
    return {"k": L.k, "polynomial": str(L)}


# -------------------- sturm and roots --------------------
@command("sturm count", ("P", "a", "b"), ("sturm-theorem",))
def _sturm_count(p: Params):
    return count_roots(p.get("P", codec.decode_poly), p.get("a", codec.decode_rational), p.get("b", codec.decode_rational))


@command("sturm isolate", ("P", "width"), ("sturm-theorem",))
def _sturm_isolate(p: Params):
    roots = isolate_roots(p.get("P", codec.decode_poly))
    if p.has("width"):
        width = p.get("width", codec.decode_rational)
        roots = [refine(r, width) for r in roots]
    return roots


@command("sturm chain", ("P",), ("sturm-theorem",))
def _sturm_chain(p: Params):
    chain = sturm_chain(p.get("P", codec.decode_poly))
    return {"remainders": list(chain.remainders), "quotients": list(chain.quotients)}


@command("sturm tri", ("P",), ("sturm-tri",))
def _sturm_tri(p: Params):
    return sturm_tri(p.get("P", codec.decode_poly))


@command("sturm cf", ("a", "c", "mode"), ("euclid-cf",))
def _sturm_cf(p: Params):
    chi = cf_expand(p.get("a", codec.decode_int), p.get("c", codec.decode_int), p.get("mode", str, "big-entry"))
    return list(chi)


@command("sturm compare", ("x", "y"), ("sturm-theorem",))
def _sturm_compare(p: Params):
    return ra_compare(p.get("x", codec.decode_real_algebraic), p.get("y", codec.decode_real_algebraic))


@command("roots hermite", ("P", "t"), ("jacobi-hermite",))
def _roots_hermite(p: Params):
    P = p.get("P", codec.decode_poly)
    if p.has("t"):
        return {"count": hermite_count(P, p.get("t", codec.decode_rational))}
    data = jacobi_hermite(P)
    return {"count": signature(data.hermite).tau, "hermite": data.hermite}


@command("roots bezout", ("P", "Q"), ("bezoutian",))
def _roots_bezout(p: Params):
    P = p.get("P", codec.decode_poly)
    Q = p.get("Q", codec.decode_poly, P.derivative())
    B = bezoutian(P, Q)
    return {"count": signature(B).tau, "bezoutian": B}


# -------------------- witt and linking forms --------------------
def _linking(value) -> LinkingFormZ:
    return LinkingFormZ.of([codec.decode_int_list(s) for s in value])


@command("witt q", ("S",), ("witt-q",))
def _witt_q(p: Params):
    return witt_q(p.get("S", codec.decode_matrix))


@command("witt rx", ("S",), ("witt-rx",))
def _witt_rx(p: Params):
    return witt_rx(p.get("S", codec.decode_matrix))


@command("witt residue", ("S", "pi"), ("residue",))
def _witt_residue(p: Params):
    return residue(p.get("S", codec.decode_matrix), p.get("pi", codec.decode_poly))


@command("link boundary", ("S",), ("linking-boundary",))
def _link_boundary(p: Params):
    return linking_boundary(p.get("S", codec.decode_matrix))


@command("link eq", ("L1", "L2"), ("linking-boundary",))
def _link_eq(p: Params):
    return linking_witt_eq(p.get("L1", _linking), p.get("L2", _linking))


@command("lens", ("c", "a"), ("lens-space",))
def _lens(p: Params):
    c, a = p.get("c", codec.decode_int), p.get("a", codec.decode_int)
    return {"normalized": list(lens_normalize(c, a)), "linking": lens_linking(c, a)}


# -------------------- maslov and the modular group --------------------
@command("maslov triple", ("L1", "L2", "L3"), ("wall-maslov",))
def _maslov_triple(p: Params):
    bases = [p.get(name, codec.decode_matrix) for name in ("L1", "L2", "L3")]
    if not bases[0] or len(bases[0][0]) % 2:
        raise SchemaError("maslov triple: lagrangian vectors must have even length")
    space = SympSpace(len(bases[0][0]) // 2)
    return wall_maslov(*(Lagrangian.of(space, b) for b in bases))


@command("maslov meyer", ("A", "B", "g0", "g1", "g2"), ("meyer-cocycle", "wall-maslov"))
def _maslov_meyer(p: Params):
    if p.has("A"):
        return meyer_pair(p.get("A", codec.decode_matrix), p.get("B", codec.decode_matrix))
    return meyer(*(p.get(name, codec.decode_matrix) for name in ("g0", "g1", "g2")))


@command("maslov graph", ("g", "S"), ("graph-lagrangian",))
def _maslov_graph(p: Params):
    if p.has("S"):
        L = symmetric_graph(p.get("S", codec.decode_matrix))
    else:
        L = graph_lagrangian(p.get("g", codec.decode_matrix))
    return {"n": L.space.n, "basis": L.basis}


@command("mod dedekind", ("a", "c", "check"), ("dedekind-reciprocity", "dedekind-cotangent"))
def _mod_dedekind(p: Params):
    a, c = p.get("a", codec.decode_int), p.get("c", codec.decode_int)
    out = {"s": dedekind_sum(a, c)}
    if p.get("check", codec.decode_bool, False):
        out["cotangent_agrees"] = dedekind_cross_check(a, c)
    return out


@command("mod rademacher", ("A",), ("psl2-normal-form",))
def _mod_rademacher(p: Params):
    A = p.get("A", codec.decode_matrix)
    word = psl2_normal_form(A)
    return {"word": str(word), "exponents": list(word.exponents), "rademacher": rademacher(A)}


@command("mod defect", ("chi", "convention", "search"), ("signature-defect", "dedekind-reciprocity"))
def _mod_defect(p: Params):
    if p.has("search"):
        instances = [codec.decode_int_list(chi) for chi in p.get("search")]
        return [c.name for c in search_conventions(instances)]
    name = p.get("convention", str, DEFAULT_CONVENTION.name)
    lhs, rhs = signature_defect_check(p.get("chi", codec.decode_int_list), convention=name)
    return {"lhs": lhs, "rhs": rhs, "equal": lhs == rhs, "convention": name}


# -------------------- knots --------------------
def _seifert(p: Params) -> SeifertMatrix:
    if p.has("sigma"):
        return SeifertMatrix.of(p.get("sigma", codec.decode_matrix))
    return seifert_matrix(parse_braid(p.get("braid", str)))


_KNOT_INPUT = ("braid", "sigma")


@command("knot seifert", _KNOT_INPUT, ("seifert-surface",))
def _knot_seifert(p: Params):
    return _seifert(p)


@command("knot alexander", _KNOT_INPUT, ("seifert-surface", "alexander"))
def _knot_alexander(p: Params):
    return alexander(_seifert(p))


@command("knot signature", _KNOT_INPUT, ("seifert-surface", "murasugi-signature"))
def _knot_signature(p: Params):
    return knot_signature(_seifert(p))


@command("knot profile", _KNOT_INPUT + ("jobs",), ("seifert-surface", "levine-jumps", "tristram-levine"))
def _knot_profile(p: Params):
    sf = signature_function(_seifert(p), jobs=p.get("jobs", codec.decode_int, 1))
    out = sf.as_dict()
    out["milnor"] = [{"root": r, "value": v} for r, v in milnor_signatures(sf)]
    return out


@command("knot omega", _KNOT_INPUT + ("angle",), ("seifert-surface", "tristram-levine"))
def _knot_omega(p: Params):
    angle = p.get("angle", codec.decode_rational)
    return omega_signature(_seifert(p), angle.numerator, angle.denominator)


# -------------------- dispatch --------------------
def dispatch(request: Mapping[str, Any]) -> Response:
    """Route one request.

    :raises SchemaError: On an unknown command or parameter, or a missing parameter.
    :returns: ``ok = false`` responses carry the error code of a module failure.
    """
    if not isinstance(request, Mapping):
        raise SchemaError("a request is a json object")
    name = request.get("cmd")
    cmd = COMMANDS.get(name) if isinstance(name, str) else None
    if cmd is None:
        raise SchemaError(f"unknown command {name!r}")
    values = {k: v for k, v in request.items() if k != "cmd"}
    extra = sorted(set(values) - set(cmd.params))
    if extra:
        raise SchemaError(f"{name}: unexpected parameters {extra}")
    try:
        result = codec.encode(cmd.handler(Params(name, values)))
    except SignetError as exc:
        logger.debug("dispatch: %s failed with %s", name, exc.code)
        return Response(False, error={"code": exc.code, "message": str(exc)})
    return Response(True, result, tuple((t, PROVENANCE[t]) for t in cmd.tags))


def respond(request: Mapping[str, Any]) -> Response:
    """Like :func:`dispatch` but schema errors become ``ok = false`` responses."""
    try:
        return dispatch(request)
    except SchemaError as exc:
        return Response(False, error={"code": exc.code, "message": str(exc)})
