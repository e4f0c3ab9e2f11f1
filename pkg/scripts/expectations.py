# scripts/expectations.py
"""Print worked examples for each area of signet next to their expected values.

Run with ``poetry run python scripts/expectations.py``.
"""

from fractions import Fraction

from signet.cli.codec import encode
from signet.exact.poly import Poly
from signet.forms.plumbing import e8_matrix
from signet.forms.signature import principal_minors, signature
from signet.knots.braid import parse_braid
from signet.knots.seifert import alexander, knot_signature, seifert_matrix
from signet.knots.signature import signature_function
from signet.maslov.dedekind import dedekind_cross_check, dedekind_sum
from signet.maslov.defect import DEFAULT_CONVENTION, signature_defect_check
from signet.maslov.modular import T_MATRIX, psl2_normal_form, rademacher
from signet.maslov.symplectic import coordinate_lagrangian, symmetric_graph
from signet.maslov.wall import wall_maslov
from signet.sturm.chain import count_roots, sturm_chain
from signet.sturm.contfrac import cf_eval, cf_expand
from signet.sturm.roots import isolate_roots, refine
from signet.witt.linking import lens_linking, lens_normalize, linking_boundary, linking_witt_eq
from signet.witt.rational import witt_q


def _show(label: str, got, expected) -> None:
    mark = "ok" if got == expected else "MISMATCH"
    print(f"•\t{label} → {got} (expected {expected}) [{mark}]")


def print_form_expectations() -> None:
    print("Forms sample expectations")
    E8 = e8_matrix()
    print("Doing •\tsignature of E8 → (8, 0, 0)")
    prof = signature(E8)
    _show("E8 (p, q, nullity)", (prof.p, prof.q, prof.nullity), (8, 0, 0))
    mus = principal_minors(E8)
    print(f"  leading minors: {[str(m) for m in mus]}")
    _show("hyperbolic plane via lagrange", signature([[0, 1], [1, 0]], "lagrange").tau, 0)


def print_sturm_expectations() -> None:
    print("Sturm sample expectations")
    P = Poly([-1, 0, 1])
    chain = sturm_chain(P)
    print(f"Doing •\tSturm chain of {P}")
    for k, R in enumerate(chain.remainders):
        print(f"  P_{k} = {R}")
    _show("roots of X^2 - 1 in [-2, 2]", count_roots(P, -2, 2), 2)
    print("Doing •\tisolate sqrt(2) to width 1/1000")
    root = refine(isolate_roots(Poly([-2, 0, 1]))[-1], "1/1000")
    print(f"  {encode(root)}")
    chi = cf_expand(7, 3)
    _show("7/3 with entries >= 2", [str(x) for x in chi], ["3", "2", "2"])
    _show("value of the expansion", str(cf_eval(chi).value), "7/3")
    _show("3/2 with even entries", [str(x) for x in cf_expand(3, 2, "even")], ["2", "2"])


def print_witt_expectations() -> None:
    print("Witt sample expectations")
    _show("<3> + <5> equals <8> + <15/8>", witt_q([[3, 0], [0, 5]]) == witt_q([[8, 0], [0, Fraction(15, 8)]]), True)
    _show("E8 equals eight copies of <1>", witt_q(e8_matrix()) == witt_q([[int(i == j) for j in range(8)] for i in range(8)]), True)
    _show("L(7, 3) normalized", lens_normalize(7, 10), (7, 3))
    boundary = linking_boundary([[3, 1], [1, 3]])
    print(f"  boundary linking form of [[3, 1], [1, 3]]: {boundary.as_list()}")
    _show("boundary of [[5]] matches L(5, 1)", linking_witt_eq(linking_boundary([[5]]), lens_linking(5, 1)), True)


def print_maslov_expectations() -> None:
    print("Maslov and modular sample expectations")
    p, q = coordinate_lagrangian(1, "p"), coordinate_lagrangian(1, "q")
    _show("triple index (p, q, graph of [[1]])", wall_maslov(p, q, symmetric_graph([[1]])), 1)
    _show("triple index (p, q, graph of [[-1]])", wall_maslov(p, q, symmetric_graph([[-1]])), -1)
    _show("s(1, 3)", str(dedekind_sum(1, 3)), "1/18")
    _show("s(5, 12) cotangent cross-check", dedekind_cross_check(5, 12), True)
    _show("normal form of T", str(psl2_normal_form(T_MATRIX)), "U S")
    _show("Rademacher phi(T)", rademacher(T_MATRIX), 1)
    lhs, rhs = signature_defect_check([2, 2])
    print(f"Doing •\tdefect identity for chi = (2, 2) under {DEFAULT_CONVENTION.name}")
    _show("lhs, rhs", (str(lhs), str(rhs)), ("2/3", "2/3"))


def print_knot_expectations() -> None:
    print("Knot sample expectations")
    for name, text, tau, delta in (
        ("trefoil", "2: 1 1 1", -2, ["1", "-1", "1"]),
        ("figure-eight", "3: 1 -2 1 -2", 0, ["1", "-3", "1"]),
    ):
        s = seifert_matrix(parse_braid(text))
        print(f"Doing •\t{name} ({text})")
        print(f"  seifert matrix: {encode(s)['sigma']}")
        _show("signature", knot_signature(s), tau)
        _show("alexander", encode(alexander(s)), delta)
    sf = signature_function(seifert_matrix(parse_braid("2: 1 1 1")))
    _show("trefoil signature function plateaus", sf.plateaus, (0, -2))


def main():
    print("-----------------------------------------")
    print_form_expectations()
    print("----------------------------------------")
    print_sturm_expectations()
    print("----------------------------------------")
    print_witt_expectations()
    print("----------------------------------------")
    print_maslov_expectations()
    print("----------------------------------------")
    print_knot_expectations()


if __name__ == "__main__":
    main()
