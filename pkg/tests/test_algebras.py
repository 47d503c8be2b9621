"""Structure-constant algebras: catalog, validation, serialization, forms."""

from fractions import Fraction

import pytest

from currentalg.algebras import (
    AssocAlgebra,
    LieAlgebra,
    ValidationError,
    algebra_from_dict,
    algebra_to_dict,
    annihilator_assoc,
    assoc_truncated_poly,
    assoc_zero_mult,
    build_assoc,
    build_lie,
    center_lie,
    current,
    derived_subalgebra,
    killing_form,
    lie_abelian,
    lie_direct_sum,
    lie_heisenberg3,
    lie_sl,
    lie_sl2,
    parse_algebra_file,
    product_form,
    residue_form,
    serialize_algebra,
    square_assoc,
)
from currentalg.exactlin import Matrix
from currentalg.algebras import BilinearForm


def test_sl2_weight_basis_table():
    sl2 = lie_sl2()
    assert sl2.labels == ("e-", "h", "e+")
    assert sl2.bracket(0, 1) == ((0, Fraction(1)),)
    assert sl2.bracket(0, 2) == ((1, Fraction(1)),)
    assert sl2.bracket(1, 2) == ((2, Fraction(1)),)
    assert sl2.bracket(1, 0) == ((0, Fraction(-1)),)
    assert sl2.bracket(0, 0) == ()
    assert not sl2.is_abelian


def test_sl_n_catalog():
    for n in (2, 3, 4):
        g = lie_sl(n)
        assert g.dim == n * n - 1
        assert g.sl_summands == (n,)
        assert center_lie(g).dim == 0
        assert derived_subalgebra(g).dim == g.dim
    sl3 = lie_sl(3)
    assert sl3.labels == ("e21", "e31", "e32", "h1", "h2", "e12", "e13", "e23")
    with pytest.raises(ValueError):
        lie_sl(1)


def test_heisenberg_and_abelian():
    h = lie_heisenberg3()
    assert h.labels == ("x", "y", "z")
    assert h.bracket(0, 1) == ((2, Fraction(1)),)
    assert center_lie(h).dim == 1
    assert derived_subalgebra(h).dim == 1
    ab = lie_abelian(4)
    assert ab.is_abelian and center_lie(ab).dim == 4
    assert derived_subalgebra(ab).dim == 0


def test_direct_sum():
    s = lie_direct_sum([lie_sl2(), lie_sl(3)])
    assert s.dim == 11
    assert s.labels[:3] == ("e-.0", "h.0", "e+.0")
    assert s.sl_summands == (2, 3)
    # Summands commute with each other.
    assert s.bracket(0, 5) == ()
    assert s.bracket(0, 1) == ((0, Fraction(1)),)
    # Summand list collapses once a non-sl part appears.
    assert lie_direct_sum([lie_sl2(), lie_heisenberg3()]).sl_summands is None


def test_truncated_polynomial_algebras():
    a4 = assoc_truncated_poly(4)
    assert a4.labels == ("t", "t^2", "t^3")
    assert a4.degrees == (1, 2, 3)
    assert a4.tpoly_order == 4
    assert a4.product(0, 1) == ((2, Fraction(1)),)
    assert a4.product(1, 2) == ()
    assert annihilator_assoc(a4).dim == 1
    assert square_assoc(a4).dim == 2

    u = assoc_truncated_poly(3, unital=True)
    assert u.labels == ("1", "t", "t^2")
    assert u.unital and u.degrees == (0, 1, 2)
    assert u.unit == (Fraction(1), Fraction(0), Fraction(0))
    assert annihilator_assoc(u).dim == 0
    assert square_assoc(u).dim == 3

    z = assoc_zero_mult(2)
    assert z.product(0, 1) == () and annihilator_assoc(z).dim == 2


def test_jacobi_violation_carries_witness():
    with pytest.raises(ValidationError) as exc:
        LieAlgebra(
            ("x", "y", "z"),
            {(0, 1): ((2, Fraction(1)),),
             (0, 2): ((1, Fraction(1)),),
             (1, 2): ((1, Fraction(1)),)},
        )
    assert exc.value.axiom == "jacobi"
    assert exc.value.witness == (0, 1, 2)


def test_associativity_violation_carries_witness():
    with pytest.raises(ValidationError) as exc:
        AssocAlgebra(("a", "b"), {(0, 0): ((1, Fraction(1)),),
                                  (0, 1): ((0, Fraction(1)),)})
    assert exc.value.axiom == "associativity"
    assert exc.value.witness == (0, 0, 1)


def test_unital_flag_requires_identity():
    with pytest.raises(ValidationError) as exc:
        AssocAlgebra(("a",), {}, unital=True)
    assert exc.value.axiom == "unital"


def test_json_round_trip(tmp_path):
    for alg in (lie_sl2(), lie_sl(3), lie_heisenberg3(),
                assoc_truncated_poly(4), assoc_truncated_poly(3, unital=True)):
        back = algebra_from_dict(algebra_to_dict(alg))
        assert back.labels == alg.labels
        assert back.table == alg.table
        if isinstance(alg, AssocAlgebra):
            assert back.unital == alg.unital
            assert back.degrees == alg.degrees
        path = tmp_path / "alg.json"
        serialize_algebra(alg, str(path))
        back2 = parse_algebra_file(str(path))
        assert back2.table == alg.table


def test_from_dict_accepts_consistent_mirror_entries():
    d = algebra_to_dict(lie_sl2())
    d["table"].append({"i": 1, "j": 0, "terms": [{"k": 0, "c": "-1"}]})
    assert algebra_from_dict(d).bracket(0, 1) == ((0, Fraction(1)),)


def test_from_dict_rejects_inconsistent_mirror():
    d = algebra_to_dict(lie_sl2())
    d["table"].append({"i": 1, "j": 0, "terms": [{"k": 0, "c": "1"}]})
    with pytest.raises(ValidationError) as exc:
        algebra_from_dict(d)
    assert exc.value.axiom == "anticommutativity"
    assert exc.value.witness == (0, 1)


def test_from_dict_rejects_nonzero_diagonal_bracket():
    d = algebra_to_dict(lie_sl2())
    d["table"].append({"i": 2, "j": 2, "terms": [{"k": 0, "c": "1"}]})
    with pytest.raises(ValidationError) as exc:
        algebra_from_dict(d)
    assert exc.value.axiom == "anticommutativity"


def test_parse_rejects_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(ValidationError):
        parse_algebra_file(str(path))
    path.write_text('{"kind": "lie", "dim": 2}')
    with pytest.raises(ValidationError):
        parse_algebra_file(str(path))


def test_build_descriptors():
    assert build_lie("sl2").labels == ("e-", "h", "e+")
    assert build_lie("sl4").dim == 15
    assert build_lie("abelian:3").dim == 3
    assert build_lie("heis3").labels == ("x", "y", "z")
    assert build_lie("sum:sl2+sl3").sl_summands == (2, 3)
    assert build_assoc("tpoly:4").tpoly_order == 4
    assert build_assoc("tpoly1:3").unital
    assert build_assoc("zero:2").dim == 2
    with pytest.raises(ValueError):
        build_lie("e8")
    with pytest.raises(ValueError):
        build_assoc("tpoly:1")


def test_build_from_file(tmp_path):
    path = tmp_path / "sl2.json"
    serialize_algebra(lie_sl2(), str(path))
    assert build_lie(str(path)).table == lie_sl2().table


def test_current_algebra_structure():
    c = current(lie_sl2(), assoc_truncated_poly(3))
    assert c.dim == 6
    assert c.labels[:4] == ("e-*t", "h*t", "e+*t", "e-*t^2")
    assert c.degrees == (1, 1, 1, 2, 2, 2)
    for w in range(c.dim):
        i, p = c.unflat(w)
        assert c.flat(i, p) == w
    # [e- t, e+ t] = h t^2 and degree-4 products truncate to zero.
    assert c.bracket(c.flat(0, 0), c.flat(2, 0)) == ((c.flat(1, 1), Fraction(1)),)
    assert c.bracket(c.flat(0, 1), c.flat(2, 1)) == ()
    # Degree blocks sum to zero bracket against an annihilated layer.
    assert derived_subalgebra(c).dim == 3


def test_killing_form_values():
    k2 = killing_form(lie_sl2())
    assert k2.matrix == Matrix([[0, 0, -2], [0, 2, 0], [-2, 0, 0]])
    assert k2.symmetry == "symmetric" and k2.is_nondegenerate()
    sl3 = lie_sl(3)
    k3 = killing_form(sl3)
    assert k3.is_nondegenerate()
    h1, h2 = sl3.labels.index("h1"), sl3.labels.index("h2")
    assert (k3.matrix[(h1, h1)], k3.matrix[(h1, h2)], k3.matrix[(h2, h2)]) == (12, -6, 12)
    assert k3.matrix[(sl3.labels.index("e21"), sl3.labels.index("e12"))] == 6
    # Nilpotent algebras have vanishing Killing form.
    assert killing_form(lie_heisenberg3()).matrix.is_zero()


def test_residue_form():
    r = residue_form(assoc_truncated_poly(4))
    assert r.matrix == Matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert r.is_nondegenerate()
    with pytest.raises(ValueError):
        residue_form(assoc_truncated_poly(3, unital=True))


def test_product_form():
    L, A = lie_sl2(), assoc_truncated_poly(3)
    c = current(L, A)
    pf = product_form(killing_form(L), residue_form(A), c)
    assert pf.symmetry == "symmetric" and pf.is_nondegenerate()
    assert pf.matrix[(c.flat(1, 0), c.flat(1, 1))] == 2
    assert pf.matrix[(c.flat(1, 0), c.flat(1, 0))] == 0


def test_bilinear_form_symmetry_autodetect():
    assert BilinearForm(Matrix([[0, 1], [-1, 0]])).symmetry == "skew"
    assert BilinearForm(Matrix([[1, 0], [0, 0]])).symmetry == "symmetric"
    assert not BilinearForm(Matrix([[1, 0], [0, 0]])).is_nondegenerate()
