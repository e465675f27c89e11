import random
from fractions import Fraction

import pytest

from koszul.complexes import ModuleMap
from koszul.groebner import (
    FreeModule,
    GBCache,
    InhomogeneousError,
    combination,
    groebner_basis,
    lead_module,
    minimal_generators,
    normal_form,
    syzygies,
    verify_buchberger,
)
from koszul.linalg import map_rank, rank, syzygy_dim
from koszul.ring import QQ, FieldSpec

from conftest import F32003, make_ring

R2 = make_ring("x,y")
R3 = make_ring("x,y,z")


def ideal(ring, *texts):
    F = FreeModule(ring, (0,))
    return F, [F.element([t]) for t in texts]


def span_dim(elems, ambient, d):
    """``dim_k`` of the degree-``d`` piece of the submodule generated by ``elems``."""
    G = FreeModule(ambient.ring, tuple(e.degree() for e in elems))
    return map_rank(ModuleMap.from_columns(G, ambient, elems), d)


def test_monomials_are_their_own_basis():
    F, gens = ideal(R2, "x", "y")
    gb = groebner_basis(gens)
    assert sorted(g.to_text() for g in gb.generators) == ["[x]", "[y]"]
    assert set(lead_module(gb)) == {(0, (1, 0)), (0, (0, 1))}


def test_sum_and_difference_of_squares():
    F, gens = ideal(R2, "x^2 - y^2", "x^2 + y^2")
    # degree 2 coefficient rows over (x^2, xy, y^2): rank 2 and the span is <x^2, y^2>
    rows = [{0: 1, 2: -1}, {0: 1, 2: 1}]
    assert rank(rows, QQ) == 2
    assert rank(rows + [{0: 1}, {2: 1}], QQ) == 2
    gb = groebner_basis(gens)
    assert set(lead_module(gb)) == {(0, (2, 0)), (0, (0, 2))}
    assert verify_buchberger(gb)


def test_two_by_four_minors_are_already_a_basis(corpus):
    e = corpus["eagon_northcott_2x4"]
    F = FreeModule(e.ring, (0,))
    gens = [F.element([f]) for f in e.generators]
    gb = groebner_basis(gens)
    assert verify_buchberger(gb)
    assert len(gb) == 6
    leads = {(0, f.leading_term()[0]) for f in e.generators}
    assert set(lead_module(gb)) == leads


def test_normal_forms():
    F, gens = ideal(R3, "x", "y")
    gb = groebner_basis(gens)
    assert normal_form(F.element(["x^2*y"]), gb).is_zero()
    assert normal_form(F.element(["z"]), gb) == F.element(["z"])
    F2, gens2 = ideal(R3, "x^2 - y*z", "x*y - z^2", "y^3 + x*z^2")
    gb2 = groebner_basis(gens2)
    assert all(normal_form(g, gb2).is_zero() for g in gens2)


def test_normal_form_rejects_other_ambient():
    _, gens = ideal(R2, "x")
    gb = groebner_basis(gens)
    with pytest.raises(ValueError):
        normal_form(FreeModule(R2, (0, 0)).element(["x", "y"]), gb)


def test_inhomogeneous_input_rejected():
    _, gens = ideal(R2, "x^2 + y")
    with pytest.raises(InhomogeneousError):
        groebner_basis(gens)
    with pytest.raises(InhomogeneousError):
        syzygies(gens)


def test_zero_submodule():
    F = FreeModule(R2, (0, 1))
    gb = groebner_basis([F.zero()], F)
    assert len(gb) == 0 and lead_module(gb) == []


def test_lead_terms_independent_of_input_order():
    F, gens = ideal(R3, "x^2 - y*z", "x*y - z^2", "y^2 - x*z", "x^3", "z^3 + x*y*z")
    rng = random.Random(7)
    ref = set(lead_module(groebner_basis(gens)))
    for _ in range(5):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert set(lead_module(groebner_basis(shuffled))) == ref


def test_koszul_syzygy_of_two_variables():
    _, gens = ideal(R2, "x", "y")
    E, syz = syzygies(gens)
    assert E.shifts == (1, 1)
    assert len(syz) == 1
    s = syz[0]
    assert s == E.element(["y", "-x"]) or s == E.element(["-y", "x"])


def test_regular_sequence_syzygies_are_koszul_relations():
    F, gens = ideal(R3, "x", "y", "z")
    E, syz = syzygies(gens)
    assert len(syz) == 3 and all(s.degree() == 2 for s in syz)
    koszul = [E.element(["y", "-x", "0"]), E.element(["z", "0", "-x"]), E.element(["0", "z", "-y"])]
    gb_syz, gb_k = groebner_basis(syz, E), groebner_basis(koszul, E)
    assert all(gb_syz.contains(k) for k in koszul)
    assert all(gb_k.contains(s) for s in syz)


def test_hilbert_burch_syzygies_of_square_of_maximal_ideal():
    F, gens = ideal(R2, "x^2", "x*y", "y^2")
    E, syz = syzygies(gens)
    assert sorted(s.degree() for s in syz) == [3, 3]
    phi = ModuleMap.from_columns(E, F, gens)
    # every returned element is a relation, and they span the full kernel degree by degree
    for s in syz:
        assert combination(F, s.components, gens).is_zero()
    for d in range(3, 8):
        assert span_dim(syz, E, d) == syzygy_dim(phi, d)
    assert syzygy_dim(phi, 3) == 2


def test_minimal_generators_drop_redundant_input():
    F, gens = ideal(R2, "x^2", "x^2 + x*y", "x*y", "y^2")
    keep = minimal_generators(gens)
    assert len(keep) == 3
    assert span_dim([gens[k] for k in keep], F, 2) == 3


def test_rational_coefficients_never_become_floats():
    F, gens = ideal(R3, "3*x^2 - 2*y*z", "5*x*y - 7*z^2", "2*y^2 - 3*x*z")
    gb = groebner_basis(gens)
    for g in gb.generators:
        for c in g.components:
            assert all(isinstance(v, Fraction) for v in c.terms.values())
    E, syz = syzygies(gens)
    for s in syz:
        assert combination(F, s.components, gens).is_zero()
        for c in s.components:
            assert all(isinstance(v, Fraction) for v in c.terms.values())
    assert verify_buchberger(gb)


def test_module_basis_with_shifts():
    F = FreeModule(R2, (0, 1))
    gens = [F.element(["y^2", "x"]), F.element(["x*y", "y"]), F.element(["x^2", "0"])]
    gb = groebner_basis(gens, F)
    assert verify_buchberger(gb)
    assert all(gb.contains(g) for g in gens)
    E, syz = syzygies(gens, F)
    for s in syz:
        assert combination(F, s.components, gens).is_zero()


@pytest.mark.parametrize("entry_id", ["twisted_cubic", "generic_2x3_minors", "gorenstein_codim3_pfaffians",
                                      "mprimary_xyz_square", "nonCM_line_plus_plane"])
def test_same_lead_terms_over_rationals_and_mod_p(corpus, entry_id):
    e = corpus[entry_id]
    leads = []
    for fld in (QQ, F32003):
        ring = e.ring.with_field(fld)
        F = FreeModule(ring, (0,))
        gens = [F.element([ring.parse(t)]) for t in e.texts]
        leads.append(set(lead_module(groebner_basis(gens))))
    assert leads[0] == leads[1]


def test_truncated_basis_is_complete_up_to_bound():
    F, gens = ideal(R3, "x^2 - y*z", "x*y - z^2", "y^2 - x*z")
    full = groebner_basis(gens)
    low = groebner_basis(gens, degree_bound=2)
    assert {t for t in lead_module(full) if sum(t[1]) <= 2} == set(lead_module(low))


def test_cache_round_trip(tmp_path):
    cache = GBCache(tmp_path / "gb")
    F, gens = ideal(make_ring("x,y,z", FieldSpec(101)), "x^2 - y*z", "x*y - z^2", "y^2 - x*z")
    gb = groebner_basis(gens, cache=cache)
    assert cache.stats()["entries"] == 1
    again = groebner_basis(gens, cache=cache)
    assert [g.to_text() for g in again.generators] == [g.to_text() for g in gb.generators]
    assert verify_buchberger(again)
    v = F.element(["x^3 + z^3"])
    assert normal_form(v, again) == normal_form(v, gb)
    assert GBCache.key(F, gens) == GBCache.key(F, list(reversed(gens)))
    assert cache.clear() == 1
    assert cache.stats()["entries"] == 0


def test_cache_round_trip_with_rational_coefficients(tmp_path):
    cache = GBCache(tmp_path / "gb")
    F, gens = ideal(R3, "3*x^2 - 2*y*z", "5*x*y - 7*z^2", "2*y^2 - 3*x*z")
    gb = groebner_basis(gens, cache=cache)
    dens = {c.denominator for g in gb.generators for comp in g.components for c in comp.terms.values()}
    assert dens != {1}
    again = groebner_basis(gens, cache=cache)
    assert [g.to_text() for g in again.generators] == [g.to_text() for g in gb.generators]
    assert verify_buchberger(again)
