import random
from fractions import Fraction

import pytest

from bbk.exactmath import QQ
from bbk.multmatrix import BASIS, check_basis
from bbk.orderideal import gotzmann_bound
from bbk.prebasis import Polynomial, Prebasis, PrebasisError, reduce
from bbk.redstruct import ReductionStructure
from bbk.synthesis import (
    IdealPresentation, InternalInconsistencyError, SynthesisError, basis_from_ideal, eq_identity_sides, extend,
    extend_unchecked, k_sequence, verify_eq_identity,
)

import final_example_data as fx
import goldens

GOLDEN = goldens.golden_order_ideals()


def P(terms):
    return Polynomial(2, {t: Fraction(c) for t, c in terms.items()})


def cubic_ideal():
    return IdealPresentation([goldens.cubic_f()])


# -- goldens ----------------------------------------------------------------------------


def test_cubic_degree3():
    G = basis_from_ideal(cubic_ideal(), goldens.extension_O(), 3).prebasis
    assert G.polynomial((2, 1)) == P({(2, 1): 1, (3, 0): 1, (0, 3): 1})
    assert G.tail((2, 1)) == (Fraction(-1), Fraction(0), Fraction(-1))


def test_cubic_degree4():
    G = basis_from_ideal(cubic_ideal(), goldens.extension_O(), 4).prebasis
    assert G.polynomial((3, 1)) == P({(3, 1): 1, (4, 0): 1, (1, 3): 1})
    assert G.polynomial((2, 2)) == P({(2, 2): 1, (4, 0): -1, (1, 3): -1, (0, 4): 1})


def test_cubic_degree4_by_hand():
    """x f and y f span J_4; x f is already g_{x^3y}, and y f - x f isolates x^2y^2."""
    f = goldens.cubic_f()
    xf, yf = f.shift((1, 0)), f.shift((0, 1))
    assert xf == P({(4, 0): 1, (3, 1): 1, (1, 3): 1})
    assert yf - xf == P({(2, 2): 1, (4, 0): -1, (1, 3): -1, (0, 4): 1})


def test_cubic_all_degrees_direct_sum():
    res = basis_from_ideal(cubic_ideal(), goldens.extension_O(), 10)
    assert res.ok
    for d, (dim_j, o_d, p_d) in res.dims.items():
        assert dim_j + o_d == p_d
        if d >= 3:
            assert o_d == 3


def test_monomial_ideal_gives_monomial_basis():
    O = fx.order_ideal()
    gens = [Polynomial(3, {(1, 1, 0): 1}), Polynomial(3, {(1, 0, 1): 1})]
    res = basis_from_ideal(IdealPresentation(gens), O, 5)
    assert res.ok
    assert res.prebasis == Prebasis.monomial(O, 5)


def test_counterexample_fails_at_two():
    res = basis_from_ideal(IdealPresentation([P({(1, 1): 1})]), goldens.counterexample_O(), 6)
    assert not res.ok
    assert res.failure.degree == 2
    assert res.failure.kind == "intersection"
    assert res.failure.witness == P({(1, 1): 1})


def test_rank_deficit_failure():
    # J = (y^3) is too small for O = T \ (y^2): in degree 2 nothing spans y^2.
    res = basis_from_ideal(IdealPresentation([P({(0, 3): 1})]), goldens.counterexample_O(), 4)
    assert not res.ok
    assert res.failure.kind == "rank_deficit" and res.failure.degree == 2
    assert res.failure.rank_deficit == 1


def test_presentation_validation():
    with pytest.raises(SynthesisError):
        IdealPresentation([P({(1, 0): 1, (0, 2): 1})])
    with pytest.raises(SynthesisError):
        IdealPresentation([Polynomial(2)])
    with pytest.raises(SynthesisError):
        IdealPresentation([P({(1, 0): 1}), Polynomial(3, {(1, 0, 0): 1})])


def test_presentation_json():
    J = IdealPresentation.from_json({"generators": [{"[3,0]": "1", "[2,1]": "1", "[0,3]": "1"}]}, QQ, 2)
    assert J.generators[0] == goldens.cubic_f()
    assert IdealPresentation.from_json(J.to_json(), QQ, 2) == J


# -- identity for x^d ------------------------------------------------------------------------


def test_k_sequence_prefix():
    assert k_sequence(6) == [1, 1, 1, 2, 3, 4]


@pytest.mark.parametrize("d", range(4, 11))
def test_eq_identity(d):
    assert verify_eq_identity(d)


def test_eq_identity_matches_reduction():
    """x^d - rest is a multiple of f, so rest reduces to the normal form x^d."""
    O = goldens.extension_O()
    G = basis_from_ideal(cubic_ideal(), O, 10).prebasis
    S = ReductionStructure(O)
    for d in range(4, 11):
        lhs, rhs = eq_identity_sides(d)
        q = Polynomial(2, {(d - 3 - i, i): (-1) ** i * k for i, k in enumerate(k_sequence(d - 2))})
        rest = rhs - q * goldens.cubic_f()
        h, _ = reduce(G, S, rest)
        assert h == lhs


def test_eq_identity_range():
    with pytest.raises(ValueError):
        verify_eq_identity(3)
    with pytest.raises(ValueError):
        verify_eq_identity(500)


# -- extension --------------------------------------------------------------------------------


def test_extend_basis_closed_form():
    G = goldens.G_prime(max_degree=6)
    E = extend(G, 9)
    for k in (4, 5, 6, 7):
        assert E.polynomial((k, 2)) == P({(k, 2): 1, (k + 1, 1): -1, (k + 2, 0): 1})
    assert E == goldens.G_prime(max_degree=9)


def test_extend_monomial():
    O = fx.order_ideal()
    assert extend(Prebasis.monomial(O, 3), 6) == Prebasis.monomial(O, 6)


def test_extend_final_family_self_consistent():
    G = extend(fx.numeric_family(1, 2, QQ), 5)
    S = ReductionStructure(G.order_ideal)
    for sigma in G.heads():
        h, _ = reduce(G, S, G.polynomial(sigma))
        assert h.is_zero()
    assert check_basis(G).verdict == BASIS


def test_extend_requires_certificate():
    with pytest.raises(PrebasisError):
        extend(goldens.G_generators(max_degree=6), 8)
    with pytest.raises(PrebasisError):
        extend(goldens.G_prime(max_degree=5), 8)


def test_extend_tripwire_on_uncertified_input():
    with pytest.raises(InternalInconsistencyError):
        extend_unchecked(goldens.G_generators(max_degree=5), 6)


def test_extend_preserves_certificate():
    for G in (goldens.G_prime(max_degree=6), fx.numeric_family(2, -1, QQ), goldens.extension_basis(4)):
        before = check_basis(G)
        E = extend(G, G.max_degree + 3)
        after = check_basis(E)
        assert before.verdict == after.verdict == BASIS
        assert (before.gotzmann_t, before.checked_range) == (after.gotzmann_t, after.checked_range)
        assert E.truncate(G.max_degree) == G


# -- uniqueness and round trip ------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_pivot_order_does_not_matter(name):
    O = GOLDEN[name]
    rng = random.Random(f"unique-{name}")
    for _ in range(4):
        J = IdealPresentation(goldens.perturbed_generators(O, rng))
        a = basis_from_ideal(J, O, 7, outside_first=True)
        b = basis_from_ideal(J, O, 7, outside_first=False)
        assert a.ok == b.ok
        if a.ok:
            assert a.prebasis == b.prebasis
        else:
            assert a.failure.degree == b.failure.degree


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_round_trip(name):
    O = GOLDEN[name]
    rng = random.Random(f"round-{name}")
    t = gotzmann_bound(O)
    D = max(t + 3, 6)
    for G in goldens.seed_bases(name, O, D, rng, attempts=3):
        low = G.truncate(t + 1)
        gens = [low.polynomial(s) for s in low.heads()]
        res = basis_from_ideal(IdealPresentation(gens, O.nvars), O, D)
        assert res.ok
        assert res.prebasis == G

