import pytest

from conftest import clebsch_gordan_sl2, dominant_box, random_dominant, seeded
from demkit.charalg import GradedCharacter
from demkit.finite import (
    conjecture_conditions,
    demazure_weyl_character,
    surjection_exists,
    tensor_decompose,
    weyl_character,
    weyl_dimension,
)
from demkit.rootsystem import root_system

A1 = root_system("A1")
A2 = root_system("A2")
B2 = root_system("B2")
G2 = root_system("G2")


# ---------------------------------------------------------------------------
# irreducible characters


def test_trivial_module():
    ch = weyl_character(A2, (0, 0))
    assert ch == GradedCharacter.unit(A2)
    assert weyl_dimension(A2, (0, 0)) == 1


def test_rank1_strings():
    for m in range(7):
        ch = weyl_character(A1, (m,))
        assert ch.dimension() == m + 1
        assert all(mult == 1 for mult in ch.terms.values())
        assert set(ch.terms) == {((m - 2 * j,), 0) for j in range(m + 1)}


def test_a2_adjoint():
    ch = weyl_character(A2, (1, 1))
    assert ch.dimension() == 8
    assert ch.weight_multiplicity((0, 0)) == 2
    assert weyl_dimension(A2, (1, 1)) == 8


def test_g2_fundamental_dimensions():
    # frozen after two-oracle agreement: short-node 7, long-node 14
    assert weyl_dimension(G2, (1, 0)) == 7
    assert weyl_dimension(G2, (0, 1)) == 14
    assert weyl_character(G2, (1, 0)) == demazure_weyl_character(G2, (1, 0))
    assert weyl_character(G2, (0, 1)) == demazure_weyl_character(G2, (0, 1))


def test_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_character(A2, (1, -1))
    with pytest.raises(ValueError):
        weyl_dimension(A1, (-2,))


@pytest.mark.parametrize("name", ["B2", "G2"])
def test_two_oracle_agreement_random(name):
    rs = root_system(name)
    rng = seeded(f"oracle-{name}")
    for _ in range(20):
        lam = random_dominant(rng, rs, 4)
        freud = weyl_character(rs, lam)
        assert freud == demazure_weyl_character(rs, lam)
        assert freud.dimension() == weyl_dimension(rs, lam)


def test_dimension_agreement_sweep():
    for name in ("A1", "A2", "B2"):
        rs = root_system(name)
        for lam in dominant_box(rs, 3):
            assert weyl_character(rs, lam).dimension() == weyl_dimension(rs, lam)


# ---------------------------------------------------------------------------
# tensor decomposition


def test_rank1_products_match_the_ladder_oracle():
    for a in range(4):
        for b in range(4):
            product = weyl_character(A1, (a,)) * weyl_character(A1, (b,))
            assert tensor_decompose(A1, product) == clebsch_gordan_sl2(a, b)


def test_a2_vector_times_dual():
    product = weyl_character(A2, (1, 0)) * weyl_character(A2, (0, 1))
    assert tensor_decompose(A2, product) == {(1, 1): 1, (0, 0): 1}


def test_irreducible_decomposes_to_itself():
    rng = seeded("irr-decomp")
    for _ in range(10):
        lam = random_dominant(rng, A2, 3)
        assert tensor_decompose(A2, weyl_character(A2, lam)) == {lam: 1}


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_reconstruction_invariant(name):
    rs = root_system(name)
    rng = seeded(f"reconstruct-{name}")
    for _ in range(8):
        product = weyl_character(rs, random_dominant(rng, rs, 2)) * \
            weyl_character(rs, random_dominant(rng, rs, 2))
        decomp = tensor_decompose(rs, product)
        rebuilt = GradedCharacter(rs)
        for lam, mult in decomp.items():
            rebuilt = rebuilt + weyl_character(rs, lam).scaled(mult)
        assert rebuilt == product
        assert all(m > 0 for m in decomp.values())


def test_decomposition_is_extraction_order_independent():
    rng = seeded("tiebreak")
    for _ in range(20):
        terms = [random_dominant(rng, A2, 2) for _ in range(3)]
        char = weyl_character(A2, terms[0])
        for lam in terms[1:]:
            char = char * weyl_character(A2, lam)
        assert tensor_decompose(A2, char) == tensor_decompose(A2, char, reverse_tiebreak=True)


def test_rejects_non_characters():
    spike = GradedCharacter.monomial(A2, (1, 0))
    with pytest.raises(ValueError):
        tensor_decompose(A2, spike)
    graded = GradedCharacter(A1, {((0,), 1): 1})
    with pytest.raises(ValueError):
        tensor_decompose(A1, graded)
    # Weyl-symmetric support with impossible multiplicities
    bogus = weyl_character(A1, (2,)) - weyl_character(A1, (0,)).scaled(3)
    assert bogus.is_w_invariant()
    with pytest.raises(ValueError):
        tensor_decompose(A1, bogus)


# ---------------------------------------------------------------------------
# surjections


def test_identity_surjection():
    product = weyl_character(A2, (1, 0)) * weyl_character(A2, (1, 1))
    ok, witness = surjection_exists(A2, product, product)
    assert ok and witness is None


def test_rank1_surjection_pair():
    source = weyl_character(A1, (1,)) * weyl_character(A1, (1,))
    target = weyl_character(A1, (2,)) * weyl_character(A1, (0,))
    ok, _ = surjection_exists(A1, source, target)
    assert ok
    ok, witness = surjection_exists(A1, target, source)
    assert not ok and witness == (0,)


def test_conjecture_condition_examples():
    assert conjecture_conditions(A1, (1,), (2,), (1,), (2,))
    assert not conjecture_conditions(A1, (1,), (1,), (2,), (0,))
    assert conjecture_conditions(A1, (2,), (0,), (1,), (1,))
    with pytest.raises(ValueError):
        conjecture_conditions(A1, (-1,), (1,), (0,), (0,))


def test_condition_failure_on_sum_mismatch():
    assert not conjecture_conditions(A2, (1, 0), (0, 0), (0, 1), (0, 0))


def test_conditions_imply_domination_in_a_small_sweep():
    # direction sanity on B2: every condition-satisfying tuple dominates
    box = dominant_box(B2, 1)
    for lam1 in box:
        for lam2 in box:
            total = B2.add(lam1, lam2)
            for mu1 in box:
                mu2 = B2.sub(total, mu1)
                if any(c < 0 or c > 1 for c in mu2):
                    continue
                if not conjecture_conditions(B2, lam1, lam2, mu1, mu2):
                    continue
                source = weyl_character(B2, mu1) * weyl_character(B2, mu2)
                target = weyl_character(B2, lam1) * weyl_character(B2, lam2)
                ok, witness = surjection_exists(B2, source, target)
                assert ok, (lam1, lam2, mu1, mu2, witness)
