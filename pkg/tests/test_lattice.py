import random

import pytest

from hassett.lattice import (
    A1,
    A2,
    AMBIENT,
    AMBIENT_GRAM,
    A2Embedding,
    AmbientVector,
    E8_GRAM,
    H_SQUARED,
    Labelling,
    RANK,
    Sublattice,
    contains,
    coordinate_matrix,
    e_vec,
    gram_of,
    i3_unit,
    inner_product,
    is_saturated,
    minimum,
    norm,
    saturation_in,
    short_vectors,
    t_vec,
    zero_vector,
)
from hassett.linalg import IntMatrix, determinant, inertia, invariant_factors, quadratic_form

A2_GRAM = IntMatrix([[2, 1], [1, 2]])


def rank4_000_basis(n1=2, n2=2, m3=2):
    return (
        H_SQUARED,
        e_vec(1, 1) + n1 * e_vec(1, 2),
        e_vec(2, 1) + n2 * e_vec(2, 2),
        m3 * A1,
    )


def random_vector(rng, bound=3):
    return AmbientVector(tuple(rng.randint(-bound, bound) for _ in range(RANK)))


class TestAmbient:
    def test_ambient_is_unimodular_of_signature_21_2(self):
        assert determinant(AMBIENT_GRAM) == 1
        assert inertia(AMBIENT_GRAM) == (21, 2, 0)
        assert AMBIENT.rank == 23

    def test_h_squared_norm(self):
        assert inner_product(H_SQUARED, H_SQUARED) == 3

    def test_hyperbolic_pairings(self):
        for copy in (1, 2):
            assert inner_product(e_vec(copy, 1), e_vec(copy, 2)) == 1
            assert norm(e_vec(copy, 1)) == 0
            assert norm(e_vec(copy, 2)) == 0

    def test_a2_pair(self):
        assert norm(A1) == 2
        assert norm(A2) == 2
        assert inner_product(A1, A2) == 1
        assert inner_product(A1, H_SQUARED) == 0
        assert inner_product(A2, H_SQUARED) == 0
        A2Embedding()  # default embedding validates

    def test_invalid_a2_embedding_rejected(self):
        with pytest.raises(ValueError):
            A2Embedding(a1=i3_unit(1), a2=i3_unit(2))

    def test_e8_blocks_are_orthogonal(self):
        assert inner_product(t_vec(1, 3), t_vec(2, 3)) == 0
        assert inner_product(t_vec(1, 1), t_vec(1, 2)) == -1

    def test_inner_product_agrees_with_full_gram(self):
        rng = random.Random(7)
        for _ in range(50):
            u, v = random_vector(rng), random_vector(rng)
            expected = sum(
                u.coords[i] * AMBIENT_GRAM[i][j] * v.coords[j]
                for i in range(RANK)
                for j in range(RANK)
            )
            assert inner_product(u, v) == expected

    def test_bilinearity_and_symmetry(self):
        rng = random.Random(11)
        for _ in range(40):
            u, v, w = (random_vector(rng) for _ in range(3))
            a, b = rng.randint(-5, 5), rng.randint(-5, 5)
            assert inner_product(u, v) == inner_product(v, u)
            assert inner_product(a * u + b * v, w) == a * inner_product(
                u, w
            ) + b * inner_product(v, w)


class TestGramOf:
    def test_case_labelling_pair(self):
        g = gram_of([H_SQUARED, e_vec(1, 1) + 2 * e_vec(1, 2)])
        assert g == IntMatrix([[3, 0], [0, 4]])

    def test_single_h_squared(self):
        assert gram_of([H_SQUARED]) == IntMatrix([[3]])

    def test_scaling_law(self):
        assert gram_of([2 * A1]) == IntMatrix([[8]])
        rng = random.Random(3)
        for _ in range(20):
            v = random_vector(rng)
            k = rng.randint(-6, 6)
            assert gram_of([k * v]) == IntMatrix([[k * k * norm(v)]])

    def test_permutation_covariance(self):
        rng = random.Random(5)
        vs = [random_vector(rng) for _ in range(4)]
        g = gram_of(vs)
        perm = [2, 0, 3, 1]
        gp = gram_of([vs[i] for i in perm])
        for i in range(4):
            for j in range(4):
                assert gp[i][j] == g[perm[i]][perm[j]]


class TestSublattice:
    def test_rejects_dependent_basis(self):
        with pytest.raises(ValueError):
            Sublattice([A1, 2 * A1])

    def test_isotropic_vector_is_fine(self):
        sub = Sublattice([e_vec(1, 1)])
        assert sub.gram == IntMatrix([[0]])

    def test_labelling_discriminant(self):
        lab = Labelling(e_vec(1, 1) + 2 * e_vec(1, 2))
        assert lab.discriminant == 12
        assert lab.sub.gram == IntMatrix([[3, 0], [0, 4]])
        lab2 = Labelling(2 * A1 + i3_unit(3))
        assert lab2.discriminant == 26


class TestSaturation:
    def test_primitive_vector(self):
        assert is_saturated(Sublattice([H_SQUARED]))

    def test_doubled_vector(self):
        assert not is_saturated(Sublattice([2 * H_SQUARED]))

    def test_scaled_slot_breaks_saturation(self):
        # The column 2*a1 gives Smith invariants (1,1,1,2): the vector a1 lies
        # in the rational span and the ambient lattice but not in the span.
        sub = Sublattice(rank4_000_basis())
        assert invariant_factors(coordinate_matrix(sub.basis)) == (1, 1, 1, 2)
        assert not is_saturated(sub)

    def test_unit_perturbation_restores_saturation(self):
        basis = (
            H_SQUARED,
            e_vec(1, 1) + 2 * e_vec(1, 2),
            e_vec(2, 1) + 2 * e_vec(2, 2),
            2 * A1 + i3_unit(3),
        )
        assert is_saturated(Sublattice(basis))


class TestContains:
    def test_h_squared_member(self):
        assert contains(Sublattice(rank4_000_basis()), H_SQUARED)

    def test_non_member(self):
        assert not contains(Sublattice(rank4_000_basis()), e_vec(1, 1))

    def test_zero_vector(self):
        assert contains(Sublattice(rank4_000_basis()), zero_vector())

    def test_saturation_gap_witness(self):
        # a1 = (2*a1)/2 is in the rational span but not in the sublattice.
        assert not contains(Sublattice(rank4_000_basis()), A1)


class TestSaturationIn:
    def test_sub_basis_is_saturated(self):
        m = Sublattice(rank4_000_basis())
        k = Sublattice((m.basis[0], m.basis[1]))
        assert saturation_in(k, m)

    def test_doubled_generator(self):
        m = Sublattice(rank4_000_basis())
        k = Sublattice((H_SQUARED, 2 * m.basis[1]))
        assert not saturation_in(k, m)

    def test_containment_violation_is_an_error(self):
        m = Sublattice(rank4_000_basis())
        k = Sublattice((H_SQUARED, t_vec(1, 1)))
        with pytest.raises(ValueError):
            saturation_in(k, m)


class TestShortVectors:
    def test_a2_roots(self):
        roots = short_vectors(A2_GRAM, 2)
        assert roots == [(0, 1), (1, -1), (1, 0)]

    def test_e8_roots(self):
        roots = short_vectors(E8_GRAM, 2)
        assert len(roots) == 120
        assert all(quadratic_form(E8_GRAM, v) == 2 for v in roots)

    def test_case_diag_has_no_vector_below_3(self):
        assert short_vectors(IntMatrix.diagonal([3, 4, 4, 8]), 2) == []

    def test_rejects_indefinite(self):
        with pytest.raises(ValueError):
            short_vectors(IntMatrix([[0, 1], [1, 0]]), 2)

    def test_canonical_representatives(self):
        for v in short_vectors(E8_GRAM, 4):
            first = next(x for x in v if x != 0)
            assert first > 0

    def test_includes_all_norms_up_to_bound(self):
        vs = short_vectors(A2_GRAM, 6)
        norms = sorted({quadratic_form(A2_GRAM, v) for v in vs})
        assert norms == [2, 6]  # the hexagonal lattice represents no 4


class TestMinimum:
    def test_rank_one(self):
        assert minimum(IntMatrix([[3]])) == 3

    def test_e8(self):
        assert minimum(E8_GRAM) == 2

    def test_residue2_case_gram(self):
        g = IntMatrix([[3, 0, 0, 1], [0, 4, 0, 0], [0, 0, 4, 0], [1, 0, 0, 9]])
        assert minimum(g) == 3

    def test_rejects_indefinite(self):
        with pytest.raises(ValueError):
            minimum(IntMatrix([[0, 1], [1, 0]]))
