import random

import numpy as np
from django.test import SimpleTestCase

from bundles.abelian import AbGroup, cohomology, invariant_factors, parse_ring
from bundles.limits import (
    AbFunctor, ChainOfFaces, atomic_functor, coboundary_matrices, constant_functor,
    constant_is_acyclic, diagonal_functor, lim_groups, link_cohomology, rank_sum_consistent,
    slice_functor, strict_chains, truncate_below, verify_atomic_formula,
)
from bundles.samples import random_corpus, square, tetrahedron_boundary, triangle
from bundles.simplicial import EMPTY_FACE, FaceSet

Z = AbGroup.free(1)
ZERO = AbGroup()


class AbGroupTests(SimpleTestCase):
    def test_invariant_factors(self):
        self.assertEqual(invariant_factors([2, 3]), (6,))
        self.assertEqual(invariant_factors([12, 60]), (12, 60))
        self.assertEqual(invariant_factors([1, 4, 2]), (2, 4))
        self.assertEqual(invariant_factors([]), ())

    def test_canonical_equality(self):
        self.assertEqual(AbGroup(1, (2, 3)), AbGroup(1, (6,)))
        self.assertNotEqual(AbGroup(0, (2, 2)), AbGroup(0, (4,)))

    def test_direct_sum_and_json(self):
        group = AbGroup(1, (2,)).direct_sum(AbGroup(0, (3,)))
        self.assertEqual(group.to_json(), {'rank': 1, 'torsion': [6]})
        self.assertEqual(str(group), 'Z + Z/6')
        self.assertEqual(str(ZERO), '0')

    def test_parse_ring(self):
        self.assertEqual(parse_ring('Z'), 'Z')
        self.assertEqual(parse_ring('F2'), 2)
        with self.assertRaises(ValueError):
            parse_ring('F4')
        with self.assertRaises(ValueError):
            parse_ring('Q')

    def test_cohomology_with_torsion(self):
        d0 = np.array([[2]], dtype=object)
        self.assertEqual(cohomology([1, 1], [d0]), [ZERO, AbGroup(0, (2,))])
        self.assertEqual(cohomology([1, 1], [d0], ring=2), [Z, Z])
        self.assertEqual(cohomology([1, 1], [d0], ring=3), [ZERO, ZERO])


class FunctorTests(SimpleTestCase):
    def test_atomic_functor(self):
        functor = atomic_functor(triangle(), [1])
        self.assertEqual(functor.rank(FaceSet.of([1])), 1)
        self.assertEqual(functor.rank(EMPTY_FACE), 0)
        self.assertEqual(functor.support, [FaceSet.of([1])])

    def test_atomic_functor_errors(self):
        with self.assertRaises(ValueError):
            atomic_functor(triangle(), [1, 2, 3])
        with self.assertRaises(ValueError):
            atomic_functor(triangle(), [1], AbGroup(0, (2,)))

    def test_constant_functor_maps_are_identities(self):
        functor = constant_functor(square(), 2)
        matrix = functor.map(FaceSet.of([1, 2]), EMPTY_FACE)
        self.assertEqual(matrix.tolist(), [[1, 0], [0, 1]])

    def test_truncation_and_slice(self):
        functor = constant_functor(triangle())
        self.assertEqual(truncate_below(functor, 0).support, [EMPTY_FACE])
        self.assertEqual(
            slice_functor(functor, 2).support,
            [FaceSet.of([1, 2]), FaceSet.of([1, 3]), FaceSet.of([2, 3])],
        )
        self.assertEqual(truncate_below(functor, triangle().n).support, functor.support)

    def test_diagonal_functor_composites(self):
        functor = diagonal_functor(triangle(), [2, 3, 5])
        self.assertEqual(functor.map(FaceSet.of([1, 2]), EMPTY_FACE).tolist(), [[6]])

    def test_path_dependence_is_rejected(self):
        maps = {
            ((1, 2), (1,)): [[1]],
            ((1, 2), (2,)): [[1]],
            ((1,), ()): [[1]],
            ((2,), ()): [[2]],
        }
        ranks = {(): 1, (1,): 1, (2,): 1, (1, 2): 1}
        with self.assertRaises(ValueError):
            AbFunctor(triangle(), ranks, maps)

    def test_map_shape_is_checked(self):
        with self.assertRaises(ValueError):
            AbFunctor(triangle(), {(): 1, (1,): 1}, {((1,), ()): [[1, 0]]})

    def test_chains_are_strict(self):
        with self.assertRaises(ValueError):
            ChainOfFaces((FaceSet.of([1]), FaceSet.of([1])))
        chains = strict_chains(triangle())
        self.assertEqual([len(layer) for layer in chains], [7, 12, 6])


class LimitTests(SimpleTestCase):
    def test_constant_functor_is_acyclic(self):
        for complex_ in (triangle(), square(), tetrahedron_boundary()):
            self.assertEqual(lim_groups(constant_functor(complex_), complex_.n), [Z] + [ZERO] * complex_.n)
            self.assertTrue(constant_is_acyclic(complex_, 2))
            self.assertTrue(constant_is_acyclic(complex_, 1, ring=2))

    def test_atomic_at_empty_face_of_triangle(self):
        groups = lim_groups(atomic_functor(triangle(), []), 3)
        self.assertEqual(groups, [ZERO, ZERO, Z, ZERO])

    def test_atomic_at_vertex_of_triangle(self):
        self.assertEqual(lim_groups(atomic_functor(triangle(), [1]), 2), [ZERO, Z, ZERO])

    def test_atomic_at_maximal_face(self):
        self.assertEqual(lim_groups(atomic_functor(square(), [1, 2], 3), 1), [AbGroup.free(3), ZERO])

    def test_negative_degree(self):
        with self.assertRaises(ValueError):
            lim_groups(constant_functor(triangle()), -1)

    def test_coboundaries_square_to_zero(self):
        rng = random.Random(3)
        functors = [
            constant_functor(tetrahedron_boundary(), 2),
            diagonal_functor(square(), [2, -1, 3, 5]),
            atomic_functor(triangle(), [1]),
        ]
        for complex_ in random_corpus(13, 6, 5, max_n=3):
            weights = [rng.choice((-2, -1, 1, 2, 3)) for _ in range(complex_.m)]
            functors.append(diagonal_functor(complex_, weights))
        for functor in functors:
            matrices = coboundary_matrices(functor)
            for first, second in zip(matrices, matrices[1:]):
                product = second.dot(first)
                self.assertTrue(all(entry == 0 for entry in product.flat))

    def test_vanishing_bound_for_slices(self):
        for complex_ in (triangle(), square(), tetrahedron_boundary()):
            n = complex_.n
            functor = constant_functor(complex_)
            for s in range(n + 1):
                groups = lim_groups(slice_functor(functor, s), n + 1)
                for i in range(n - s + 1, n + 2):
                    self.assertTrue(groups[i].is_trivial, f'lim^{i} of slice {s} on {complex_!r}')

    def test_truncation_isomorphism(self):
        rng = random.Random(41)
        cases = [constant_functor(complex_) for complex_ in (triangle(), square(), tetrahedron_boundary())]
        for complex_ in (triangle(), square(), tetrahedron_boundary()):
            cases.append(diagonal_functor(complex_, [rng.choice((-3, -2, 2, 3, 5)) for _ in range(complex_.m)]))
        for functor in cases:
            n = functor.complex.n
            full = lim_groups(functor, n)
            for i in range(n + 1):
                for s in range(max(n - i + 1, 0), n + 1):
                    self.assertEqual(lim_groups(truncate_below(functor, s), n)[i], full[i])

    def test_rigid_functors_have_no_higher_limits(self):
        rng = random.Random(43)
        for complex_ in (triangle(), square(), tetrahedron_boundary()):
            weights = [rng.choice((-1, 1)) for _ in range(complex_.m)]
            groups = lim_groups(diagonal_functor(complex_, weights), complex_.n)
            self.assertEqual(groups[0], Z)
            self.assertTrue(all(group.is_trivial for group in groups[1:]))

    def test_rank_sum_consistency(self):
        for complex_ in (triangle(), square()):
            for functor in (constant_functor(complex_), diagonal_functor(complex_, [2] * complex_.m)):
                for s in range(1, complex_.n + 1):
                    self.assertTrue(rank_sum_consistent(functor, s, complex_.n))


class LinkCohomologyTests(SimpleTestCase):
    def test_circle(self):
        self.assertEqual(link_cohomology(triangle(), []), [ZERO, ZERO, Z])

    def test_empty_link(self):
        self.assertEqual(link_cohomology(triangle(), [1, 2]), [Z])

    def test_two_points(self):
        self.assertEqual(link_cohomology(square(), [1]), [ZERO, Z])

    def test_sphere_over_f2(self):
        self.assertEqual(link_cohomology(tetrahedron_boundary(), [], ring=2), [ZERO, ZERO, ZERO, Z])

    def test_not_a_face(self):
        with self.assertRaises(ValueError):
            link_cohomology(square(), [1, 3])


class AtomicFormulaTests(SimpleTestCase):
    def test_named_complexes(self):
        for complex_ in (triangle(), square(), tetrahedron_boundary()):
            for face in complex_.faces():
                for ring in ('Z', 2):
                    self.assertTrue(verify_atomic_formula(complex_, face, ring), f'{face!r} on {complex_!r}')

    def test_random_complexes(self):
        for complex_ in random_corpus(19, 20, 6, max_n=3):
            for face in complex_.faces():
                for ring in ('Z', 2):
                    self.assertTrue(verify_atomic_formula(complex_, face, ring), f'{face!r} on {complex_!r}')
