from itertools import product

from django.test import SimpleTestCase

from bundles.char_classes import SIGNS, VertexSign, chern_f
from bundles.coloring import (
    Coloring, chromatic_number, coloring_euler_classes, coloring_sign_family, composed_vertex_sign,
    find_coloring, is_valid_coloring, real_splitting_identity, splitting_factors, splitting_identity,
)
from bundles.cx_structures import count_structures
from bundles.samples import random_corpus, square, tetrahedron_boundary, triangle
from bundles.simplicial import SimplicialComplex, full_simplex
from bundles.stanley_reisner import SRPolynomial


class FindColoringTests(SimpleTestCase):
    def test_triangle(self):
        self.assertIsNone(find_coloring(triangle(), 2))
        coloring = find_coloring(triangle(), 3)
        self.assertEqual(coloring.colors, (1, 2, 3))
        self.assertEqual(chromatic_number(triangle()), 3)

    def test_square(self):
        self.assertEqual(find_coloring(square(), 2).colors, (1, 2, 1, 2))
        self.assertEqual(chromatic_number(square()), 2)

    def test_full_simplices(self):
        for m in range(1, 7):
            self.assertEqual(chromatic_number(full_simplex(m)), m)
            self.assertEqual(find_coloring(full_simplex(m), m).colors, tuple(range(1, m + 1)))

    def test_fewer_paints_than_n(self):
        self.assertIsNone(find_coloring(tetrahedron_boundary(), 3 - 1))

    def test_m_paints_always_suffice(self):
        for complex_ in random_corpus(31, 30, 7):
            coloring = find_coloring(complex_, complex_.m)
            self.assertIsNotNone(coloring)
            self.assertTrue(is_valid_coloring(complex_, coloring))
            self.assertGreaterEqual(chromatic_number(complex_), complex_.n)

    def test_ghost_vertices_get_first_paint(self):
        complex_ = SimplicialComplex.from_facets(3, [[1, 2]])
        self.assertEqual(find_coloring(complex_, 2).colors, (1, 2, 1))

    def test_errors(self):
        with self.assertRaises(ValueError):
            find_coloring(square(), 0)
        with self.assertRaises(ValueError):
            chromatic_number(SimplicialComplex.from_facets(2, []))
        with self.assertRaises(ValueError):
            Coloring((1, 3), 2)

    def test_invalid_coloring(self):
        self.assertFalse(is_valid_coloring(square(), Coloring((1, 1, 2, 2), 2)))
        self.assertFalse(is_valid_coloring(square(), Coloring((1, 2, 1), 2)))


class SplittingTests(SimpleTestCase):
    def test_square_factors(self):
        complex_ = square()
        v = [SRPolynomial.generator(complex_, i) for i in range(1, 5)]
        u1, u2 = splitting_factors(complex_, Coloring((1, 2, 1, 2), 2))
        self.assertEqual(u1, v[0] + v[2])
        self.assertEqual(u2, v[1] + v[3])

    def test_identity_for_every_found_coloring(self):
        corpus = [triangle(), square(), tetrahedron_boundary(), full_simplex(4)] + random_corpus(37, 20, 6)
        for complex_ in corpus:
            for paints in (chromatic_number(complex_), complex_.m):
                coloring = find_coloring(complex_, paints)
                self.assertTrue(splitting_identity(complex_, coloring))
                self.assertTrue(real_splitting_identity(complex_, coloring))

    def test_invalid_coloring_is_rejected(self):
        with self.assertRaises(ValueError):
            splitting_factors(square(), Coloring((1, 1, 2, 2), 2))


class InducedStructureTests(SimpleTestCase):
    def test_composed_vertex_sign(self):
        f = composed_vertex_sign(Coloring((1, 2, 1, 2), 2), VertexSign((1, -1)))
        self.assertEqual(f.signs, (1, -1, 1, -1))

    def test_euler_classes_from_two_coloring(self):
        complex_ = square()
        coloring = find_coloring(complex_, 2)
        self.assertEqual(coloring_euler_classes(complex_, coloring, VertexSign((1, -1))).signs, (-1,) * 4)
        self.assertEqual(coloring_euler_classes(complex_, coloring, VertexSign((1, 1))).signs, (1,) * 4)

    def test_at_least_two_to_the_n_structures(self):
        complex_ = square()
        coloring = find_coloring(complex_, 2)
        family = coloring_sign_family(complex_, coloring)
        self.assertEqual(len(set(family)), 2 ** complex_.n)
        self.assertEqual(len({chern_f(complex_, f) for f in family}), 2 ** complex_.n)
        for signs in product(SIGNS, repeat=coloring.paints):
            omega = coloring_euler_classes(complex_, coloring, VertexSign(signs))
            self.assertGreater(count_structures(complex_, omega), 0)

    def test_needs_an_n_coloring(self):
        with self.assertRaises(ValueError):
            coloring_euler_classes(square(), Coloring((1, 2, 3, 2), 3), VertexSign((1, 1, 1)))
