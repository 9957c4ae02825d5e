import random
import time

from django.test import SimpleTestCase
from sympy import Matrix, eye

from django_bandix.braid import BraidWord, closure_components
from django_bandix.conway import (
    ConwayPolynomial,
    SeifertMatrix,
    band_index_one_check,
    conway_degree_genus_bound,
    conway_from_seifert,
    flat2_form_check,
    seifert_matrix_from_braid,
)
from django_bandix.exceptions import DisconnectedDiagram

TREFOIL = BraidWord(2, [1, 1, 1])
FIGURE_EIGHT = BraidWord(3, [-1, 2, -1, 2])


def conway(w):
    if w.missing_generators():
        # split diagram
        return ConwayPolynomial()
    return conway_from_seifert(seifert_matrix_from_braid(w))


def random_connected_word(rng, max_strands=4, max_letters=8):
    strands = rng.randint(2, max_strands)
    letters = [rng.choice([-1, 1]) * i for i in range(1, strands)]
    letters += [rng.choice([-1, 1]) * rng.randint(1, strands - 1)
                for _ in range(rng.randint(0, max_letters - len(letters)))]
    rng.shuffle(letters)
    return BraidWord(strands, letters)


class ConwayPolynomialTestCase(SimpleTestCase):

    def test_trim(self):
        self.assertEqual(ConwayPolynomial((1, 0, 0)).coeffs, (1,))
        self.assertEqual(ConwayPolynomial((0, 0)).coeffs, ())
        self.assertTrue(ConwayPolynomial().is_zero())
        self.assertEqual(ConwayPolynomial().degree, None)

    def test_arithmetic(self):
        p = ConwayPolynomial((1, 0, 1))
        q = ConwayPolynomial((1,))
        self.assertEqual(p - q, ConwayPolynomial((0, 0, 1)))
        self.assertEqual(q.times_z(), ConwayPolynomial((0, 1)))
        self.assertEqual(str(ConwayPolynomial((1, 0, -2))), '1 - 2z^2')
        self.assertEqual(str(ConwayPolynomial((0, 2, 0, 1))), '2z + z^3')
        self.assertEqual(str(ConwayPolynomial()), '0')


class SeifertMatrixTestCase(SimpleTestCase):

    def test_unknot(self):
        self.assertEqual(seifert_matrix_from_braid(BraidWord(2, [1])).size, 0)

    def test_hopf(self):
        self.assertEqual(seifert_matrix_from_braid(BraidWord(2, [1, 1])), SeifertMatrix([[-1]]))

    def test_trefoil(self):
        a = seifert_matrix_from_braid(TREFOIL).to_sympy()
        self.assertEqual(a.shape, (2, 2))
        self.assertEqual(a.det(), 1)
        self.assertEqual((a + a.T).det(), 3)

    def test_size(self):
        rng = random.Random(5)
        for _ in range(50):
            w = random_connected_word(rng)
            self.assertEqual(seifert_matrix_from_braid(w).size, len(w.letters) - w.strands + 1)

    def test_disconnected(self):
        self.assertRaises(DisconnectedDiagram, seifert_matrix_from_braid, BraidWord(3, [1, 1]))


class ConwayFromSeifertTestCase(SimpleTestCase):

    def test_flat_two_form(self):
        self.assertEqual(conway_from_seifert(SeifertMatrix([[0, 1], [2, 0]])), ConwayPolynomial((1, 0, -2)))
        self.assertEqual(conway_from_seifert(SeifertMatrix([[0, 0], [1, 0]])), ConwayPolynomial((1,)))
        for k in range(5):
            self.assertEqual(conway_from_seifert(SeifertMatrix([[0, k], [k + 1, 0]])),
                             ConwayPolynomial((1, 0, -k * (k + 1))))

    def test_long_braid(self):
        torus = BraidWord(4, [1, 2, 3] * 5)
        started = time.monotonic()
        a = seifert_matrix_from_braid(torus)
        p = conway_from_seifert(a)
        self.assertLess(time.monotonic() - started, 10)
        self.assertEqual(a.size, 12)
        # fibered positive knot of genus 6
        self.assertEqual(p.degree, 12)
        self.assertEqual((p.coefficient(0), p.coefficient(12)), (1, 1))
        self.assertFalse(any(p.coefficient(d) for d in range(1, 13, 2)))

    def test_empty(self):
        self.assertEqual(conway_from_seifert(SeifertMatrix()), ConwayPolynomial.one())

    def test_known_links(self):
        self.assertEqual(conway(BraidWord(1, [])), ConwayPolynomial((1,)))
        self.assertEqual(conway(BraidWord(2, [1])), ConwayPolynomial((1,)))
        self.assertEqual(conway(TREFOIL), ConwayPolynomial((1, 0, 1)))
        self.assertEqual(conway(BraidWord(2, [-1, -1, -1])), ConwayPolynomial((1, 0, 1)))
        self.assertEqual(conway(FIGURE_EIGHT), ConwayPolynomial((1, 0, -1)))
        self.assertEqual(conway(BraidWord(2, [1, 1])), ConwayPolynomial((0, 1)))
        self.assertEqual(conway(BraidWord(3, [1, 2, 1, 2, 1])), ConwayPolynomial((0, 2, 0, 1)))

    def test_skein(self):
        rng = random.Random(2024)
        for _ in range(220):
            w = random_connected_word(rng)
            position = rng.randrange(len(w.letters))
            generator = abs(w.letters[position])
            positive = conway(w.replace(position, generator))
            negative = conway(w.replace(position, -generator))
            smoothed = conway(w.replace(position, None))
            self.assertEqual(positive - negative, smoothed.times_z(), msg=str(w))

    def test_structure(self):
        rng = random.Random(99)
        for _ in range(80):
            w = random_connected_word(rng)
            p = conway(w)
            l = closure_components(w)
            if l == 1:
                self.assertEqual(p.coefficient(0), 1)
            if not p.is_zero():
                self.assertGreaterEqual(p.lowest_degree, l - 1)
                self.assertEqual((p.degree - l + 1) % 2, 0)
                self.assertLessEqual(p.degree, len(w.letters) - w.strands + 1)

    def test_congruence(self):
        rng = random.Random(17)
        for _ in range(30):
            a = seifert_matrix_from_braid(random_connected_word(rng))
            if a.size < 2:
                continue
            expected = conway_from_seifert(a)
            order = list(range(a.size))
            rng.shuffle(order)
            permutation = Matrix(a.size, a.size, lambda i, j: 1 if order[i] == j else 0)
            self.assertEqual(conway_from_seifert(a.transformed(permutation)), expected)
            shear = eye(a.size)
            i, j = rng.sample(range(a.size), 2)
            shear[i, j] = rng.choice([-2, -1, 1, 2])
            self.assertEqual(conway_from_seifert(a.transformed(shear)), expected)


class ObstructionTestCase(SimpleTestCase):

    def test_flat2_form_check(self):
        self.assertEqual(flat2_form_check(ConwayPolynomial((1, 0, 1))), None)
        self.assertEqual(flat2_form_check(ConwayPolynomial((1, 0, -1))), None)
        self.assertEqual(flat2_form_check(ConwayPolynomial((1, 0, -2))), 1)
        self.assertEqual(flat2_form_check(ConwayPolynomial((1, 0, -6))), 2)
        self.assertEqual(flat2_form_check(ConwayPolynomial((1,))), 0)
        self.assertEqual(flat2_form_check(ConwayPolynomial((0, 1))), None)
        self.assertEqual(flat2_form_check(ConwayPolynomial()), None)

    def test_genus_bound(self):
        self.assertEqual(conway_degree_genus_bound(ConwayPolynomial((1, 0, 1)), 1), 1)
        self.assertEqual(conway_degree_genus_bound(ConwayPolynomial((1,)), 1), 0)
        self.assertEqual(conway_degree_genus_bound(ConwayPolynomial((0, 1)), 2), 0)
        self.assertEqual(conway_degree_genus_bound(ConwayPolynomial((0, 2, 0, 1)), 2), 1)
        self.assertEqual(conway_degree_genus_bound(ConwayPolynomial(), 3), 0)

    def test_band_index_one(self):
        self.assertEqual(band_index_one_check(BraidWord(2, [1, 1])), 1)
        self.assertEqual(band_index_one_check(BraidWord(2, [-1, -1])), -1)
        self.assertEqual(band_index_one_check(BraidWord(2, [1, -1, 1, 1, 1, 1])), 2)
        self.assertEqual(band_index_one_check(BraidWord(3, [1, 2])), None)
        self.assertEqual(band_index_one_check(BraidWord(2, [1, 1, 1])), None)
        self.assertEqual(band_index_one_check(BraidWord(2, [1, -1])), None)
