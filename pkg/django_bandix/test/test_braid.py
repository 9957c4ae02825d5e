import random

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from django_bandix.braid import (
    BraidWord,
    Permutation,
    closure_components,
    closure_permutation,
    exponent_sum,
    free_reduce,
    parse_braid,
)
from django_bandix.constants import ERROR_RANGE, ERROR_SYNTAX
from django_bandix.exceptions import BraidSyntaxError, RangeError
from django_bandix.validators import BraidWordValidator


def random_word(rng, max_strands=4, max_letters=8):
    strands = rng.randint(1, max_strands)
    if strands == 1:
        return BraidWord(1, [])
    letters = [rng.choice([-1, 1]) * rng.randint(1, strands - 1) for _ in range(rng.randint(0, max_letters))]
    return BraidWord(strands, letters)


class BraidValidatorTestCase(SimpleTestCase):

    def test_valid(self):
        validator = BraidWordValidator()
        self.assertEqual(validator('1 1 1'), None)
        self.assertEqual(validator('-1, 2,-1 2'), None)
        self.assertEqual(validator(''), None)

    def test_invalid(self):
        validator = BraidWordValidator()
        self.assertRaises(ValidationError, validator, '1 a')
        self.assertRaises(ValidationError, validator, '0 1')
        self.assertRaises(ValidationError, validator, '1.5')
        self.assertRaises(ValidationError, validator, '+1')


class ParseBraidTestCase(SimpleTestCase):

    def test_parse(self):
        self.assertEqual(parse_braid('1 1 1'), BraidWord(2, [1, 1, 1]))
        self.assertEqual(parse_braid('-1 2 -1 2'), BraidWord(3, [-1, 2, -1, 2]))
        self.assertEqual(parse_braid('-1,2,-1,2'), BraidWord(3, [-1, 2, -1, 2]))
        self.assertEqual(parse_braid(''), BraidWord(1, []))
        self.assertEqual(parse_braid('1', strands_override=4), BraidWord(4, [1]))

    def test_zero(self):
        with self.assertRaises(BraidSyntaxError) as ctx:
            parse_braid('0 1')
        self.assertEqual(ctx.exception.code, ERROR_SYNTAX)

    def test_not_integer(self):
        self.assertRaises(BraidSyntaxError, parse_braid, '1 x 2')

    def test_range(self):
        with self.assertRaises(RangeError) as ctx:
            parse_braid('1 3', strands_override=3)
        self.assertEqual(ctx.exception.code, ERROR_RANGE)
        self.assertRaises(RangeError, parse_braid, '1', strands_override=0)
        self.assertRaises(RangeError, BraidWord, 2, [2])


class PermutationTestCase(SimpleTestCase):

    def test_closure_permutation(self):
        self.assertEqual(closure_permutation(BraidWord(2, [1, 1, 1])), Permutation((2, 1)))
        self.assertTrue(closure_permutation(BraidWord(2, [1, 1])).is_identity())
        cycles = closure_permutation(BraidWord(3, [-1, 2, -1, 2])).cycles()
        self.assertEqual(len(cycles), 1)
        self.assertEqual(len(cycles[0]), 3)

    def test_not_permutation(self):
        self.assertRaises(RangeError, Permutation, (1, 1))

    def test_compose(self):
        a = Permutation.transposition(3, 1)
        b = Permutation.transposition(3, 2)
        self.assertEqual((a * b)(3), 1)
        self.assertEqual((a * b).sign(), 1)
        self.assertEqual(a.sign(), -1)


class ClosureTestCase(SimpleTestCase):

    def test_components(self):
        self.assertEqual(closure_components(BraidWord(2, [1, 1, 1])), 1)
        self.assertEqual(closure_components(BraidWord(2, [1, 1])), 2)
        for n in range(1, 6):
            self.assertEqual(closure_components(BraidWord(n, [])), n)

    def test_exponent_sum(self):
        self.assertEqual(exponent_sum(BraidWord(2, [1, 1, 1])), 3)
        self.assertEqual(exponent_sum(BraidWord(3, [-1, 2, -1, 2])), 0)
        self.assertEqual(exponent_sum(BraidWord(2, [])), 0)

    def test_free_reduce(self):
        self.assertEqual(free_reduce(BraidWord(2, [1, -1, 1, 1])), BraidWord(2, [1, 1]))
        self.assertEqual(free_reduce(BraidWord(2, [])), BraidWord(2, []))
        self.assertEqual(free_reduce(BraidWord(3, [2, -2])), BraidWord(3, []))
        self.assertEqual(free_reduce(BraidWord(3, [1, 2, -2, -1, 2])), BraidWord(3, [2]))

    def test_properties(self):
        rng = random.Random(1729)
        for _ in range(300):
            w = random_word(rng)
            components = closure_components(w)
            self.assertLessEqual(components, w.strands)
            self.assertEqual(closure_permutation(w).sign(), (-1) ** len(w.letters))
            for offset in range(len(w.letters)):
                self.assertEqual(closure_components(w.rotate(offset)), components)
            reduced = free_reduce(w)
            self.assertEqual(reduced.strands, w.strands)
            self.assertEqual(closure_permutation(reduced), closure_permutation(w))
            self.assertEqual(exponent_sum(reduced), exponent_sum(w))
