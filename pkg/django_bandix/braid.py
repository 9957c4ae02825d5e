"""
Braid words on n strands and their closures.

A letter ``+i`` is the generator sigma_i and ``-i`` its inverse.
"""
from dataclasses import dataclass, field

from django.utils.translation import gettext_lazy as _

from django_bandix.exceptions import RangeError
from django_bandix.grammar import split_tokens
from django_bandix.validators import braid_word_validator


@dataclass(frozen=True)
class BraidWord(object):
    strands: int
    letters: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, 'letters', tuple(int(e) for e in self.letters))
        if self.strands < 1:
            raise RangeError(_('A braid needs at least one strand'))
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise RangeError(_('Letter %(letter)s out of range for %(strands)s strands'),
                                 params={'letter': letter, 'strands': self.strands})

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return ' '.join(str(e) for e in self.letters)

    def generators(self):
        """
        Generator indices that occur in the word.
        :rtype: set[int]
        """
        return {abs(e) for e in self.letters}

    def missing_generators(self):
        return [i for i in range(1, self.strands) if i not in self.generators()]

    def rotate(self, offset=1):
        if not self.letters:
            return self
        offset %= len(self.letters)
        return BraidWord(self.strands, self.letters[offset:] + self.letters[:offset])

    def replace(self, position, letter):
        """
        Copy with the letter at ``position`` replaced, or removed when ``letter`` is None.
        """
        letters = list(self.letters)
        if letter is None:
            del letters[position]
        else:
            letters[position] = letter
        return BraidWord(self.strands, letters)


@dataclass(frozen=True)
class Permutation(object):
    """
    Bijection on {1..n}, ``images[k - 1]`` is the image of ``k``.
    """
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, 'images', tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise RangeError(_('Not a permutation: %(images)s'), params={'images': self.images})

    @classmethod
    def identity(cls, size):
        return cls(range(1, size + 1))

    @classmethod
    def transposition(cls, size, i):
        images = list(range(1, size + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    def __len__(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point - 1]

    def __mul__(self, other):
        """
        ``(self * other)(k) == self(other(k))``
        """
        return Permutation(self(other(k)) for k in range(1, len(self) + 1))

    def is_identity(self):
        return all(image == k for k, image in enumerate(self.images, start=1))

    def cycles(self):
        """
        Disjoint cycles, each starting at its smallest point, ordered by that point.
        :rtype: list[tuple[int]]
        """
        seen = set()
        found = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            found.append(tuple(cycle))
        return found

    def sign(self):
        """
        +1 for even permutations, -1 for odd ones.
        """
        transpositions = sum(len(cycle) - 1 for cycle in self.cycles())
        return -1 if transpositions % 2 else 1


def parse_braid(text, strands_override=None):
    """
    :param text: comma or whitespace separated nonzero integers
    :param strands_override: strand count, defaults to ``max|e| + 1``
    :rtype: BraidWord
    """
    braid_word_validator(text)
    letters = [int(token) for token in split_tokens(text)]
    if strands_override is not None:
        strands = int(strands_override)
    else:
        strands = max(abs(e) for e in letters) + 1 if letters else 1
    return BraidWord(strands, letters)


def closure_permutation(w):
    perm = Permutation.identity(w.strands)
    for letter in w.letters:
        perm = Permutation.transposition(w.strands, abs(letter)) * perm
    return perm


def closure_components(w):
    return len(closure_permutation(w).cycles())


def exponent_sum(w):
    return sum(1 if e > 0 else -1 for e in w.letters)


def free_reduce(w):
    reduced = []
    for letter in w.letters:
        if reduced and reduced[-1] == -letter:
            reduced.pop()
        else:
            reduced.append(letter)
    return BraidWord(w.strands, reduced)
