"""
Seifert matrices of braid closures and their Conway polynomials.
"""
import logging
import math
from dataclasses import dataclass, field

from django.utils.translation import gettext_lazy as _
from sympy import Matrix, Poly, ZZ, symbols
from sympy.polys.matrices import DomainMatrix

from django_bandix.braid import free_reduce
from django_bandix.exceptions import NotRepresentable, RangeError
from django_bandix.seifertgraph import graph_from_braid

logger = logging.getLogger(__name__)

x = symbols('x')


@dataclass(frozen=True)
class SeifertMatrix(object):
    entries: tuple = field(default=())

    def __post_init__(self):
        entries = tuple(tuple(int(v) for v in row) for row in self.entries)
        if any(len(row) != len(entries) for row in entries):
            raise RangeError(_('A Seifert matrix must be square'))
        object.__setattr__(self, 'entries', entries)

    @property
    def size(self):
        return len(self.entries)

    def to_sympy(self):
        return Matrix(self.size, self.size, lambda i, j: self.entries[i][j])

    def transformed(self, p):
        """
        Congruent matrix ``P^T A P``.
        """
        q = p.T * self.to_sympy() * p
        return SeifertMatrix(q.tolist())


@dataclass(frozen=True)
class ConwayPolynomial(object):
    """
    Integer polynomial in z, ``coeffs[d]`` is the coefficient of z^d.
    """
    coeffs: tuple = field(default=())

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def one(cls):
        return cls((1,))

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """
        ``None`` for the zero polynomial.
        """
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lowest_degree(self):
        for d, c in enumerate(self.coeffs):
            if c:
                return d
        return None

    def coefficient(self, d):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __add__(self, other):
        size = max(len(self.coeffs), len(other.coeffs))
        return ConwayPolynomial(self.coefficient(d) + other.coefficient(d) for d in range(size))

    def __neg__(self):
        return ConwayPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def times_z(self):
        return ConwayPolynomial((0,) + self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                power = 'z' if d == 1 else 'z^{}'.format(d)
                body = power if abs(c) == 1 else '{}{}'.format(abs(c), power)
            if not terms:
                terms.append(body if c > 0 else '-' + body)
            else:
                terms.append(('+ ' if c > 0 else '- ') + body)
        return ' '.join(terms)


def _fundamental_loops(w):
    """
    One loop per pair of consecutive occurrences of a generator, ordered by generator then position.
    :rtype: list[tuple[int, int, int]]
    """
    loops = []
    for i in range(1, w.strands):
        positions = [k for k, e in enumerate(w.letters) if abs(e) == i]
        for a, b in zip(positions, positions[1:]):
            loops.append((i, a, b))
    return loops


def _linking(w, first, second):
    """
    Linking number of loop ``first`` with the positive push-off of loop ``second``.
    """
    sign = [1 if e > 0 else -1 for e in w.letters]
    i, a, b = first
    j, c, d = second
    if first == second:
        return -(sign[a] + sign[b]) // 2
    if i == j:
        if b == c:
            return (sign[b] - 1) // 2
        if d == a:
            return (sign[a] + 1) // 2
        return 0
    if i == j + 1:
        if c < a < d < b:
            return -1
        if a < c < b < d:
            return 1
    return 0


def seifert_matrix_from_braid(w):
    """
    Seifert form of the canonical surface of the closed braid, in the basis of fundamental loops.
    :rtype: SeifertMatrix
    """
    graph_from_braid(w)
    loops = _fundamental_loops(w)
    return SeifertMatrix([[_linking(w, row, col) for col in loops] for row in loops])


def conway_from_seifert(a):
    """
    det(x A - x^-1 A^T) rewritten in z = x - x^-1, with x negated so that the
    closure of sigma_1^3 gets 1 + z^2.
    :rtype: ConwayPolynomial
    """
    n = a.size
    if n == 0:
        return ConwayPolynomial.one()
    m = a.to_sympy()
    ring = ZZ[x]
    # x^n det(x A - x^-1 A^T), fraction free over Z[x]
    det = DomainMatrix.from_Matrix(x ** 2 * m - m.T).convert_to(ring).det()
    scaled = Poly(ring.to_sympy(det), x, domain=ZZ)
    coeffs = [0] * (n + 1)
    while not scaled.is_zero:
        d = scaled.degree() - n
        if d < 0:
            raise NotRepresentable(_('Remainder %(rest)s has no z form') % {'rest': scaled.as_expr()})
        lead = int(scaled.LC())
        coeffs[d] = lead
        scaled = scaled - Poly(lead * x ** (n - d) * (x ** 2 - 1) ** d, x, domain=ZZ)
    logger.debug('Conway coefficients before sign fix: %s', coeffs)
    return ConwayPolynomial(c if d % 2 == 0 else -c for d, c in enumerate(coeffs))


def flat2_form_check(p):
    """
    Least ``k >= 0`` with ``p == 1 - k(k + 1) z^2``, otherwise ``None``.
    """
    if p.coeffs == (1,):
        return 0
    if len(p.coeffs) != 3 or p.coeffs[0] != 1 or p.coeffs[1] != 0:
        return None
    product = -p.coeffs[2]
    if product <= 0:
        return None
    k = (math.isqrt(4 * product + 1) - 1) // 2
    if k * (k + 1) == product:
        return k
    return None


def conway_degree_genus_bound(p, l):
    """
    Genus lower bound from deg p <= 2g + l - 1.
    """
    if p.is_zero():
        return 0
    return max(0, -((l - 1 - p.degree) // 2))


def band_index_one_check(w):
    """
    ``n`` when the freely reduced word is sigma_1^(2n) on two strands, otherwise ``None``.
    """
    reduced = free_reduce(w)
    if reduced.strands != 2 or not reduced.letters or len(reduced.letters) % 2:
        return None
    if len(set(reduced.letters)) != 1:
        return None
    return reduced.letters[0] * len(reduced.letters) // 2
