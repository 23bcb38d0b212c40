"""Seeded random instances for property checks and the lemma driver.

Everything is driven by `random.Random(seed)`, so identical seeds give
identical instance streams.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .algebra import ExtForm, Vector, make_form, masks_of_size, indices_of
from .subspace import Subspace


def rng_for(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(rng: random.Random, lo: int = -3, hi: int = 3,
                    max_den: int = 1) -> Fraction:
    num = rng.randint(lo, hi)
    den = rng.randint(1, max_den) if max_den > 1 else 1
    return Fraction(num, den)


def random_vector(rng: random.Random, dim: int, nonzero: bool = False) -> Vector:
    while True:
        v = Vector(dim, tuple(random_rational(rng) for _ in range(dim)))
        if not nonzero or not v.is_zero():
            return v


def random_form(rng: random.Random, dim: int, degree: int,
                density: float = 0.6, nonzero: bool = False) -> ExtForm:
    while True:
        terms = []
        for mask in masks_of_size(dim, degree):
            if rng.random() < density:
                c = random_rational(rng)
                if c:
                    terms.append((indices_of(mask), c))
        f = make_form(dim, degree, terms)
        if not nonzero or not f.is_zero():
            return f


def random_invertible(rng: random.Random, n: int) -> list[list[Fraction]]:
    while True:
        m = [[random_rational(rng, -2, 2) for _ in range(n)] for _ in range(n)]
        if linalg.det(m) != 0:
            return m


def standard_rank_p(n: int, p: int) -> ExtForm:
    """alpha_1^alpha_2 + ... + alpha_{2p-1}^alpha_{2p} on dimension n."""
    return make_form(n, 2, [((2 * i - 1, 2 * i), 1) for i in range(1, p + 1)])


def two_form_from_skew(m: list[list[Fraction]]) -> ExtForm:
    n = len(m)
    terms = []
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j]:
                terms.append(((i + 1, j + 1), m[i][j]))
    return make_form(n, 2, terms)


def congruence(omega: ExtForm, a: list[list[Fraction]]) -> ExtForm:
    """2-form with coefficient matrix A^T B A; preserves the rank exactly."""
    from .wedge_solver import skew_matrix

    b = skew_matrix(omega)
    n = len(a)
    bt = [[sum(b[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    atba = [[sum(a[k][i] * bt[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return two_form_from_skew(atba)


def random_rank_p_two_form(rng: random.Random, n: int, p: int) -> ExtForm:
    """Random 2-form of exact rank p via congruence of the standard one."""
    if 2 * p > n:
        raise ValueError("rank p needs dimension >= 2p")
    return congruence(standard_rank_p(n, p), random_invertible(rng, n))


def random_subspace(rng: random.Random, n: int, p: int) -> Subspace:
    """Random p-dimensional subspace of an n-dimensional space, p < n."""
    if not 0 <= p < n:
        raise ValueError("need 0 <= p < n")
    while True:
        vecs = [random_vector(rng, n) for _ in range(p)]
        rows = [list(v.components) for v in vecs]
        if p == 0 or linalg.rank(rows, n) == p:
            return Subspace(n, tuple(vecs))
