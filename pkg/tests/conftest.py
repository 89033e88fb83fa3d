"""Shared generators and independent oracles for the test suite.

Randomized tests use explicit seeded random.Random instances so every run
is reproducible.  Oracles here deliberately avoid the code paths they
check: squared norms are validated by pointwise evaluation over exact
rationals, inertia by explicit congruence matrices, ranks by counting.
"""

from fractions import Fraction
from typing import List

from hermsos import (
    GR_ZERO,
    GaussianRational,
    HermitianForm,
    HoloMap,
    HoloPoly,
    Monomial,
    monomials_of_degree,
    monomials_up_to_degree,
)


def mono(*exps) -> Monomial:
    return Monomial(tuple(exps))


def rand_fraction(rng, height=4) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def rand_scalar(rng, height=4) -> GaussianRational:
    return GaussianRational(rand_fraction(rng, height), rand_fraction(rng, height))


def rand_nonzero_scalar(rng, height=4) -> GaussianRational:
    while True:
        value = rand_scalar(rng, height)
        if value:
            return value


def rand_point(rng, n, height=3) -> List[GaussianRational]:
    return [rand_scalar(rng, height) for _ in range(n)]


def rand_poly(rng, n, degree_max=2, height=4, vanish=True, homogeneous=None) -> HoloPoly:
    """A random nonzero polynomial; ``homogeneous=d`` restricts support to degree d."""
    if homogeneous is not None:
        mons = monomials_of_degree(n, homogeneous)
    else:
        low = 1 if vanish else 0
        mons = [m for m in monomials_up_to_degree(n, degree_max) if m.degree >= low]
    while True:
        terms = {}
        for m in mons:
            if rng.random() < 0.5:
                value = rand_fraction(rng, height)
                if value:
                    terms[m] = value
        poly = HoloPoly(n, terms)
        if not poly.is_zero:
            return poly


def rand_plain_map(rng, n, p, degree_max=2, height=4, vanish=True) -> HoloMap:
    """A random map; components may be linearly dependent."""
    return HoloMap(n, [rand_poly(rng, n, degree_max, height, vanish) for _ in range(p)])


def norm_value(f, point) -> Fraction:
    """Pointwise squared norm, computed without any form machinery."""
    total = Fraction(0)
    for weight, poly in f.weighted_components():
        total += weight * poly.evaluate(point).abs2()
    return total


# -- small exact matrix helpers for congruence tests ------------------------


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[GR_ZERO] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            if not a[i][k]:
                continue
            for j in range(cols):
                if b[k][j]:
                    out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def mat_conj_t(a):
    rows, cols = len(a), len(a[0]) if a else 0
    return [[a[i][j].conjugate() for i in range(rows)] for j in range(cols)]


def rand_invertible(rng, size, height=3):
    """L * diag * U with unit triangular L, U and nonzero diagonal: invertible."""
    lower = [[GR_ZERO] * size for _ in range(size)]
    upper = [[GR_ZERO] * size for _ in range(size)]
    diag = [[GR_ZERO] * size for _ in range(size)]
    for i in range(size):
        lower[i][i] = GaussianRational(1)
        upper[i][i] = GaussianRational(1)
        diag[i][i] = rand_nonzero_scalar(rng, height)
        for j in range(i):
            lower[i][j] = rand_scalar(rng, height)
            upper[j][i] = rand_scalar(rng, height)
    return mat_mul(mat_mul(lower, diag), upper)


def congruent_form(form: HermitianForm, p) -> HermitianForm:
    """The form with Gram matrix P G P^H over the same basis."""
    gram = mat_mul(mat_mul(p, [list(row) for row in form.gram]), mat_conj_t(p))
    return HermitianForm(form.n, list(form.basis), gram)


def rand_hermitian_form(rng, n, degree_max=1, height=3) -> HermitianForm:
    """A random Hermitian (usually indefinite) form: R + R^H over a small basis."""
    basis = monomials_up_to_degree(n, degree_max)
    size = len(basis)
    raw = [[rand_scalar(rng, height) for _ in range(size)] for _ in range(size)]
    herm = [
        [raw[i][j] + raw[j][i].conjugate() for j in range(size)] for i in range(size)
    ]
    return HermitianForm(n, basis, herm)
