"""Isometry identities between squared norms of polynomial maps.

The central identity has the shape

    (1 + ||z||^2)^b * (1 + ||f(z)||^2)^c  ==  (1 + ||h(z)||^2)^a

for maps f, h vanishing at the origin.  Given f, b, c the left side is an
explicit Hermitian form; when its non-constant block is positive
semidefinite the exact square extraction produces a witness h with the
minimal number of components, and ``verify_identity`` replays the identity
as an equality of canonical forms, which is exact and certificate-free.

``divide_by_norm`` answers the converse question of when a squared norm
factors through ||z||^2, by solving the coefficient convolution system
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, gcd
from typing import List, Optional, Sequence, Tuple, Union

from .polyalg import (
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    HermitianForm,
    HoloMap,
    HoloPoly,
    Monomial,
    grlex_key,
    monomials_of_degree,
    norm_form,
)
from .rankdecomp import ScaledMap, affine_split, extract_sos, inertia, reduce_minimal

MapLike = Union[HoloMap, ScaledMap]


class NotNormalizedError(ValueError):
    """The map fails the normalization f(0) = 0."""


class NotMinimalError(ValueError):
    """The map has linearly dependent components."""


def _check_normalized(f: MapLike):
    if not f.vanishes_at_zero:
        raise NotNormalizedError("map must vanish at the origin")


def _check_minimal(f: MapLike):
    pairs = list(f.weighted_components())
    _, rank = reduce_minimal(f)
    if rank != len(pairs):
        raise NotMinimalError("map components must be linearly independent")


@dataclass(frozen=True)
class ModificationSpec:
    """Input data (f, a, b, c) for one modification identity."""

    f: MapLike
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"exponent {name} must be a positive integer")
        if gcd(gcd(self.a, self.b), self.c) != 1:
            raise ValueError("exponents must have gcd 1")
        _check_normalized(self.f)
        _check_minimal(self.f)

    @property
    def n(self) -> int:
        return self.f.n


def one_plus_norm(f: MapLike) -> HermitianForm:
    """The Hermitian form 1 + ||f||^2."""
    return norm_form(f) + HermitianForm.constant(f.n, 1)


def one_plus_norm_z(n: int) -> HermitianForm:
    """The Hermitian form 1 + ||z||^2 = 1 + sum |z_i|^2."""
    return one_plus_norm(HoloMap.variables(n))


def modification_form(spec: ModificationSpec) -> HermitianForm:
    """The left-hand form (1 + ||z||^2)^b (1 + ||f||^2)^c, expanded exactly."""
    return one_plus_norm_z(spec.n) ** spec.b * one_plus_norm(spec.f) ** spec.c


def solve_h(f: MapLike, b: int, c: int) -> ScaledMap:
    """A minimal map h with 1 + ||h||^2 == (1 + ||z||^2)^b (1 + ||f||^2)^c.

    Requires f normalized (f(0) = 0) and minimal.  The left side expands to
    1 plus a positive semidefinite block, so the extraction always succeeds;
    it returns rank-many components, which is the least possible count.
    """
    spec = ModificationSpec(f, 1, b, c)
    total = modification_form(spec)
    ok, _ = affine_split(total)
    if not ok:
        raise ArithmeticError("expansion lost positivity; this cannot happen")
    const = Monomial((0,) * f.n)
    block = total.restrict([m for m in total.basis if m != const])
    return extract_sos(block)


def verify_identity(f: MapLike, h: MapLike, a: int, b: int, c: int) -> bool:
    """Exact check of (1 + ||z||^2)^b (1 + ||f||^2)^c == (1 + ||h||^2)^a.

    Both sides expand to canonical Hermitian forms; equality of forms is
    structural equality.  Exponents must be positive with gcd 1.
    """
    spec = ModificationSpec(f, a, b, c)
    _check_normalized(h)
    left = modification_form(spec)
    right = one_plus_norm(h) ** a
    return left == right


def identity_mismatch(f: MapLike, h: MapLike, a: int, b: int, c: int) -> List[Tuple[Monomial, Monomial, GaussianRational]]:
    """Nonzero entries of left minus right, for diagnostics; empty iff the identity holds."""
    spec = ModificationSpec(f, a, b, c)
    _check_normalized(h)
    left = modification_form(spec)
    right = one_plus_norm(h) ** a
    diff = left + HermitianForm(
        right.n, right.basis, [[-v for v in row] for row in right.gram]
    )
    return sorted(
        diff.entries(), key=lambda e: (grlex_key(e[0]), grlex_key(e[1]))
    )


def tensor_power_rank(f: MapLike, c: int) -> int:
    """Rank of (1 + ||f||^2)^c - 1 for a normalized minimal map f.

    The block expands over products of at most c components, so the rank e
    satisfies  c*d <= e <= sum_{k=1..c} C(d+k-1, k)  where d = len(f); both
    ends are checked defensively before returning.
    """
    if not isinstance(c, int) or c < 1:
        raise ValueError("power must be a positive integer")
    _check_normalized(f)
    _check_minimal(f)
    pairs = list(f.weighted_components())
    d = len(pairs)
    prods: List[Tuple[Fraction, HoloPoly]] = []
    for k in range(1, c + 1):
        scale = Fraction(comb(c, k))
        for combo in combinations_with_replacement(range(d), k):
            weight = scale
            poly = HoloPoly.constant(f.n, 1)
            counts = {i: combo.count(i) for i in set(combo)}
            multi = 1
            total = k
            for i, cnt in counts.items():
                multi *= comb(total, cnt)
                total -= cnt
            weight = weight * multi
            for i in combo:
                wi, pi = pairs[i]
                weight = weight * wi
                poly = poly * pi
            prods.append((weight, poly))
    _, e = reduce_minimal(ScaledMap(f.n, tuple(prods)))
    low, high = c * d, sum(comb(d + k - 1, k) for k in range(1, c + 1))
    if not low <= e <= high:
        raise ArithmeticError("tensor power rank escaped its proven range")
    return e


def divide_by_norm(s: HermitianForm) -> Optional[HermitianForm]:
    """Exact quotient s / ||z||^2 as a Hermitian form, or None.

    s must be bihomogeneous (every basis monomial of one common degree).
    The convolution system (||z||^2 * R)[alpha][beta] = s[alpha][beta]
    decouples over the difference vector alpha - beta; each block is an
    overdetermined linear system with at most one solution, solved exactly.
    Returns None when no exact quotient exists.
    """
    if not s.basis:
        return s
    degs = s.degrees()
    if len(degs) != 1:
        raise ValueError("form must be bihomogeneous")
    d = degs.pop()
    if d == 0:
        return None
    n = s.n
    lower = monomials_of_degree(n, d - 1)
    upper = monomials_of_degree(n, d)

    def minus(mon: Monomial, j: int) -> Optional[Monomial]:
        exps = mon.exponents
        if exps[j] == 0:
            return None
        return Monomial(exps[:j] + (exps[j] - 1,) + exps[j + 1 :])

    # group unknown pairs and equations by the difference vector
    diffs = sorted(
        {
            tuple(x - y for x, y in zip(a.exponents, b.exponents))
            for a, b, _ in s.entries()
        }
    )
    quotient: dict = {}
    for diff in diffs:
        unknowns: List[Tuple[Monomial, Monomial]] = []
        for ga in lower:
            gb_exps = tuple(x - y for x, y in zip(ga.exponents, diff))
            if any(e < 0 for e in gb_exps):
                continue
            gb = Monomial(gb_exps)
            if gb.degree == d - 1:
                unknowns.append((ga, gb))
        col = {pair: idx for idx, pair in enumerate(unknowns)}
        rows: List[List[GaussianRational]] = []
        rhs: List[GaussianRational] = []
        for sa in upper:
            sb_exps = tuple(x - y for x, y in zip(sa.exponents, diff))
            if any(e < 0 for e in sb_exps):
                continue
            sb = Monomial(sb_exps)
            row = [GR_ZERO] * len(unknowns)
            hit = False
            for j in range(n):
                ga = minus(sa, j)
                gb = minus(sb, j)
                if ga is None or gb is None:
                    continue
                idx = col.get((ga, gb))
                if idx is not None:
                    row[idx] = row[idx] + GR_ONE
                    hit = True
            value = s.coefficient(sa, sb)
            if not hit:
                if value:
                    return None
                continue
            rows.append(row)
            rhs.append(value)
        solution = _solve_linear(rows, rhs)
        if solution is None:
            return None
        for pair, value in zip(unknowns, solution):
            if value:
                quotient[pair] = value
    r = HermitianForm.from_entries(n, quotient)
    # defensive recomposition; the block solves are individually exact,
    # but this guards the assembly across blocks
    one_norm = norm_form(HoloMap.variables(n))
    if one_norm * r != s:
        return None
    return r


def _solve_linear(
    rows: List[List[GaussianRational]], rhs: List[GaussianRational]
) -> Optional[List[GaussianRational]]:
    """Solve an exact linear system with a unique candidate solution.

    Returns None when inconsistent.  Raises if a free column survives,
    which the callers' systems never produce.
    """
    m = len(rows)
    width = len(rows[0]) if m else 0
    aug = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    r = 0
    pivots = []
    for c in range(width):
        pivot = next((i for i in range(r, m) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = GR_ONE / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                factor = aug[i][c]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][width]:
            return None
    if len(pivots) != width:
        raise ArithmeticError("underdetermined block; the divisor is a nonzerodivisor")
    out = [GR_ZERO] * width
    for i, c in enumerate(pivots):
        out[c] = aug[i][width]
    return out


def r_lambda(lam) -> HermitianForm:
    """One-variable family diag(1, 4, 6 - lam, 4, 1) on basis 1, z, z^2, z^3, z^4.

    At lam = 0 this is (1 + |z|^2)^4 restricted to its diagonal; the family
    stays a squared norm exactly while lam <= 6.
    """
    lam = Fraction(lam)
    coeffs = [Fraction(1), Fraction(4), Fraction(6) - lam, Fraction(4), Fraction(1)]
    entries = {}
    for k, value in enumerate(coeffs):
        if value:
            mon = Monomial((k,))
            entries[(mon, mon)] = value
    return HermitianForm.from_entries(1, entries)
