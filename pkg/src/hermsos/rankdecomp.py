"""Rank, inertia, and sum-of-squares structure of Hermitian forms.

Everything here runs over exact Gaussian-rational arithmetic:

  * ``inertia``       signature (positive, negative) of the Gram matrix by
                      Hermitian congruence diagonalization; basis-independent.
  * ``extract_sos``   write a positive semidefinite form as an exact weighted
                      sum of squared moduli of polynomials (an LDL^H
                      factorization read off column by column), or raise
                      ``NotSOSError`` with a witness of indefiniteness.
  * ``reduce_minimal``  replace a map by linearly independent components with
                      the same squared norm, giving the rank of the form.
  * ``affine_split``  test whether a form is 1 + ||h||^2 for some map h and
                      report the number of squares.

The number of squares in any such representation is bounded below by the
rank, and ``extract_sos`` achieves the rank, so these routines together
decide minimality questions exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Tuple

from .polyalg import (
    GR_I,
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    HermitianForm,
    HoloMap,
    HoloPoly,
    Monomial,
    grlex_key,
    norm_form,
)


class NotSOSError(ValueError):
    """The form admits no representation as a sum of squared moduli."""


class Inertia(NamedTuple):
    pos: int
    neg: int

    @property
    def rank(self) -> int:
        return self.pos + self.neg


def inertia(form: HermitianForm) -> Inertia:
    """Signature of the Gram matrix by exact congruence diagonalization.

    Congruence H -> P H P^H preserves the signature, so the count of
    positive and negative pivots after full diagonalization is independent
    of the monomial basis used to present the form.
    """
    size = form.size
    h = [list(row) for row in form.gram]
    pos = neg = 0
    for k in range(size):
        # find a usable pivot: a nonzero diagonal entry in the trailing block
        pivot = next((i for i in range(k, size) if h[i][i]), None)
        if pivot is None:
            # diagonal is all zero; look for any nonzero off-diagonal entry
            loc = next(
                (
                    (i, j)
                    for i in range(k, size)
                    for j in range(i + 1, size)
                    if h[i][j]
                ),
                None,
            )
            if loc is None:
                break  # trailing block is zero, done
            i, j = loc
            w = h[i][j]
            # row_i += c * row_j and col_i += conj(c) * col_j puts
            # 2*Re(c*w) on the diagonal; pick c so that it is nonzero
            c = GR_ONE if w.re else GR_I
            cbar = c.conjugate()
            for t in range(k, size):
                h[i][t] = h[i][t] + c * h[j][t]
            for t in range(k, size):
                h[t][i] = h[t][i] + cbar * h[t][j]
            pivot = i
        if pivot != k:
            h[k], h[pivot] = h[pivot], h[k]
            for row in h:
                row[k], row[pivot] = row[pivot], row[k]
        d = h[k][k]
        if d.re > 0:
            pos += 1
        else:
            neg += 1
        # Schur update of the trailing block: row k then column k are
        # eliminated by congruence, which keeps the block Hermitian
        for i in range(k + 1, size):
            m = h[i][k] / d
            if not m:
                continue
            for j in range(k, size):
                h[i][j] = h[i][j] - m * h[k][j]
        for i in range(k + 1, size):
            h[k][i] = GR_ZERO
        h[k][k] = d
    return Inertia(pos, neg)


@dataclass(frozen=True)
class ScaledMap:
    """A map with a positive rational weight per component.

    Represents the squared-norm decomposition sum_k w_k |p_k(z)|^2; weights
    let the extraction stay inside Gaussian rationals where a plain map
    would need square roots.
    """

    n: int
    components: Tuple[Tuple[Fraction, HoloPoly], ...]

    def __post_init__(self):
        comps = tuple((Fraction(w), p) for w, p in self.components)
        for weight, poly in comps:
            if weight <= 0:
                raise ValueError("weights must be positive")
            if not isinstance(poly, HoloPoly) or poly.n != self.n:
                raise ValueError("component has wrong variable count")
        object.__setattr__(self, "components", comps)

    def __len__(self) -> int:
        return len(self.components)

    def weighted_components(self) -> Iterator[Tuple[Fraction, HoloPoly]]:
        return iter(self.components)

    @property
    def vanishes_at_zero(self) -> bool:
        return all(poly.vanishes_at_zero for _, poly in self.components)

    @property
    def max_degree(self) -> int:
        return max((poly.degree for _, poly in self.components), default=0)

    def __str__(self) -> str:
        inner = ", ".join(f"{w}*|{p}|^2" for w, p in self.components)
        return f"ScaledMap({inner})"


def extract_sos(form: HermitianForm) -> ScaledMap:
    """Exact LDL^H decomposition of a positive semidefinite form.

    Returns a scaled map h with rank(form) components whose squared norm
    reproduces the form.  A negative pivot, or a zero diagonal entry whose
    row is not yet eliminated, certifies indefiniteness and raises
    ``NotSOSError``; for a PSD matrix neither can occur, so no pivoting is
    ever needed.
    """
    size = form.size
    h = [list(row) for row in form.gram]
    comps: List[Tuple[Fraction, HoloPoly]] = []
    for k in range(size):
        d = h[k][k]
        if not d:
            if any(h[k][j] for j in range(k, size)):
                raise NotSOSError(
                    "zero diagonal entry with a nonzero row: the form is indefinite"
                )
            continue
        if d.im or d.re < 0:
            raise NotSOSError(f"negative pivot {d} at {form.basis[k]}: not a sum of squares")
        # column k of the factor, scaled so the pivot coefficient is 1
        mults = {i: h[i][k] / d for i in range(k + 1, size) if h[i][k]}
        column = {form.basis[k]: GR_ONE}
        column.update({form.basis[i]: li for i, li in mults.items()})
        comps.append((d.re, HoloPoly(form.n, column)))
        for i, li in mults.items():
            dli = d * li
            for j, lj in mults.items():
                h[i][j] = h[i][j] - dli * lj.conjugate()
        for i in range(k + 1, size):
            h[k][i] = GR_ZERO
            h[i][k] = GR_ZERO
    return ScaledMap(form.n, tuple(comps))


def reduce_minimal(f) -> Tuple[HoloMap, int]:
    """A basis of the component span, and its dimension.

    Row-reduces the coefficient matrix of the components over the Gaussian
    rationals.  The returned map's components are linearly independent and
    span the same space, and their count equals the rank of ||f||^2,
    because the Gram matrix of a map factors through the component span.
    (The returned basis is not isometric to f; use ``extract_sos`` on the
    form when the squared norm itself must be preserved.)  Scaled maps are
    accepted; positive weights never change the span.
    """
    pairs = list(f.weighted_components())
    support = sorted({mon for _, poly in pairs for mon in poly.terms}, key=grlex_key)
    index = {mon: j for j, mon in enumerate(support)}
    width = len(support)
    rows: List[List[GaussianRational]] = []
    for _, poly in pairs:
        if poly.is_zero:
            continue
        row = [GR_ZERO] * width
        for mon, val in poly.terms.items():
            row[index[mon]] = val
        rows.append(row)
    # Gauss-Jordan to reduced row echelon form
    pivots: List[int] = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = GR_ONE / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                m = rows[i][c]
                rows[i] = [a - m * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    comps = []
    for i in range(r):
        terms = {support[j]: rows[i][j] for j in range(width) if rows[i][j]}
        comps.append(HoloPoly(f.n, terms))
    return HoloMap(f.n, comps), r


def grams_equal(f, g) -> bool:
    """Whether two maps have identical squared norms.

    This is the right notion of equivalence for decompositions: maps give
    the same form iff they differ by an isometry of the component span.
    """
    if f.n != g.n:
        return False
    return norm_form(f) == norm_form(g)


def affine_split(form: HermitianForm) -> Tuple[bool, int]:
    """Test whether form == 1 + ||h||^2 for some map h.

    Returns (True, m) with m the minimal number of components of such an h,
    or (False, 0).  Requires the constant coefficient to be exactly 1, no
    coupling between the constant and the rest of the basis, and the
    remaining block to be positive semidefinite.
    """
    const = Monomial((0,) * form.n)
    if form.constant_coefficient() != GR_ONE:
        return False, 0
    if any(
        (ma == const) != (mb == const) for ma, mb, _ in form.entries()
    ):
        return False, 0
    block = form.restrict([m for m in form.basis if m != const])
    sig = inertia(block)
    if sig.neg:
        return False, 0
    return True, sig.pos
