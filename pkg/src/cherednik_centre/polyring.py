"""Exact sparse polynomials in ``u`` and graded generator symbols ``f_{i,j}``.

Coefficients are arbitrary-precision rationals (`fractions.Fraction`); there
is no floating point anywhere in the package.  A polynomial is a dict mapping
monomials to non-zero coefficients, where a monomial is

    (u_exponent, ((GenSym(row, degree), exponent), ...))

with the generator factors sorted by symbol and all exponents positive.  The
zero polynomial is the empty dict.  Treat polynomials as immutable values:
every operation returns a fresh dict.

Grading: ``deg u = 1`` and ``deg f_{i,j} = j``; a polynomial all of whose
monomials share the same weighted degree is homogeneous.

The canonical term order (used for printing and for picking leading terms) is
graded lexicographic with ``u`` greatest, then generators compared by
``(row, degree)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import InexactDivision, NonSquare, ZeroPolynomial


class GenSym(NamedTuple):
    """The symbol ``f_{row, degree}``; its weighted degree is ``degree``."""

    row: int
    degree: int


GenVec = tuple[tuple[GenSym, int], ...]
Monomial = tuple[int, GenVec]
MPoly = dict[Monomial, Fraction]

ONE_MONO: Monomial = (0, ())


class Inhomogeneous:
    """Marker returned by :func:`weighted_degree` for mixed-degree polynomials."""

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "Inhomogeneous"


INHOMOGENEOUS = Inhomogeneous()


def zero() -> MPoly:
    return {}


def const(value) -> MPoly:
    value = Fraction(value)
    return {ONE_MONO: value} if value else {}


def u_power(k: int = 1) -> MPoly:
    return {(k, ()): Fraction(1)}


def gen(symbol: GenSym, exponent: int = 1) -> MPoly:
    if exponent == 0:
        return const(1)
    return {(0, ((symbol, exponent),)): Fraction(1)}


def monomial(u_exp: int, factors: dict[GenSym, int], coeff=1) -> MPoly:
    coeff = Fraction(coeff)
    if not coeff:
        return {}
    vec = tuple(sorted((s, e) for s, e in factors.items() if e))
    return {(u_exp, vec): coeff}


def add(p: MPoly, q: MPoly) -> MPoly:
    out = dict(p)
    for mono, c in q.items():
        s = out.get(mono, Fraction(0)) + c
        if s:
            out[mono] = s
        else:
            out.pop(mono, None)
    return out


def neg(p: MPoly) -> MPoly:
    return {mono: -c for mono, c in p.items()}


def sub(p: MPoly, q: MPoly) -> MPoly:
    return add(p, neg(q))


def scale(p: MPoly, value) -> MPoly:
    value = Fraction(value)
    if not value:
        return {}
    return {mono: c * value for mono, c in p.items()}


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not b[1]:
        return (a[0] + b[0], a[1])
    if not a[1]:
        return (a[0] + b[0], b[1])
    exps: dict[GenSym, int] = dict(a[1])
    for s, e in b[1]:
        exps[s] = exps.get(s, 0) + e
    return (a[0] + b[0], tuple(sorted(exps.items())))


def mul(p: MPoly, q: MPoly) -> MPoly:
    out: MPoly = {}
    for ma, ca in p.items():
        for mb, cb in q.items():
            mono = _mono_mul(ma, mb)
            s = out.get(mono, Fraction(0)) + ca * cb
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
    return out


def d_du(p: MPoly) -> MPoly:
    """Formal derivative in ``u``; generator symbols are constants."""
    out: MPoly = {}
    for (ue, gens), c in p.items():
        if ue:
            out[(ue - 1, gens)] = c * ue
    return out


def monomial_degree(mono: Monomial) -> int:
    ue, gens = mono
    return ue + sum(s.degree * e for s, e in gens)


def weighted_degree(p: MPoly):
    """Common weighted degree, or the :data:`INHOMOGENEOUS` marker.

    Raises :class:`ZeroPolynomial` on the zero polynomial (no degree).
    """
    if not p:
        raise ZeroPolynomial("the zero polynomial has no weighted degree")
    degrees = {monomial_degree(mono) for mono in p}
    if len(degrees) == 1:
        return degrees.pop()
    return INHOMOGENEOUS


def coefficient_of_u(p: MPoly, k: int) -> MPoly:
    """The coefficient of ``u^k`` as a polynomial in the generators alone."""
    return {(0, gens): c for (ue, gens), c in p.items() if ue == k}


def constant_value(p: MPoly) -> Fraction:
    """The value of a constant polynomial (raises on non-constant input)."""
    if not p:
        return Fraction(0)
    if set(p) != {ONE_MONO}:
        raise ValueError("polynomial is not constant")
    return p[ONE_MONO]


def divide_exact(p: MPoly, divisor: MPoly) -> MPoly:
    """Divide by a single-term polynomial; every step must be exact.

    Raises :class:`InexactDivision` if the divisor has several terms, is
    zero, or fails to divide some monomial of ``p``.
    """
    if len(divisor) != 1:
        raise InexactDivision("divisor must be a non-zero single-term polynomial")
    (d_ue, d_gens), d_coeff = next(iter(divisor.items()))
    d_exps = dict(d_gens)
    out: MPoly = {}
    for (ue, gens), c in p.items():
        if ue < d_ue:
            raise InexactDivision("u-exponent too small")
        exps = dict(gens)
        for s, e in d_exps.items():
            have = exps.get(s, 0)
            if have < e:
                raise InexactDivision(f"generator {s} does not divide")
            if have == e:
                del exps[s]
            else:
                exps[s] = have - e
        out[(ue - d_ue, tuple(sorted(exps.items())))] = c / d_coeff
    return out


# ---------------------------------------------------------------------------
# determinants


def determinant(matrix: Sequence[Sequence[MPoly]]) -> MPoly:
    """Exact determinant of a square matrix of polynomials.

    Laplace expansion along rows, memoized over the set of unused columns
    (``2^n * n`` polynomial multiplications); entries here are sparse, and
    sizes up to ``n = 10`` are fine.  The empty matrix has determinant 1.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise NonSquare(tuple(len(row) for row in matrix))
    memo: dict[tuple[int, ...], MPoly] = {}

    def expand(cols_left: tuple[int, ...]) -> MPoly:
        if not cols_left:
            return const(1)
        cached = memo.get(cols_left)
        if cached is not None:
            return cached
        row = n - len(cols_left)
        acc: MPoly = {}
        for idx, col in enumerate(cols_left):
            entry = matrix[row][col]
            if not entry:
                continue
            term = mul(entry, expand(cols_left[:idx] + cols_left[idx + 1 :]))
            acc = add(acc, term if idx % 2 == 0 else neg(term))
        memo[cols_left] = acc
        return acc

    return expand(tuple(range(n)))


# ---------------------------------------------------------------------------
# rendering

def term_sort_key(mono: Monomial):
    """Graded lex, ``u`` greatest, generators by ``(row, degree)``."""
    ue, gens = mono
    return (-monomial_degree(mono), -ue, gens)


def format_coefficient(c: Fraction) -> str:
    return str(c)


def _format_factors(mono: Monomial, prefix: str) -> str:
    ue, gens = mono
    pieces = []
    for s, e in gens:
        name = f"{prefix}{s.row},{s.degree}"
        pieces.append(name if e == 1 else f"{name}^{e}")
    if ue:
        pieces.append("u" if ue == 1 else f"u^{ue}")
    return "*".join(pieces)


def format_poly(p: MPoly, prefix: str = "f") -> str:
    """Canonical text rendering, e.g. ``u^2 - 2*f2,1*u + 3/5*f1,2``."""
    if not p:
        return "0"
    pieces: list[str] = []
    for mono in sorted(p, key=term_sort_key):
        c = p[mono]
        factors = _format_factors(mono, prefix)
        if not factors:
            body = format_coefficient(abs(c))
        elif abs(c) == 1:
            body = factors
        else:
            body = f"{format_coefficient(abs(c))}*{factors}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)
