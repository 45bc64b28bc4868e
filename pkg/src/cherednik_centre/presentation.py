"""Graded presentations of the blocks A(lam)+ built from the Young diagram.

Generators: one symbol ``f_{i, h}`` per cell ``(i, j)`` of the diagram,
where ``h = hook_length(lam, (i, j))`` — hooks within a row are distinct, so
the cell is recoverable from ``(row, hook)``.  The grading degree of
``f_{i,h}`` is ``h``.

Relations: for ``s = 1..n`` the relation ``r_s`` is the sum over all
*transversal* monomials of degree ``s`` — products of cells with pairwise
distinct rows and pairwise distinct columns, degree = sum of hook lengths —
of an exact integer coefficient, the Vandermonde-type product

    coeff(m) = prod_{1 <= i < j <= n} (e_i - e_j),

where ``e_i = d_i - h`` if the monomial uses the cell of row ``i`` with hook
``h``, and ``e_i = d_i`` otherwise (``d`` the beta-set padded to ``n``).
A global orientation factor ``(-1)^{n(n-1)/2}`` on every relation aligns the
coefficients with the Wronskian determinant's row/column convention, so the
oracle comparison in the test-suite is exact equality, term by term.

The wreath variant for an ``ell``-multipartition ``q`` works on
``lam = from_quotient(q, ell)``: it keeps only the generators whose hook is
divisible by ``ell`` and the relations of degree ``ell, 2*ell, ...``, with
monomials containing a killed generator dropped.

``simplify`` performs the standard elimination of generators that occur
linearly, giving a reduced presentation with monic relations.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, Union

from .abacus import MultiPartition, from_quotient
from .errors import CellOutOfDiagram, EllOutOfRange, LengthMismatch
from .partitions import Cell, Partition, beta_set, cells, hook_length, weight
from .polyring import (
    GenSym,
    MPoly,
    Monomial,
    add,
    format_poly,
    monomial,
    mul,
    scale,
    term_sort_key,
    weighted_degree,
)

Label = Union[Partition, MultiPartition]


@dataclass(frozen=True)
class PresentationMeta:
    source: Label
    ell: int
    orientation: int
    simplified: bool = False
    prefix: str = "f"


@dataclass(frozen=True)
class GradedPresentation:
    """Generators with signed degrees, homogeneous relations, provenance."""

    generators: tuple[tuple[GenSym, int], ...]
    relations: tuple[MPoly, ...]
    meta: PresentationMeta

    def generator_symbols(self) -> tuple[GenSym, ...]:
        return tuple(g for g, _ in self.generators)


@dataclass(frozen=True)
class TransversalMonomial:
    """Cells with pairwise-distinct rows and columns; degree = sum of hooks."""

    cells: tuple[Cell, ...]
    degree: int


def transversal_monomials(lam: Partition) -> Iterator[TransversalMonomial]:
    """All transversal monomials of degree <= weight(lam), empty one included."""
    n = weight(lam)
    row_cells = [
        [(j, hook_length(lam, (i, j))) for j in range(1, lam[i - 1] + 1)]
        for i in range(1, len(lam) + 1)
    ]

    def grow(
        row_idx: int, chosen: tuple[Cell, ...], used_cols: frozenset[int], degree: int
    ) -> Iterator[TransversalMonomial]:
        if row_idx == len(row_cells):
            yield TransversalMonomial(chosen, degree)
            return
        yield from grow(row_idx + 1, chosen, used_cols, degree)
        for j, h in row_cells[row_idx]:
            if j in used_cols or degree + h > n:
                continue
            yield from grow(
                row_idx + 1,
                chosen + ((row_idx + 1, j),),
                used_cols | {j},
                degree + h,
            )

    yield from grow(0, (), frozenset(), 0)


def vandermonde_coefficient(lam: Partition, m: TransversalMonomial) -> Fraction:
    """The exact coefficient of the transversal monomial ``m`` (see module doc)."""
    n = weight(lam)
    exponents = list(beta_set(lam, n))
    for i, j in m.cells:
        if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
            raise CellOutOfDiagram((lam, (i, j)))
        exponents[i - 1] -= hook_length(lam, (i, j))
    product = 1
    for a in range(n):
        for b in range(a + 1, n):
            product *= exponents[a] - exponents[b]
    return Fraction(product)


def _generators_for(lam: Partition) -> tuple[tuple[GenSym, int], ...]:
    return tuple(
        (GenSym(i, hook_length(lam, (i, j))), hook_length(lam, (i, j)))
        for i, j in cells(lam)
    )


def direct_presentation(lam: Partition) -> GradedPresentation:
    """The combinatorial presentation of A(lam)+ (relations r_1 ... r_n)."""
    n = weight(lam)
    orientation_sign = -1 if (n * (n - 1) // 2) % 2 else 1
    by_degree: dict[int, MPoly] = {s: {} for s in range(1, n + 1)}
    for m in transversal_monomials(lam):
        if m.degree == 0:
            continue
        coeff = orientation_sign * vandermonde_coefficient(lam, m)
        if not coeff:
            continue
        factors = {GenSym(i, hook_length(lam, (i, j))): 1 for i, j in m.cells}
        by_degree[m.degree] = add(by_degree[m.degree], monomial(0, factors, coeff))
    relations = tuple(by_degree[s] for s in range(1, n + 1))
    meta = PresentationMeta(source=lam, ell=1, orientation=1)
    return GradedPresentation(_generators_for(lam), relations, meta)


def wreath_presentation(q: MultiPartition, ell: int) -> GradedPresentation:
    """Presentation of A(q)+ for the wreath product, via the quotient label."""
    if ell < 1:
        raise EllOutOfRange(ell)
    if len(q) != ell:
        raise LengthMismatch((q, ell))
    lam = from_quotient(q, ell)
    base = direct_presentation(lam)
    kept = tuple(gd for gd in base.generators if gd[0].degree % ell == 0)
    kept_symbols = {g for g, _ in kept}

    def strip(p: MPoly) -> MPoly:
        return {
            mono: c
            for mono, c in p.items()
            if all(s in kept_symbols for s, _ in mono[1])
        }

    relations = tuple(
        strip(base.relations[s - 1])
        for s in range(ell, weight(lam) + 1, ell)
    )
    meta = PresentationMeta(source=q, ell=ell, orientation=1)
    return GradedPresentation(kept, relations, meta)


# ---------------------------------------------------------------------------
# simplification


def _linear_monomial(g: GenSym) -> Monomial:
    return (0, ((g, 1),))


def _eliminable(relation: MPoly) -> list[GenSym]:
    out = []
    for (ue, gens), _ in relation.items():
        if ue or len(gens) != 1 or gens[0][1] != 1:
            continue
        g = gens[0][0]
        alone = all(
            g not in (s for s, _ in other[1])
            for other in relation
            if other != (ue, gens)
        )
        if alone:
            out.append(g)
    return out


def _substitute(p: MPoly, g: GenSym, value: MPoly) -> MPoly:
    out: MPoly = {}
    for (ue, gens), c in p.items():
        exponent = dict(gens).get(g, 0)
        if not exponent:
            out = add(out, {(ue, gens): c})
            continue
        rest = tuple((s, e) for s, e in gens if s != g)
        term: MPoly = {(ue, rest): c}
        for _ in range(exponent):
            term = mul(term, value)
        out = add(out, term)
    return out


def _monic(p: MPoly) -> MPoly:
    leading = min(p, key=term_sort_key)
    return scale(p, 1 / p[leading])


def simplify(presentation: GradedPresentation) -> GradedPresentation:
    """Eliminate generators that occur linearly; loop to a fixed point.

    Scan relations in increasing degree; in the first relation offering a
    generator that appears with a scalar coefficient and in no other monomial
    of that relation, eliminate the lexicographically largest such
    ``(row, hook)``, substitute everywhere, drop the generator and the spent
    relation, restart.  Output relations are normalized monic; identically
    zero relations are dropped.
    """
    generators = list(presentation.generators)
    relations = [r for r in presentation.relations if r]
    relations.sort(key=lambda r: weighted_degree(r))
    while True:
        victim = None
        for idx, rel in enumerate(relations):
            candidates = _eliminable(rel)
            if candidates:
                victim = (idx, max(candidates))
                break
        if victim is None:
            break
        idx, g = victim
        rel = relations.pop(idx)
        coeff = rel[_linear_monomial(g)]
        rest = dict(rel)
        del rest[_linear_monomial(g)]
        value = scale(rest, Fraction(-1) / coeff)
        generators = [gd for gd in generators if gd[0] != g]
        relations = [q for q in (_substitute(p, g, value) for p in relations) if q]
    meta = replace(presentation.meta, simplified=True)
    return GradedPresentation(
        tuple(generators), tuple(_monic(r) for r in relations), meta
    )


def negate_grading(presentation: GradedPresentation) -> GradedPresentation:
    """Flip every generator degree and the orientation flag."""
    flipped = tuple((g, -d) for g, d in presentation.generators)
    meta = replace(presentation.meta, orientation=-presentation.meta.orientation)
    return GradedPresentation(flipped, presentation.relations, meta)


# ---------------------------------------------------------------------------
# serialization shared with the CLI


def quotient_ring_text(presentation: GradedPresentation) -> str:
    """One-line quotient-ring form, e.g. ``C[f1,1] / (f1,1^5)``."""
    prefix = presentation.meta.prefix
    names = ", ".join(
        f"{prefix}{g.row},{g.degree}" for g, _ in presentation.generators
    )
    rels = ", ".join(format_poly(r, prefix) for r in presentation.relations if r)
    if not names:
        return "C"
    if not rels:
        return f"C[{names}]"
    return f"C[{names}] / ({rels})"


def presentation_document(presentation: GradedPresentation) -> dict:
    """JSON-ready document: generators, relations, metadata."""
    prefix = presentation.meta.prefix
    generators = [
        {
            "name": f"{prefix}{g.row},{g.degree}",
            "row": g.row,
            "hook": g.degree,
            "degree": d,
        }
        for g, d in presentation.generators
    ]
    relations = []
    for rel in presentation.relations:
        terms = []
        for mono in sorted(rel, key=term_sort_key):
            names: list[str] = []
            for s, e in mono[1]:
                names.extend([f"{prefix}{s.row},{s.degree}"] * e)
            terms.append({"coefficient": str(rel[mono]), "monomial": names})
        relations.append(terms)
    label = presentation.meta.source
    if label and isinstance(label[0], tuple):
        label_doc = [list(component) for component in label]
    else:
        label_doc = list(label)
    return {
        "generators": generators,
        "relations": relations,
        "metadata": {
            "partition": label_doc,
            "ell": presentation.meta.ell,
            "orientation": presentation.meta.orientation,
            "simplified": presentation.meta.simplified,
        },
    }
