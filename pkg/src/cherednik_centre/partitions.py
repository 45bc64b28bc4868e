"""Integer partitions, Young diagrams, hooks and beta-sets.

Conventions used throughout the package:

* A partition is a tuple of weakly decreasing positive integers; the empty
  partition is ``()``.  Cells of the Young diagram are 1-based ``(row, col)``
  pairs, row ``i`` holding ``lam[i-1]`` cells.

* The hook length of a cell ``(i, j)`` is

      h(i, j) = (lam_i - j) + (L_j - i) + 1

  where ``L_j`` is the *full* length of column ``j`` (arm + leg + 1 with the
  leg measured down the whole column).

* The beta-set of ``lam`` padded to ``n`` parts is ``d_i = lam_i + n - i``
  for ``i = 1..n`` — strictly decreasing, pairwise distinct.  With
  ``n = len(lam)`` these are exactly the first-column hook lengths.
"""

from __future__ import annotations

from typing import Iterator

from .errors import (
    CellOutOfDiagram,
    NegativePart,
    NotWeaklyDecreasing,
    PadTooShort,
    RowOutOfRange,
    UnparsableLabel,
)

Partition = tuple[int, ...]
Cell = tuple[int, int]
BetaSet = tuple[int, ...]


def make_partition(parts) -> Partition:
    """Validate and canonicalize: trailing zeros are stripped.

    >>> make_partition([3, 2, 0])
    (3, 2)
    >>> make_partition([2, 3])
    Traceback (most recent call last):
        ...
    cherednik_centre.errors.NotWeaklyDecreasing: (2, 3)
    """
    seq = tuple(int(p) for p in parts)
    if any(p < 0 for p in seq):
        raise NegativePart(seq)
    if any(seq[k] < seq[k + 1] for k in range(len(seq) - 1)):
        raise NotWeaklyDecreasing(seq)
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def weight(lam: Partition) -> int:
    return sum(lam)


def transpose(lam: Partition) -> Partition:
    """Conjugate partition (columns become rows).

    >>> transpose((3, 2))
    (2, 2, 1)
    """
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def cells(lam: Partition) -> Iterator[Cell]:
    """All cells of the diagram in row-major order, 1-based."""
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            yield (i, j)


def hook_length(lam: Partition, cell: Cell) -> int:
    """Hook length of ``cell``, with the leg running down the full column.

    >>> hook_length((3, 2), (1, 1))
    4
    >>> hook_length((3, 2), (1, 3))
    1
    """
    i, j = cell
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise CellOutOfDiagram((lam, cell))
    col_len = sum(1 for p in lam if p >= j)
    return (lam[i - 1] - j) + (col_len - i) + 1


def first_column_hooks(lam: Partition) -> BetaSet:
    """First-column hook lengths ``h(i, 1) = lam_i + len(lam) - i``.

    These are the bead positions of the abacus encoding of ``lam``.
    """
    n = len(lam)
    return tuple(p + n - i for i, p in enumerate(lam, start=1))


def beta_set(lam: Partition, n: int) -> BetaSet:
    """Beta-set padded to ``n`` parts: ``(lam_i + n - i) for i = 1..n``.

    >>> beta_set((3, 2), 5)
    (7, 5, 2, 1, 0)
    """
    if n < len(lam):
        raise PadTooShort((lam, n))
    padded = lam + (0,) * (n - len(lam))
    return tuple(p + n - i for i, p in enumerate(padded, start=1))


def row_hook_set(lam: Partition, i: int) -> frozenset[int]:
    """Hook lengths occurring in row ``i``, read off the beta-set.

    With ``P = beta_set(lam, n)`` for ``n = weight(lam)`` and ``d_i`` its
    ``i``-th entry, the set is ``{j : 1 <= j <= d_i, d_i - j not in P}`` —
    equal to ``{hook_length(lam, (i, j)) : 1 <= j <= lam_i}`` and empty for
    rows below the diagram.  The set does not depend on the padding length.

    >>> sorted(row_hook_set((3, 2), 1))
    [1, 3, 4]
    """
    n = weight(lam)
    if not 1 <= i <= n:
        raise RowOutOfRange((lam, i))
    beta = beta_set(lam, n)
    occupied = set(beta)
    d_i = beta[i - 1]
    return frozenset(j for j in range(1, d_i + 1) if d_i - j not in occupied)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> list(partitions_of(4))[:3]
    [(4,), (3, 1), (2, 2)]
    """

    def gen(rest: int, largest: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if rest == 0:
            yield prefix
            return
        for part in range(min(rest, largest), 0, -1):
            yield from gen(rest - part, part, prefix + (part,))

    yield from gen(n, n if n > 0 else 1, ())


def format_partition(lam: Partition) -> str:
    """Text form: comma-separated parts, ``-`` for the empty partition."""
    return ",".join(str(p) for p in lam) if lam else "-"


def parse_partition(text: str) -> Partition:
    """Inverse of :func:`format_partition` (whitespace tolerated)."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = [int(piece) for piece in text.split(",")]
    except ValueError:
        raise UnparsableLabel(text) from None
    return make_partition(parts)
