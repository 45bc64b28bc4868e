#!/usr/bin/env python3
"""Tabulate wreath block dimensions against the component hook dimensions.

The symmetric-group blocks have dimension (n!/prod hooks)^2.  For wreath
blocks no closed formula is implemented; the rank oracle is the definition.
This script prints the oracle dimension next to the product of the
components' hook dimensions so the empirical relationship between the two
can be inspected — the package asserts nothing about it.
"""

from __future__ import annotations

import argparse

from cherednik_centre import (
    dimension_hook_formula,
    format_multipartition,
    graded_dimensions_from_presentation,
    multipartitions_of,
    wreath_presentation,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--budget", type=int, default=8, help="largest n*ell to survey"
    )
    args = parser.parse_args()

    print(f"{'ell':>3} {'label':<16} {'oracle':>7} {'hook-product':>13} agree")
    for ell in range(2, args.budget + 1):
        for n in range(1, args.budget // ell + 1):
            for q in multipartitions_of(n, ell):
                series = graded_dimensions_from_presentation(
                    wreath_presentation(q, ell)
                )
                dim = series.dimension()
                product = 1
                for component in q:
                    product *= dimension_hook_formula(component)
                print(
                    f"{ell:>3} {format_multipartition(q):<16} {dim:>7} "
                    f"{product:>13} {'yes' if dim == product else 'NO'}"
                )


if __name__ == "__main__":
    main()
