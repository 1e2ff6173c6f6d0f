"""Exact sparse linear algebra over the rationals.

Rows are dicts mapping a comparable basis label to a Fraction; elimination
pivots on the least label, so ranks are reproducible run to run.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Iterable


def rank_of_rows(rows: Iterable[Dict[Hashable, Fraction]]) -> int:
    """Rank over Q of the span of ``rows``.  Exact Gaussian elimination."""
    pivots: dict = {}
    rank = 0
    for row in rows:
        work = {k: Fraction(v) for k, v in row.items() if v}
        while work:
            key = min(work)
            piv = pivots.get(key)
            if piv is None:
                lead = work[key]
                pivots[key] = {k: v / lead for k, v in work.items()}
                rank += 1
                break
            factor = work[key]
            for k, v in piv.items():
                nv = work.get(k, Fraction(0)) - factor * v
                if nv:
                    work[k] = nv
                else:
                    work.pop(k, None)
    return rank
