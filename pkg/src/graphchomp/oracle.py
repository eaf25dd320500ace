"""Deliberately simple brute-force ground truth.

Plain mex recursion over labeled face sets: no canonicalization, no
component decomposition, no closed forms.  Refuses (never guesses) when
the node budget runs out.

Positions reachable from a fixed start are exactly the subsets of its face
list that survive some move sequence, so they are encoded as bitmaps over
the start position's (sorted) faces.  That is a speed/memory representation
choice only; the recursion itself is the bare definition of the nim-value.
"""

from __future__ import annotations

from typing import Optional

from .complexes import SimplicialComplex

DEFAULT_ORACLE_BUDGET = 3_000_000


class OracleBudgetError(RuntimeError):
    pass


def oracle_grundy(
    c: SimplicialComplex,
    budget: int = DEFAULT_ORACLE_BUDGET,
    memo: Optional[dict] = None,
) -> int:
    """Nim-value by direct definitional recursion on labeled positions.

    A shared memo may be passed in; entries are namespaced by the exact
    labeled face set of the start position, so different starts never
    collide and relabelings never hit.
    """
    faces_list = sorted(c.faces)
    full = (1 << len(faces_list)) - 1
    # survive[i] = bitmap of faces that remain after removing face i
    survive = []
    for s in faces_list:
        m = 0
        for j, f in enumerate(faces_list):
            if f & s != s:
                m |= 1 << j
        survive.append(m)

    if memo is None:
        memo = {}
    sub = memo.setdefault(c.faces, {})
    counter = [0]

    def rec(pos: int) -> int:
        cached = sub.get(pos)
        if cached is not None:
            return cached
        counter[0] += 1
        if counter[0] > budget:
            raise OracleBudgetError("oracle node budget exceeded")
        seen = set()
        p = pos
        while p:
            low = p & -p
            seen.add(rec(pos & survive[low.bit_length() - 1]))
            p ^= low
        g = 0
        while g in seen:
            g += 1
        sub[pos] = g
        return g

    return rec(full)
