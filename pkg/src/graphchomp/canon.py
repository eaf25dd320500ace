"""Isomorphism-invariant canonical keys for small complexes.

Iterated partition refinement over vertex colors, followed by
individualization backtracking that picks the lexicographically minimal
relabeled face list.  Cells whose members are pairwise interchangeable
(every transposition inside the cell is an automorphism) branch on a single
representative, which keeps cliques and co-cliques cheap.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .complexes import (
    SimplicialComplex,
    components,
    face_size,
    mask_of,
    vertices_of,
)

DEFAULT_CANON_BOUND = 16


class CanonicalizationBoundError(RuntimeError):
    """Raised when a complex is too large for exact canonicalization."""


@dataclass(frozen=True)
class CanonicalKey:
    digest: bytes
    faces: tuple[int, ...]
    exact: bool = True


def _encode(faces: tuple[int, ...], exact: bool) -> bytes:
    tag = b"canon:" if exact else b"label:"
    body = ",".join(format(f, "x") for f in faces).encode()
    return hashlib.sha256(tag + body).digest()


def labeled_key(c: SimplicialComplex) -> CanonicalKey:
    """Relabel-sensitive fallback key (sound for memoization, less sharing)."""
    faces = tuple(sorted(c.faces))
    return CanonicalKey(_encode(faces, exact=False), faces, exact=False)


_colors_cache: dict[frozenset[int], dict[int, int]] = {}


def refinement_colors(c: SimplicialComplex) -> dict[int, int]:
    """Stable vertex coloring; automorphisms preserve color classes."""
    cached = _colors_cache.get(c.faces)
    if cached is not None:
        return cached
    verts = list(c.vertices())
    members = {f: vertices_of(f) for f in c.faces}
    incident = {v: [f for f in c.faces if f >> v & 1] for v in verts}
    colors = _refine(verts, members, incident, {v: 0 for v in verts})
    if len(_colors_cache) >= _KEY_CACHE_MAX:
        _colors_cache.clear()
    _colors_cache[c.faces] = colors
    return colors


def _refine(verts, members, incident, colors):
    n_colors = len(set(colors.values()))
    while True:
        fkeys = {
            f: (len(mem), *sorted(colors[u] for u in mem))
            for f, mem in members.items()
        }
        sigs = {
            v: (colors[v], *sorted(fkeys[f] for f in incident[v]))
            for v in verts
        }
        ranking = {s: i for i, s in enumerate(sorted(set(sigs.values())))}
        colors = {v: ranking[sigs[v]] for v in verts}
        if len(ranking) == n_colors:
            return colors
        n_colors = len(ranking)


def canonical_order(c: SimplicialComplex) -> list[int]:
    """Vertex ordering realizing the canonical (minimal) face list."""
    verts = sorted(c.vertices())
    n = len(verts)
    dense = verts == list(range(n))
    if dense:
        faces = sorted(c.faces)
    else:
        vidx = {v: i for i, v in enumerate(verts)}
        faces = sorted(
            mask_of(vidx[u] for u in vertices_of(f)) for f in c.faces
        )
    faces_set = frozenset(faces)
    fmembers = [vertices_of(f) for f in faces]
    fincident: list[list[int]] = [[] for _ in range(n)]
    for fi, mem in enumerate(fmembers):
        for u in mem:
            fincident[u].append(fi)

    best: list = [None, None]

    is_graph = all(len(mem) <= 2 for mem in fmembers)
    if is_graph:
        # for graphs the face-keyed signature reduces to the multiset of
        # neighbor colors, which is much cheaper to build
        nbrs: list[list[int]] = [[] for _ in range(n)]
        present = [False] * n
        for mem in fmembers:
            if len(mem) == 1:
                present[mem[0]] = True
            else:
                a, b = mem
                nbrs[a].append(b)
                nbrs[b].append(a)

        def refine(colors: list[int]) -> list[int]:
            n_colors = len(set(colors))
            while True:
                sigs = [
                    (colors[v], present[v], *sorted(colors[u] for u in nbrs[v]))
                    for v in range(n)
                ]
                ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
                colors = [ranking[s] for s in sigs]
                if len(ranking) == n_colors:
                    return colors
                n_colors = len(ranking)
    else:
        def refine(colors: list[int]) -> list[int]:
            n_colors = len(set(colors))
            while True:
                fkeys = [
                    (len(mem), *sorted(colors[u] for u in mem))
                    for mem in fmembers
                ]
                frank = {k: i for i, k in enumerate(sorted(set(fkeys)))}
                fk = [frank[k] for k in fkeys]
                sigs = [
                    (colors[v], *sorted(fk[fi] for fi in fincident[v]))
                    for v in range(n)
                ]
                ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
                colors = [ranking[s] for s in sigs]
                if len(ranking) == n_colors:
                    return colors
                n_colors = len(ranking)

    def encode(order):
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        out = []
        for mem in fmembers:
            m = 0
            for u in mem:
                m |= 1 << pos[u]
            out.append(m)
        out.sort()
        return tuple(out)

    def interchangeable(cell) -> bool:
        for i, u in enumerate(cell):
            bu = 1 << u
            for w in cell[i + 1:]:
                bw = 1 << w
                for f in faces:
                    if bool(f & bu) != bool(f & bw):
                        if f ^ bu ^ bw not in faces_set:
                            return False
        return True

    def descend(colors: list[int]):
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for col in sorted(cells):
            if len(cells[col]) > 1:
                target = cells[col]
                break
        if target is None:
            order = sorted(range(n), key=colors.__getitem__)
            enc = encode(order)
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, order
            return
        choices = target[:1] if interchangeable(target) else target
        for v in choices:
            branched = [(colors[u], 0 if u == v else 1) for u in range(n)]
            ranking = {s: i for i, s in enumerate(sorted(set(branched)))}
            descend(refine([ranking[s] for s in branched]))

    descend(refine([0] * n))
    order = best[1]
    return order if dense else [verts[v] for v in order]


_key_cache: dict[frozenset[int], CanonicalKey] = {}
_KEY_CACHE_MAX = 400_000


def canonical_key(c: SimplicialComplex, bound: int = DEFAULT_CANON_BOUND) -> CanonicalKey:
    """Canonical key; equal exactly for isomorphic complexes.

    Raises CanonicalizationBoundError above `bound` vertices; callers may
    fall back to labeled_key.
    """
    if not c.faces:
        return CanonicalKey(_encode((), exact=True), ())
    cached = _key_cache.get(c.faces)
    if cached is not None:
        return cached
    verts = sorted(c.vertices())
    if len(verts) > bound:
        raise CanonicalizationBoundError(
            f"{len(verts)} vertices exceeds canonicalization bound {bound}"
        )
    if verts[-1] != len(verts) - 1:
        # normalize away label gaps first so all shifted relabelings of the
        # same position share one cache entry and one canonical search
        vidx = {v: i for i, v in enumerate(verts)}
        dense = SimplicialComplex(
            len(verts),
            frozenset(
                mask_of(vidx[u] for u in vertices_of(f)) for f in c.faces
            ),
        )
        key = canonical_key(dense, bound)
        if len(_key_cache) >= _KEY_CACHE_MAX:
            _key_cache.clear()
        _key_cache[c.faces] = key
        return key
    parts = components(c)
    if len(parts) > 1:
        # canonical form of a disjoint union: the sorted multiset of the
        # components' canonical forms, re-offset into one ground set
        part_faces = sorted(
            canonical_key(p, bound).faces for p in parts
        )
        combined = []
        offset = 0
        for faces in part_faces:
            combined.extend(f << offset for f in faces)
            offset += max(f.bit_length() for f in faces)
        combined.sort(key=lambda m: (face_size(m), m))
        key = CanonicalKey(_encode(tuple(combined), exact=True), tuple(combined))
        if len(_key_cache) >= _KEY_CACHE_MAX:
            _key_cache.clear()
        _key_cache[c.faces] = key
        return key
    order = canonical_order(c)
    pos = {v: i for i, v in enumerate(order)}
    canon_faces = []
    for f in c.faces:
        m = 0
        for u in vertices_of(f):
            m |= 1 << pos[u]
        canon_faces.append(m)
    canon_faces.sort(key=lambda m: (face_size(m), m))
    key = CanonicalKey(_encode(tuple(canon_faces), exact=True), tuple(canon_faces))
    if len(_key_cache) >= _KEY_CACHE_MAX:
        _key_cache.clear()
    _key_cache[c.faces] = key
    return key


def position_key(c: SimplicialComplex, bound: int = DEFAULT_CANON_BOUND) -> CanonicalKey:
    """Canonical key when within bound, else the labeled fallback."""
    try:
        return canonical_key(c, bound)
    except CanonicalizationBoundError:
        return labeled_key(c)


def isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    return canonical_key(a).faces == canonical_key(b).faces
