"""Dynamic program along a nice path decomposition, parameterized by unanimity width.

With ``forg`` the candidates forgotten so far, ``C[T]`` (``T`` a subset of the
current bag) lists the best linear extensions of the unanimity order on
``forg + T``. Two cost tables feed it: ``A[v]``, the cost of placing all of
``forg`` before ``v``, and ``B(v, T)``, the cost of placing ``T`` before ``v``.

Introduce ``x``: subsets without ``x`` are unchanged. For ``T`` containing
``x``, the last candidate ``y`` of an extension has no unanimity successor in
``forg + T``; append ``y`` to the entries of ``C[T - y]`` at extra cost
``A[y] + B(y, T - y)``. Everything in ``forg`` precedes ``x`` unanimously, so
``A[x] = 0``.

Forget ``x``: ``C[T]`` becomes the old ``C[T + x]`` and ``A[v]`` grows by
``cost[x][v]``.
"""

from __future__ import annotations

from ..core import Scored, unanimity_order
from ..decomposition import INTRODUCE, build_decomposition, validate_decomposition
from ..parameters import non_unanimity_graph
from .modes import append, flatten_tail_last, merge_top


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _subsets_by_size(mask):
    members = list(_bits(mask))
    subs = [0]
    for c in members:
        subs += [s | 1 << c for s in subs]
    subs.sort(key=lambda s: bin(s).count("1"))
    return subs


def top_extensions_pw(profile, r: int, decomposition=None) -> list:
    """First ``r`` linear extensions of the unanimity order by (score, ranking)."""
    order = unanimity_order(profile)
    graph = non_unanimity_graph(profile)
    if decomposition is None:
        decomposition = build_decomposition(order, graph)
    elif not validate_decomposition(decomposition, order, graph):
        raise ValueError("decomposition is not a valid nice consistent path decomposition")
    cost = profile.costs
    below, above = order.below, order.above

    bag = 0
    forg = 0
    A = {}
    C = {0: [(0, ())]}
    for kind, x in decomposition.events:
        bit = 1 << x
        if kind == INTRODUCE:
            if forg & ~above[x]:
                raise ValueError(f"candidate {x} introduced after a candidate it may precede was forgotten")
            A[x] = 0
            new = dict(C)
            for base in _subsets_by_size(bag):
                T = base | bit
                scope = forg | T
                sources = []
                for y in _bits(T):
                    if below[y] & scope:
                        continue
                    rest = T ^ 1 << y
                    extra = A[y] + sum(cost[u][y] for u in _bits(rest))
                    sources.append((new[rest], extra, y))
                new[T] = merge_top(sources, r, append)
            C = new
            bag |= bit
        else:
            bag ^= bit
            forg |= bit
            del A[x]
            for v in A:
                A[v] += cost[x][v]
            C = {T: C[T | bit] for T in _subsets_by_size(bag)}
    return [Scored(flatten_tail_last(seq), s) for s, seq in C[0]]
