"""Silting objects, Hom<=0-configurations, and the mutation bijection.

A DCollection is an unordered basic object (a set of distinct stalk
indecomposables).  Predicates here are exact; enumeration searches for
n-cliques of the pairwise compatibility graph on the indecomposables of a
degree window and then filters by the full predicate (the cycle condition
H4 is not pairwise).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .derived import (
    DObj, WindowSpec, ext_dim, hom_dim,
    obj_from_dict, obj_to_dict, window_objects,
)
from .roots import RootSystemData
from .sequences import (
    ExcSeq, MutationError, is_exceptional, mu_rev, mu_rev_inverse,
)


@dataclass(frozen=True)
class DCollection:
    """A basic object: a nonempty set of distinct indecomposables."""

    summands: frozenset[DObj]

    @property
    def rs(self) -> RootSystemData:
        return next(iter(self.summands)).rs

    def sorted(self) -> tuple[DObj, ...]:
        return tuple(sorted(self.summands, key=lambda x: (x.degree, x.root)))

    def __repr__(self):
        inner = ", ".join(repr(x) for x in self.sorted())
        return f"DCollection({{{inner}}})"


def collection(objs: Iterable[DObj]) -> DCollection:
    items = frozenset(objs)
    if not items:
        raise ValueError("a collection needs at least one summand")
    systems = {x.rs for x in items}
    if len(systems) > 1:
        raise ValueError("summands over different root systems")
    return DCollection(items)


def collection_to_list(col: DCollection) -> list[dict]:
    return [obj_to_dict(x) for x in col.sorted()]


def collection_from_list(rs: RootSystemData, data: list[dict]) -> DCollection:
    return collection(obj_from_dict(rs, d) for d in data)


# ---------------------------------------------------------------------------
# Pairwise compatibility and the predicates.
# ---------------------------------------------------------------------------

def _positive_ext(a: DObj, b: DObj) -> int | None:
    """The least i >= 1 with Ext^i(a, b) nonzero, or None."""
    base = a.degree - b.degree
    for i in (base, base + 1):
        if i >= 1 and ext_dim(a, b, i):
            return i
    return None


def _silting_compatible(a: DObj, b: DObj) -> bool:
    return _positive_ext(a, b) is None and _positive_ext(b, a) is None


def _negative_ext(a: DObj, b: DObj) -> int | None:
    """The least i <= -1 with Ext^i(a, b) nonzero, or None."""
    base = a.degree - b.degree
    for i in (base, base + 1):
        if i <= -1 and ext_dim(a, b, i):
            return i
    return None


def _config_compatible(a: DObj, b: DObj) -> bool:
    if a == b:
        return _negative_ext(a, a) is None
    return (hom_dim(a, b) == 0 and hom_dim(b, a) == 0
            and _negative_ext(a, b) is None and _negative_ext(b, a) is None)


def is_partial_silting(col: DCollection) -> bool:
    objs = col.sorted()
    return all(_positive_ext(a, b) is None for a in objs for b in objs)


def is_silting(col: DCollection) -> bool:
    return len(col.summands) == col.rs.n and is_partial_silting(col)


def cluster_tilting_window(m: int) -> WindowSpec:
    return WindowSpec(1, m, plus_injectives=True)


def config_window(m: int) -> WindowSpec:
    return WindowSpec(0, m)


def config_minus_window(m: int) -> WindowSpec:
    return WindowSpec(0, m, minus_projectives=True)


def shifted_silting_window(m: int) -> WindowSpec:
    return WindowSpec(1, m)


def is_m_cluster_tilting(col: DCollection, m: int) -> bool:
    """Silting and contained in degrees 1..m together with the injectives
    in degree 0."""
    if m < 1:
        raise ValueError("m must be at least 1")
    w = cluster_tilting_window(m)
    return all(w.contains(x) for x in col.summands) and is_silting(col)


def digraph_has_cycle(succ: list[list[int]]) -> bool:
    """Cycle detection on adjacency lists, iterative three-colour DFS."""
    k = len(succ)
    state = [0] * k  # 0 unvisited, 1 on stack, 2 done
    for start in range(k):
        if state[start]:
            continue
        stack = [(start, iter(succ[start]))]
        state[start] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if state[nxt] == 1:
                    return True
                if state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, iter(succ[nxt])))
                    advanced = True
                    break
            if not advanced:
                state[node] = 2
                stack.pop()
    return False


def _ext1_digraph_has_cycle(objs: tuple[DObj, ...]) -> bool:
    k = len(objs)
    return digraph_has_cycle([
        [j for j in range(k) if j != i and ext_dim(objs[i], objs[j], 1)]
        for i in range(k)
    ])


def is_hom_leq0_config(col: DCollection) -> bool:
    """The four configuration conditions: n summands; pairwise Hom vanishing;
    no negative self-extensions; acyclic Ext^1 digraph.  Exceptionality of
    the summands is automatic in Dynkin type."""
    objs = col.sorted()
    if len(objs) != col.rs.n:
        return False
    for a in objs:
        for b in objs:
            if a != b and hom_dim(a, b):
                return False
            if _negative_ext(a, b) is not None:
                return False
    return not _ext1_digraph_has_cycle(objs)


def is_m_config(col: DCollection, m: int) -> bool:
    if m < 0:
        raise ValueError("m must be non-negative")
    return (all(0 <= x.degree <= m for x in col.summands)
            and is_hom_leq0_config(col))


def explain_not_silting(col: DCollection) -> str | None:
    """A human-readable reason col is not silting, or None when it is."""
    if len(col.summands) != col.rs.n:
        return f"silting needs {col.rs.n} summands, found {len(col.summands)}"
    for a in col.sorted():
        for b in col.sorted():
            i = _positive_ext(a, b)
            if i is not None:
                return f"Ext^{i}({a!r}, {b!r}) is nonzero"
    return None


def explain_not_config(col: DCollection) -> str | None:
    objs = col.sorted()
    if len(objs) != col.rs.n:
        return f"a configuration needs {col.rs.n} summands, found {len(objs)}"
    for a in objs:
        for b in objs:
            if a != b and hom_dim(a, b):
                return f"Hom({a!r}, {b!r}) is nonzero"
            i = _negative_ext(a, b)
            if i is not None:
                return f"Ext^{i}({a!r}, {b!r}) is nonzero"
    if _ext1_digraph_has_cycle(objs):
        return "the Ext^1 digraph on the summands has a cycle"
    return None


# ---------------------------------------------------------------------------
# Exhaustive enumeration.
# ---------------------------------------------------------------------------

def _cliques_of_size(count: int, neighbours: list[set[int]], k: int) -> list[tuple[int, ...]]:
    """All k-cliques, vertices in increasing index order."""
    out: list[tuple[int, ...]] = []

    def grow(clique: list[int], cands: list[int]) -> None:
        if len(clique) == k:
            out.append(tuple(clique))
            return
        need = k - len(clique)
        for pos, v in enumerate(cands):
            if len(cands) - pos < need:
                return
            grow(clique + [v], [u for u in cands[pos + 1:] if u in neighbours[v]])

    grow([], list(range(count)))
    return out


def _enumerate(rs: RootSystemData, w: WindowSpec, compatible, predicate) -> list[DCollection]:
    objs = window_objects(rs, w)
    if any(not compatible(x, x) for x in objs):
        objs = [x for x in objs if compatible(x, x)]
    neighbours = [
        {j for j in range(len(objs)) if j != i and compatible(objs[i], objs[j])}
        for i in range(len(objs))
    ]
    found = []
    for idxs in _cliques_of_size(len(objs), neighbours, rs.n):
        col = collection(objs[i] for i in idxs)
        if predicate(col):
            found.append(col)
    found.sort(key=lambda c: tuple((x.degree, x.root) for x in c.sorted()))
    return found


def enumerate_silting(rs: RootSystemData, w: WindowSpec) -> list[DCollection]:
    return _enumerate(rs, w, _silting_compatible, is_silting)


def enumerate_configs(rs: RootSystemData, w: WindowSpec) -> list[DCollection]:
    return _enumerate(rs, w, _config_compatible, is_hom_leq0_config)


ENUMERATION_KINDS = (
    "m-cluster-tilting",
    "m-config",
    "m-config-minus",
    "silting-deg1-window",
    "silting-in-window",
)


def enumerate_kind(rs: RootSystemData, kind: str, m: int,
                   window: WindowSpec | None = None) -> list[DCollection]:
    """Dispatch enumeration by kind name; m must be at least 1."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if kind == "m-cluster-tilting":
        return enumerate_silting(rs, cluster_tilting_window(m))
    if kind == "m-config":
        return enumerate_configs(rs, config_window(m))
    if kind == "m-config-minus":
        return enumerate_configs(rs, config_minus_window(m))
    if kind == "silting-deg1-window":
        return enumerate_silting(rs, shifted_silting_window(m))
    if kind == "silting-in-window":
        if window is None:
            raise ValueError("silting-in-window needs an explicit window")
        return enumerate_silting(rs, window)
    raise ValueError(f"unknown enumeration kind {kind!r}")


# ---------------------------------------------------------------------------
# Ordering a collection into an exceptional sequence.
# ---------------------------------------------------------------------------

def _topo_sort(objs: list[DObj], has_edge) -> list[DObj]:
    """Topological order with edges pointing earlier -> later; root-index
    tie-break for determinism."""
    pending = sorted(objs, key=lambda x: x.root)
    indeg = {x: 0 for x in pending}
    for a in pending:
        for b in pending:
            if a != b and has_edge(a, b):
                indeg[b] += 1
    out = []
    while pending:
        ready = next((x for x in pending if indeg[x] == 0), None)
        if ready is None:
            raise MutationError("within-degree ordering graph has a cycle")
        pending.remove(ready)
        out.append(ready)
        for b in pending:
            if has_edge(ready, b):
                indeg[b] -= 1
    return out


def order_silting(col: DCollection) -> ExcSeq:
    """Order a silting object into an exceptional sequence: ascending degree,
    within one degree so that nonzero Homs point forward."""
    by_degree: dict[int, list[DObj]] = {}
    for x in col.summands:
        by_degree.setdefault(x.degree, []).append(x)
    seq: list[DObj] = []
    for d in sorted(by_degree):
        seq.extend(_topo_sort(by_degree[d], lambda a, b: hom_dim(a, b) != 0))
    result = tuple(seq)
    if not is_exceptional(result):
        raise MutationError("silting ordering failed to be exceptional")
    return result


def order_config(col: DCollection) -> ExcSeq:
    """Order a configuration into an exceptional sequence: descending degree,
    within one degree so that Ext^1 arrows point forward."""
    by_degree: dict[int, list[DObj]] = {}
    for x in col.summands:
        by_degree.setdefault(x.degree, []).append(x)
    seq: list[DObj] = []
    for d in sorted(by_degree, reverse=True):
        seq.extend(_topo_sort(by_degree[d], lambda a, b: ext_dim(a, b, 1) != 0))
    result = tuple(seq)
    if not is_exceptional(result):
        raise MutationError("configuration ordering failed to be exceptional")
    return result


def silting_to_config(col: DCollection) -> DCollection:
    """The bijection from silting objects to Hom<=0-configurations: order,
    apply mu_rev, forget the order.  Uses only negative or orthogonal
    mutations."""
    reason = explain_not_silting(col)
    if reason is not None:
        raise ValueError(f"not a silting object: {reason}")
    out, _signs = mu_rev(order_silting(col))
    result = collection(out)
    reason = explain_not_config(result)
    if reason is not None:
        raise MutationError(f"mu_rev of a silting object must be a configuration: {reason}")
    return result


def config_to_silting(col: DCollection) -> DCollection:
    """The inverse bijection: order the configuration, apply the inverse
    composite, forget the order.  Uses only non-negative or orthogonal
    mutations."""
    reason = explain_not_config(col)
    if reason is not None:
        raise ValueError(f"not a configuration: {reason}")
    out, _signs = mu_rev_inverse(order_config(col))
    result = collection(out)
    reason = explain_not_silting(result)
    if reason is not None:
        raise MutationError(f"inverse mu_rev of a configuration must be silting: {reason}")
    return result
