"""Exact cyclic and odd-cyclic edge connectivity with cut certificates.

A minimum cyclic edge cut always separates two vertex-disjoint chordless
cycles (a shortest cycle inside either side has no chord), so the exact
value is the minimum, over vertex-disjoint chordless cycle pairs, of the
minimum edge cut between the two contracted cycles.  For the odd variant
the first cycle of the pair ranges over odd chordless cycles only.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._flow import min_edge_cut
from .budget import DEFAULT_BUDGET, SearchBudget
from .graphs import (
    INF,
    Edge,
    Graph,
    boundary_edges,
    chordless_cycles,
    connected_components,
    cycle_edges,
    has_cycle_within,
    vertex_cycle,
)
from .matching import Check


class InexactSearchError(RuntimeError):
    """A capped search could not certify an exact value.

    ``upper_bound`` is the best cut size found before the cap hit (INF when
    none was found).
    """

    def __init__(self, message: str, upper_bound: float):
        super().__init__(f"{message}; best upper bound found: {upper_bound}")
        self.upper_bound = upper_bound


@dataclass(frozen=True)
class CutCertificate:
    """An edge cut together with the two-side partition and cycle witnesses.

    ``F`` equals E(side_a, side_b); each side contains its witness cycle, so
    removing F leaves at least two components with a cycle.  ``odd_flag``
    records that ``cycle_a`` has odd length.
    """

    F: frozenset[Edge]
    side_a: frozenset[int]
    side_b: frozenset[int]
    cycle_a: tuple[int, ...]
    cycle_b: tuple[int, ...]
    odd_flag: bool

    def to_json_dict(self, value: float | None = None) -> dict:
        out = {
            "F": [list(e) for e in sorted(self.F)],
            "side_a": sorted(self.side_a),
            "cycle_a": list(self.cycle_a),
            "cycle_b": list(self.cycle_b),
            "odd": self.odd_flag,
        }
        if value is not None:
            out["value"] = "inf" if value == INF else int(value)
        return out


@dataclass(frozen=True)
class ConnectivityValue:
    value: float  # int or INF
    certificate: CutCertificate | None = None

    @property
    def finite(self) -> bool:
        return self.value != INF

    def to_json_dict(self) -> dict:
        if self.certificate is None:
            return {"value": "inf" if self.value == INF else int(self.value)}
        return self.certificate.to_json_dict(value=self.value)


def min_cut_between(
    g: Graph, X, Y, cutoff: float | None = None
) -> tuple[int, frozenset[Edge], frozenset[int]]:
    """Minimum edge cut separating vertex sets X and Y (Menger).

    Returns (size, cut edges, source-side vertices); size 0 with an empty
    cut when the sets lie in different components.
    """
    return min_edge_cut(g, frozenset(X), frozenset(Y), cutoff=cutoff)


def cyclic_edge_connectivity(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> ConnectivityValue:
    """Exact cyclic edge connectivity with a minimum-cut certificate."""
    return _lambda_search(g, budget, odd=False)


def odd_cyclic_edge_connectivity(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> ConnectivityValue:
    """Exact odd-cyclic edge connectivity (one side must hold an odd cycle)."""
    return _lambda_search(g, budget, odd=True)


def _lambda_search(g: Graph, budget: SearchBudget, odd: bool) -> ConnectivityValue:
    found = chordless_cycles(
        g, max_len=budget.max_cycle_len, cap=budget.max_cycles, step_cap=budget.max_cycle_steps
    )
    cycles = found.cycles
    if found.truncated:
        # exactness is already lost; refine the upper bound on a short prefix
        cycles = cycles[:300]
    sets = [frozenset(c) for c in cycles]
    is_odd = [len(c) % 2 == 1 for c in cycles]

    best: float = INF
    best_cert: CutCertificate | None = None

    # seed with single-cycle boundaries: E(V(C), rest) is itself a valid cut
    # whenever the complement still contains a cycle
    for i, cyc in enumerate(cycles):
        if odd and not is_odd[i]:
            continue
        rest = frozenset(range(g.n)) - sets[i]
        bd = boundary_edges(g, sets[i])
        if len(bd) >= best:
            continue
        if not has_cycle_within(g, rest):
            continue
        witness = _any_cycle_within(g, rest)
        best = len(bd)
        best_cert = CutCertificate(
            F=bd,
            side_a=sets[i],
            side_b=rest,
            cycle_a=cyc,
            cycle_b=witness,
            odd_flag=is_odd[i],
        )

    pair_count = 0
    capped = False
    for i in range(len(cycles)):
        if odd and not is_odd[i]:
            continue
        for j in range(len(cycles)):
            if j == i or (not odd and j < i):
                continue
            if odd and is_odd[j] and j < i:
                continue  # both odd: the pair was already tried as (j, i)
            pair_count += 1
            if pair_count > budget.max_cut_pairs:
                capped = True
                break
            if sets[i] & sets[j]:
                continue
            value, cut, side = min_cut_between(g, sets[i], sets[j], cutoff=best)
            if value < best:
                best = value
                best_cert = CutCertificate(
                    F=cut,
                    side_a=side,
                    side_b=frozenset(range(g.n)) - side,
                    cycle_a=cycles[i],
                    cycle_b=cycles[j],
                    odd_flag=is_odd[i],
                )
        if capped:
            break

    kind = "odd-cyclic" if odd else "cyclic"
    if found.truncated:
        raise InexactSearchError(f"{kind} cut search: chordless-cycle cap exceeded", best)
    if capped:
        raise InexactSearchError(f"{kind} cut search: cycle-pair cap exceeded", best)
    if best == INF:
        return ConnectivityValue(INF)
    return ConnectivityValue(best, best_cert)


def _any_cycle_within(g: Graph, vertices: frozenset[int]) -> tuple[int, ...]:
    """Some cycle inside the induced subgraph (caller guarantees one exists)."""
    from .graphs import induced_subgraph, shortest_cycle

    sub, back = induced_subgraph(g, vertices)
    cyc = shortest_cycle(sub)
    if cyc is None:
        raise ValueError("no cycle inside the given vertex set")
    return tuple(back[v] for v in cyc)


def verify_cut(g: Graph, cert: CutCertificate, require_odd: bool) -> Check:
    """Check every certificate invariant; Check(False, reason) on mismatch."""
    if cert.side_a & cert.side_b:
        return Check(False, "sides overlap")
    if cert.side_a | cert.side_b != frozenset(range(g.n)):
        return Check(False, "sides do not partition the vertex set")
    expected = frozenset(
        e for e in g.edges() if (e[0] in cert.side_a) != (e[1] in cert.side_a)
    )
    if cert.F != expected:
        return Check(False, "F is not E(side_a, side_b)")
    if not vertex_cycle(g, cert.cycle_a):
        return Check(False, "cycle_a is not a cycle of the graph")
    if not vertex_cycle(g, cert.cycle_b):
        return Check(False, "cycle_b is not a cycle of the graph")
    if not set(cert.cycle_a) <= cert.side_a:
        return Check(False, "cycle_a leaves side_a")
    if not set(cert.cycle_b) <= cert.side_b:
        return Check(False, "cycle_b leaves side_b")
    if cycle_edges(cert.cycle_a) & cert.F or cycle_edges(cert.cycle_b) & cert.F:
        return Check(False, "a witness cycle crosses the cut")
    if cert.odd_flag != (len(cert.cycle_a) % 2 == 1):
        return Check(False, "odd flag disagrees with cycle_a parity")
    if require_odd and not cert.odd_flag:
        return Check(False, "odd witness required but cycle_a is even")
    return Check(True)


def components_after_removal(g: Graph, cut: frozenset[Edge]) -> list[frozenset[int]]:
    """Components of G - F (helper for audits and tests)."""
    remaining = [e for e in g.edges() if e not in cut]
    stripped = Graph(g.n, remaining)
    return connected_components(stripped)
