"""Bias degrees, exact overlaps, Z-balance tests, balanced catalogs.

Every graph-state overlap is of the form sign * 2^(-m/2) or exactly zero,
so all results are carried symbolically by DyadicReal and compared with
exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, canonical_form, graph_symmetric_difference
from .stab import induced_edge_count, stabilizer_parity
from .xchains import factorize, global_sign


@dataclass(frozen=True)
class DyadicReal:
    """sign * 2^(-half_log/2), with sign in {-1, 0, +1}; zero has half_log 0."""

    sign: int
    half_log: int

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if self.half_log < 0:
            raise ValueError("half_log must be nonnegative")
        if self.sign == 0 and self.half_log != 0:
            raise ValueError("zero must be canonical (half_log 0)")

    @classmethod
    def zero(cls) -> "DyadicReal":
        return cls(0, 0)

    def approx(self) -> float:
        return self.sign * 2.0 ** (-self.half_log / 2)

    def __str__(self):
        if self.sign == 0:
            return "0"
        return f"{'+' if self.sign > 0 else '-'}2^-{self.half_log}/2"


def bias_degree(g: Graph) -> DyadicReal:
    """Overlap of the graph state with the all-plus product state.

    Zero iff some X-chain generator has negative parity; otherwise the
    magnitude is 2^(-(n - dim Gamma)/2) and the sign is the global sign
    of the X-basis expansion.
    """
    xd = factorize(g, with_alpha=False)
    if xd.x_gamma:
        return DyadicReal.zero()
    return DyadicReal(global_sign(g, xd), g.n - xd.gamma.dim)


def overlap(g: Graph, h: Graph) -> DyadicReal:
    """Exact inner product of two graph states on the same vertex set."""
    if g.n != h.n:
        raise ValueError("graphs have different vertex counts")
    return bias_degree(graph_symmetric_difference(g, h))


def is_balanced(g: Graph) -> bool:
    """True iff the graph state has zero bias degree.

    Equivalent to some X-chain generator having an odd induced edge count;
    since parity is multiplicative on the X-chain group, checking the
    canonical generators suffices.
    """
    return factorize(g, with_alpha=False).x_gamma != 0


def negative_weight(g: Graph) -> int:
    """Number of negative Z-basis amplitudes: 2^(n-1) * (1 - bias)."""
    beta = bias_degree(g)
    if beta.sign == 0:
        return 1 << (g.n - 1)
    if beta.half_log % 2 != 0:
        raise AssertionError("bias exponent must be even for a graph state")
    shift = g.n - 1 - beta.half_log // 2
    if shift < 0:
        raise AssertionError("bias magnitude exceeds the amplitude budget")
    return (1 << (g.n - 1)) - beta.sign * (1 << shift)


@dataclass(frozen=True)
class BalancedClass:
    """One isomorphism class of balanced graphs with its odd-edge witness."""

    graph: Graph
    witness: int
    witness_edge_count: int


def enumerate_balanced(n: int) -> list[BalancedClass]:
    """All isomorphism classes of balanced graphs on n vertices.

    Exhausts all 2^C(n,2) labeled graphs and deduplicates via the
    brute-force canonical form, so n is capped at 5.  Each class carries
    an X-chain whose induced subgraph has an odd edge count.
    """
    if n > 5:
        raise ValueError("balanced catalog enumeration is capped at n <= 5")
    slots = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    seen = {}
    for mask in range(1 << len(slots)):
        adj = [0] * n
        m = mask
        for (u, v) in slots:
            if m & 1:
                adj[u - 1] |= 1 << (v - 1)
                adj[v - 1] |= 1 << (u - 1)
            m >>= 1
        g = Graph(n, tuple(adj))
        if not is_balanced(g):
            continue
        canon, _ = canonical_form(g)
        if canon.adj in seen:
            continue
        witness = next(
            row for row in factorize(canon, with_alpha=False).gamma.rows
            if stabilizer_parity(canon, row) == -1
        )
        seen[canon.adj] = BalancedClass(canon, witness, induced_edge_count(canon, witness))
    return sorted(seen.values(), key=lambda c: (c.graph.edge_count(), c.graph.adj))


def orthogonal_partner(d: Graph, g: Graph) -> Graph:
    """Graph h with <G|H> = 0, obtained as the symmetric difference with d."""
    if not is_balanced(d):
        raise ValueError("difference graph is not balanced")
    return graph_symmetric_difference(g, d)
