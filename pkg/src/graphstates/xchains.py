"""X-chain groups, factorization data, and X-basis representations.

An X-chain is a vertex set whose induced stabilizer contains only X
factors; the X-chains of a graph are exactly the GF(2) kernel of its
adjacency matrix.  Factorizing the subset group by the X-chain group
yields an exact signed expansion of the graph state over 2^|K| X-basis
strings, where K is the set of free (non-pivot) vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import gf2
from .gf2 import Basis
from .graphs import Graph
from .stab import correlation_index, stabilizer_parity

ALPHA_SUM_LIMIT = 20  # largest dim K for which the 2^|K| sign sum is computed


@dataclass(frozen=True)
class XChainData:
    """Canonical factorization of the subset group by the X-chain group.

    gamma      -- canonical basis of the X-chain group
    exclusive  -- one vertex per generator (its pivot), owned by no other
    kappa      -- the remaining vertices; their singletons generate the
                  correlation-group representatives
    x_gamma    -- fundamental X-basis string: pivots of the negative-parity
                  generators
    alpha      -- global sign, the sign of the sum of parities over the
                  span of kappa singletons; None when that sum is deferred
    """

    gamma: Basis
    exclusive: tuple[int, ...]
    kappa: tuple[int, ...]
    x_gamma: int
    alpha: int | None


@dataclass
class XBasisExpansion:
    """Exact signed dyadic expansion in the X-basis.

    state = 2^(-half_log_norm/2) * sum over terms of sign * |mask>,
    qubits listing the 1-indexed vertices that the mask bits address.
    """

    qubits: tuple[int, ...]
    half_log_norm: int
    terms: dict[int, int] = field(default_factory=dict)

    def term_signs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.terms.items()))

    def __str__(self):
        m = self.half_log_norm
        if m == 0:
            coeff = ""
        elif m % 2 == 0:
            coeff = f"1/{1 << (m // 2)}"
        elif m == 1:
            coeff = "1/sqrt(2)"
        else:
            coeff = f"1/({1 << (m // 2)}*sqrt(2))"
        bits = []
        for mask, sign in sorted(self.terms.items()):
            ket = gf2.mask_to_string(mask, len(self.qubits))
            if not bits:
                bits.append(("-" if sign < 0 else "") + f"|{ket}>")
            else:
                bits.append(("- " if sign < 0 else "+ ") + f"|{ket}>")
        return f"{coeff}({' '.join(bits)})" if coeff else " ".join(bits)


def xchain_group(g: Graph) -> Basis:
    """Canonical basis of the X-chain group: the kernel of the adjacency."""
    return gf2.kernel(g.adj, g.n)


def is_xchain(g: Graph, xi: int) -> bool:
    """True iff every vertex has an even number of neighbors inside xi."""
    return correlation_index(g, xi) == 0


def factorize(g: Graph, with_alpha: bool = True) -> XChainData:
    """Extract the canonical X-chain factorization of a graph.

    The kernel basis is in reduced echelon form, so each generator's pivot
    vertex occurs in no other generator and serves as its exclusive
    representative.  The fundamental string collects the pivots of the
    generators with an odd induced edge count.
    """
    gamma = xchain_group(g)
    exclusive = tuple(p + 1 for p in gamma.pivots)
    pivot_set = set(gamma.pivots)
    kappa = tuple(v + 1 for v in range(g.n) if v not in pivot_set)
    x_gamma = 0
    for p, row in zip(gamma.pivots, gamma.rows):
        if stabilizer_parity(g, row) == -1:
            x_gamma |= 1 << p
    xd = XChainData(gamma, exclusive, kappa, x_gamma, None)
    if with_alpha and len(kappa) <= ALPHA_SUM_LIMIT:
        xd = XChainData(gamma, exclusive, kappa, x_gamma, global_sign(g, xd))
    return xd


def global_sign(g: Graph, xd: XChainData) -> int:
    """Sign of the sum of parities over the span of the free singletons."""
    if len(xd.kappa) > ALPHA_SUM_LIMIT:
        raise ValueError(
            f"global sign needs a 2^{len(xd.kappa)} parity sum; "
            f"capped at 2^{ALPHA_SUM_LIMIT}"
        )
    return _parity_sum_sign(g, [1 << (v - 1) for v in xd.kappa])


def _parity_sum_sign(g: Graph, rows: list[int]) -> int:
    """Sign of the sum of stabilizer parities over the span of rows.

    Walks the span in Gray order, updating the parity with the cut-parity
    product rule instead of recounting edges.
    """
    row_parity = [stabilizer_parity(g, r) for r in rows]
    row_corr = [correlation_index(g, r) for r in rows]
    cur = 0
    parity = 1
    total = 1
    for t in range(1, 1 << len(rows)):
        i = (t & -t).bit_length() - 1
        flip = gf2.dot(cur, row_corr[i])
        parity *= row_parity[i] * (-1 if flip else 1)
        cur ^= rows[i]
        total += parity
    if total > 0:
        return 1
    if total < 0:
        return -1
    raise ArithmeticError("parity sum vanished; global sign undetermined")


def xchain_state(g: Graph, xd: XChainData, xi: int) -> tuple[int, int]:
    """Sign and X-basis string of the xi-labelled product-state term."""
    return stabilizer_parity(g, xi), xd.x_gamma ^ correlation_index(g, xi)


def correlation_state(g: Graph, xd: XChainData, k: Basis, xi: int) -> XBasisExpansion:
    """Uniform superposition of the product-state terms over xi + span(k)."""
    terms: dict[int, int] = {}
    base_parity = stabilizer_parity(g, xi)
    base_corr = correlation_index(g, xi)
    row_parity = [stabilizer_parity(g, r) for r in k.rows]
    row_corr = [correlation_index(g, r) for r in k.rows]
    cur = xi
    parity = base_parity
    corr = base_corr
    for t in range(1 << k.dim):
        if t:
            i = (t & -t).bit_length() - 1  # Gray-code transition bit
            flip = gf2.dot(cur, row_corr[i])
            parity *= row_parity[i] * (-1 if flip else 1)
            cur ^= k.rows[i]
            corr ^= row_corr[i]
        mask = xd.x_gamma ^ corr
        if mask in terms:
            raise ValueError(
                "term collision: the subgroup meets the X-chain group nontrivially"
            )
        terms[mask] = parity
    return XBasisExpansion(tuple(range(1, g.n + 1)), k.dim, terms)


def x_representation(g: Graph) -> XBasisExpansion:
    """Exact X-basis expansion of the graph state, global sign included.

    Builds the superposition over the span of the free-vertex singletons
    and normalizes by the sign of the term-sign sum, so the result equals
    the dense reference state bit for bit.
    """
    xd = factorize(g, with_alpha=False)
    if len(xd.kappa) > ALPHA_SUM_LIMIT:
        raise ValueError(
            f"expansion has 2^{len(xd.kappa)} terms; capped at 2^{ALPHA_SUM_LIMIT}"
        )
    rows = gf2.rref([1 << (v - 1) for v in xd.kappa], g.n)
    e = correlation_state(g, xd, rows, 0)
    total = sum(e.terms.values())
    if total == 0:
        raise ArithmeticError("term-sign sum vanished; global sign undetermined")
    if total < 0:
        e.terms = {mask: -s for mask, s in e.terms.items()}
    return e


def measurement_support(g: Graph) -> list[tuple[int, Fraction]]:
    """Nonzero full-X-measurement outcomes with their exact probabilities."""
    if g.n > 20:
        raise ValueError("measurement support is capped at n <= 20")
    xd = factorize(g, with_alpha=False)
    prob = Fraction(1, 1 << len(xd.kappa))
    support = []
    corr = 0
    rows = [1 << (v - 1) for v in xd.kappa]
    row_corr = [correlation_index(g, r) for r in rows]
    for t in range(1 << len(rows)):
        if t:
            corr ^= row_corr[(t & -t).bit_length() - 1]
        support.append((xd.x_gamma ^ corr, prob))
    support.sort()
    return support


def distinguishing_outcomes(g: Graph, h: Graph) -> tuple[set[int], set[int]]:
    """X-measurement outcomes possible for exactly one of the two states."""
    if g.n != h.n:
        raise ValueError("graphs have different vertex counts")
    sg = {mask for mask, _ in measurement_support(g)}
    sh = {mask for mask, _ in measurement_support(h)}
    return sg - sh, sh - sg
