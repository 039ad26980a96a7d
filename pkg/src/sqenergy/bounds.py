"""Structural lower bounds for the square energies, as checkable certificates.

Every check either returns a :class:`BoundCertificate` (or a small result
record for the interlacing-style bounds) or reports inapplicability with
``None``.  A certificate is *conclusive* when its bound already reaches
n - 1, the conjectured floor for both square energies of a connected
graph.  Checks only ever under-promise: the certified value is a true
lower bound whenever the stated hypotheses hold, and the hypotheses are
verified here rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .graphs import (
    Graph,
    bits,
    cactus_profile,
    complement,
    component_masks,
    delete_edge,
    induced_subgraph,
    kronecker,
    stats,
)
from .partitions import Partition, quotient_eigenvalues, quotient_matrix
from .spectral import (
    EXACT_ORDER_CAP,
    Spectrum,
    char_poly_exact,
    eigenvalues,
    energy_profile,
    graph_profile,
    inertia_of,
    perron_vector,
    spectrum_from_values,
)

__all__ = [
    "CONCLUSIVE_TOL",
    "BoundCertificate",
    "PairBound",
    "EdgeDeletionBound",
    "MovingNeighborsBound",
    "UnicyclicFractionalBound",
    "MajorizationReport",
    "ExtendedBarbellForm",
    "H3nAnalysis",
    "check_avg_degree",
    "max_clique",
    "check_spanning_structures",
    "check_join",
    "check_self_join",
    "check_kronecker",
    "edge_deletion_bound",
    "moving_neighbors_bound",
    "induced_subgraph_bound",
    "induced_bipartite_bound",
    "quotient_bound",
    "m0_threshold",
    "unicyclic_fractional_bound",
    "majorization_two_positive",
    "energy_count_bound",
    "rank_bound",
    "extended_barbell_closed_form",
    "h3n_quotient_analysis",
    "certify",
    "CERTIFY_RULES",
]

CONCLUSIVE_TOL = 1e-9


@dataclass(frozen=True)
class BoundCertificate:
    """A checkable claim: the named rule proves target >= bound_value.

    ``target`` is "s_plus", "s_minus" or "both"; ``witness`` carries the
    structure the rule found (vertex sets as sorted lists, scalars as
    plain numbers) so the claim can be re-verified independently.
    ``conclusive`` records whether the bound reaches n - 1.
    """

    rule: str
    target: str
    bound_value: float
    witness: dict
    conclusive: bool

    def to_json_dict(self) -> dict:
        return {
            "rule": self.rule,
            "target": self.target,
            "bound": self.bound_value,
            "witness": self.witness,
            "conclusive": self.conclusive,
        }


def _certificate(rule: str, target: str, bound: float, witness: dict, n: int) -> BoundCertificate:
    return BoundCertificate(
        rule=rule,
        target=target,
        bound_value=float(bound),
        witness=witness,
        conclusive=bool(bound >= n - 1 - CONCLUSIVE_TOL),
    )


@dataclass(frozen=True)
class PairBound:
    """Lower bounds for both square energies from one argument."""

    s_plus_lower: float
    s_minus_lower: float


# ---------------------------------------------------------------------------
# average degree and spanning structures


def check_avg_degree(g: Graph) -> Optional[BoundCertificate]:
    """Certify s_plus >= avg_degree^2 when that already reaches n - 1.

    The mean degree is a convex combination bound on the largest
    eigenvalue, so lam_1^2 alone carries the claim.  The firing test
    4 m^2 >= n^2 (n - 1) is exact integer arithmetic.
    """
    st = stats(g)
    if not st.connected:
        raise ValueError("average degree bound assumes a connected graph")
    n, m = g.n, g.m
    if 4 * m * m < n * n * (n - 1):
        return None
    dbar = 2.0 * m / n
    return _certificate("avg_degree", "s_plus", dbar * dbar, {"avg_degree": dbar}, n)


_EXACT_CLIQUE_CAP = 12


def max_clique(g: Graph) -> tuple[int, ...]:
    """A largest clique: exact search up to order 12, greedy beyond.

    The greedy fallback can miss the optimum; callers only ever use the
    returned clique as a witness, so soundness is preserved either way.
    """
    n = g.n
    if n == 0:
        return ()
    rows = g.rows
    if n <= _EXACT_CLIQUE_CAP:
        best_mask = 0

        def grow(r: int, p: int, x: int) -> None:
            nonlocal best_mask
            if p == 0 and x == 0:
                if r.bit_count() > best_mask.bit_count():
                    best_mask = r
                return
            if r.bit_count() + p.bit_count() <= best_mask.bit_count():
                return
            pivot = max(bits(p | x), key=lambda u: (p & rows[u]).bit_count())
            cand = p & ~rows[pivot]
            for v in bits(cand):
                grow(r | 1 << v, p & rows[v], x & rows[v])
                p &= ~(1 << v)
                x |= 1 << v

        grow(0, (1 << n) - 1, 0)
        return tuple(bits(best_mask))
    # greedy: repeatedly extend by the candidate keeping most options open
    best: tuple[int, ...] = ()
    order = sorted(range(n), key=lambda u: -rows[u].bit_count())
    for start in order[:50]:
        mask = 1 << start
        cand = rows[start]
        while cand:
            v = max(bits(cand), key=lambda u: (cand & rows[u]).bit_count())
            mask |= 1 << v
            cand &= rows[v]
        if mask.bit_count() > len(best):
            best = tuple(bits(mask))
    return best


def _balanced_complement_split(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """A join split (all cross edges present), roughly balanced, if one exists.

    Cross-complete cuts are exactly the cuts that complement components
    never straddle, so group those components greedily by size.
    """
    comps = component_masks(complement(g))
    if len(comps) < 2:
        return None
    sides = [0, 0]
    weights = [0, 0]
    for mask in sorted(comps, key=lambda c: (-c.bit_count(), c)):
        i = 0 if weights[0] <= weights[1] else 1
        sides[i] |= mask
        weights[i] += mask.bit_count()
    return sorted(bits(sides[0])), sorted(bits(sides[1]))


def check_spanning_structures(g: Graph) -> list[BoundCertificate]:
    """Certificates from spanning structure: dominating vertex, spanning
    complete bipartite subgraph, large clique.

    All three rules feed the same mechanism (a known subgraph forces
    lam_1 and hence s_plus): a dominating vertex gives n - 1, a spanning
    K_{r, n-r} gives r (n - r), and a clique K_{r+1} gives r^2 which is
    useful once r >= sqrt(n - 1).
    """
    n = g.n
    out = []
    for v in range(n):
        if g.degree(v) == n - 1 and n >= 2:
            out.append(_certificate("dominating_vertex", "s_plus", n - 1, {"vertex": v}, n))
            break
    split = _balanced_complement_split(g)
    if split is not None:
        r = len(split[0])
        out.append(
            _certificate(
                "complete_bipartite_span",
                "s_plus",
                r * (n - r),
                {"side": split[0], "r": r},
                n,
            )
        )
    clique = max_clique(g)
    r = len(clique) - 1
    if r >= 1 and r * r >= n - 1:
        out.append(_certificate("clique", "s_plus", r * r, {"clique": list(clique)}, n))
    return out


# ---------------------------------------------------------------------------
# joins and products


def _validate_join_split(g: Graph, side_a: Sequence[int], side_b: Sequence[int]) -> None:
    amask = sum(1 << v for v in side_a)
    bmask = sum(1 << v for v in side_b)
    if not side_a or not side_b:
        raise ValueError("join split sides must be non-empty")
    if amask & bmask or amask | bmask != (1 << g.n) - 1:
        raise ValueError("join split must partition the vertex set")
    for v in side_a:
        if g.rows[v] & bmask != bmask:
            missing = next(bits(bmask & ~g.rows[v]))
            raise ValueError(f"missing cross edge ({v}, {missing}) for the claimed join")


def check_join(
    g: Graph, split: Optional[tuple[Sequence[int], Sequence[int]]] = None
) -> Optional[BoundCertificate]:
    """Certify s_plus >= n - 1 when g is a join of two non-empty graphs.

    With no split supplied, one is detected from the components of the
    complement (a graph is a join iff its complement is disconnected).
    A supplied split is validated edge by edge.
    """
    if split is None:
        found = _balanced_complement_split(g)
        if found is None:
            return None
        side_a, side_b = found
    else:
        side_a, side_b = sorted(split[0]), sorted(split[1])
    _validate_join_split(g, side_a, side_b)
    return _certificate("join", "s_plus", g.n - 1, {"side": list(side_a)}, g.n)


def check_self_join(
    g: Graph, split: Optional[tuple[Sequence[int], Sequence[int]]] = None
) -> Optional[BoundCertificate]:
    """Certify both energies for balanced joins of two equally dense halves.

    Needs half order r >= 8, every cross edge present, equal inside edge
    counts, and inside average degree d <= r/2.  The two-block quotient
    then has lambda_minus = d - r, so s_minus >= (r - d)^2 >= r^2/4 >=
    2r - 1 = n - 1, and the join itself covers s_plus >= n - 1.
    """
    n = g.n
    if n % 2:
        return None
    r = n // 2
    if r < 8:
        return None
    candidates: list[tuple[list[int], list[int]]]
    if split is not None:
        candidates = [(sorted(split[0]), sorted(split[1]))]
    else:
        comps = sorted(component_masks(complement(g)), key=lambda c: (c.bit_count(), c))
        if len(comps) < 2 or len(comps) > 12:
            return None
        candidates = []
        # side A always holds the last component, killing mirror duplicates
        for pick in range(0, 1 << (len(comps) - 1)):
            amask = comps[-1]
            for i in bits(pick):
                amask |= comps[i]
            if amask.bit_count() == r:
                bmask = (1 << n) - 1 - amask
                candidates.append((sorted(bits(amask)), sorted(bits(bmask))))
    for side_a, side_b in candidates:
        if len(side_a) != r:
            continue
        e1 = induced_subgraph(g, side_a).m
        e2 = induced_subgraph(g, side_b).m
        if e1 != e2 or 4 * e1 > r * r:  # unequal halves, or average degree above r/2
            continue
        try:
            _validate_join_split(g, side_a, side_b)
        except ValueError:
            if split is not None:
                raise
            continue
        d = 2.0 * e1 / r
        bound = min(float(n - 1), (r - d) * (r - d))
        return _certificate(
            "self_join",
            "both",
            bound,
            {"side": list(side_a), "half_order": r, "avg_degree": d},
            n,
        )
    return None


def check_kronecker(g: Graph, factors: tuple[Graph, Graph]) -> Optional[BoundCertificate]:
    """Certify both energies of a tensor product from its factors.

    The caller supplies the factorization; it is verified label for
    label.  When both factors have at least 3 vertices and themselves
    satisfy the n - 1 floor numerically, the product identity
    s_plus(GxH) = s+s+ + s-s- (and its s_minus twin) gives the bound
    2 (|G| - 1)(|H| - 1) >= |G||H| - 1 for both targets.
    """
    ga, gb = factors
    if kronecker(ga, gb).rows != g.rows or g.n != ga.n * gb.n:
        raise ValueError("supplied factors do not multiply to the given graph")
    na, nb = ga.n, gb.n
    if na < 3 or nb < 3:
        return None
    pa, pb = graph_profile(ga), graph_profile(gb)
    floor_a, floor_b = na - 1 - CONCLUSIVE_TOL, nb - 1 - CONCLUSIVE_TOL
    if min(pa.s_plus, pa.s_minus) < floor_a or min(pb.s_plus, pb.s_minus) < floor_b:
        return None
    bound = 2 * (na - 1) * (nb - 1)
    witness = {
        "factor_orders": [na, nb],
        "factor_profiles": [[pa.s_plus, pa.s_minus], [pb.s_plus, pb.s_minus]],
    }
    return _certificate("kronecker", "both", bound, witness, g.n)


# ---------------------------------------------------------------------------
# perturbation bounds (edge deletion, neighbour moving)


@dataclass(frozen=True)
class EdgeDeletionBound:
    """What adding the edge back to H = g - e is guaranteed to keep."""

    s_plus_lower: float
    s_minus_lower: float
    theta_2: float
    theta_n: float


def edge_deletion_bound(g: Graph, e: tuple[int, int]) -> Optional[EdgeDeletionBound]:
    """Lower bounds for s_plus(g), s_minus(g) from the edge-deleted graph.

    With H = g - e and spectrum theta, s_plus(g) >= s_plus(H) - theta_2^2
    and s_minus(g) >= s_minus(H) - theta_n^2, provided H has at least two
    positive and two negative eigenvalues (otherwise inapplicable).
    """
    h = delete_edge(g, e)
    spec = eigenvalues(h)
    inert = inertia_of(spec)
    if inert.positive < 2 or inert.negative < 2:
        return None
    prof = energy_profile(spec)
    theta2 = spec.values[1]
    thetan = spec.values[-1]
    return EdgeDeletionBound(
        s_plus_lower=prof.s_plus - theta2 * theta2,
        s_minus_lower=prof.s_minus - thetan * thetan,
        theta_2=theta2,
        theta_n=thetan,
    )


@dataclass(frozen=True)
class MovingNeighborsBound:
    """Bounds for the graph obtained by rewiring w_set from v to u.

    The weak s_plus bound always holds; the strong one (losing only
    lambda_2^2 instead of lambda_1^2) needs one of two side conditions,
    recorded in ``strong_condition`` when met.
    """

    s_plus_lower_weak: float
    s_plus_lower_strong: Optional[float]
    s_minus_lower: float
    strong_condition: Optional[str]


def moving_neighbors_bound(
    g: Graph, u: int, v: int, w_set: Iterable[int]
) -> MovingNeighborsBound:
    """Bounds for move_neighbors(g, u, v, w_set) in terms of g's spectrum.

    Strong condition (a): the Perron weight of u is at least that of v.
    Strong condition (b): u's closed neighbourhood misses N(v) entirely
    and the whole of N(v) is being moved.
    """
    ws = sorted(set(w_set))
    for w in ws:  # validate the move itself (raises on a bad w)
        if w == u or w == v or not (0 <= w < g.n):
            raise ValueError(f"moved vertex {w} must be distinct from u and v")
        if not g.has_edge(v, w):
            raise ValueError(f"moved vertex {w} is not a neighbour of {v}")
        if g.has_edge(u, w):
            raise ValueError(f"moved vertex {w} is already a neighbour of {u}")
    spec = eigenvalues(g)
    prof = energy_profile(spec)
    lam1 = spec.values[0]
    lam2 = spec.values[1] if g.n > 1 else 0.0
    lamn = spec.values[-1]
    strong: Optional[str] = None
    nv = g.rows[v]
    closed_u = g.rows[u] | (1 << u)
    if nv & closed_u == 0 and sum(1 << w for w in ws) == nv:
        strong = "whole_neighbourhood_disjoint"
    else:
        st = stats(g)
        if st.connected and g.m >= 1:
            _, x = perron_vector(g)
            if x[u] >= x[v] - 1e-12 * float(np.max(np.abs(x))):
                strong = "perron_weight"
    return MovingNeighborsBound(
        s_plus_lower_weak=prof.s_plus - lam1 * lam1,
        s_plus_lower_strong=(prof.s_plus - lam2 * lam2) if strong else None,
        s_minus_lower=prof.s_minus - lamn * lamn,
        strong_condition=strong,
    )


# ---------------------------------------------------------------------------
# subgraph and quotient bounds


def induced_subgraph_bound(g: Graph, s: Iterable[int]) -> PairBound:
    """Square energies of an induced subgraph bound those of g (interlacing)."""
    prof = graph_profile(induced_subgraph(g, s))
    return PairBound(prof.s_plus, prof.s_minus)


def _greedy_odd_cycle_deletions(g: Graph) -> Optional[list[int]]:
    """Vertices whose removal kills every odd cycle of a cactus.

    Prefers vertices shared by many odd cycles; one third of each odd
    cycle's length is untouchable anyway, so greed is plenty here.
    """
    prof = cactus_profile(g)
    if not prof.is_cactus:
        return None
    odd = [set(c) for c in prof.cycles if len(c) % 2]
    chosen: list[int] = []
    while odd:
        counts: dict[int, int] = {}
        for cyc in odd:
            for v in cyc:
                counts[v] = counts.get(v, 0) + 1
        v = max(sorted(counts), key=lambda w: counts[w])
        chosen.append(v)
        odd = [c for c in odd if v not in c]
    return chosen


def induced_bipartite_bound(
    g: Graph, deletions: Optional[Iterable[int]] = None
) -> Optional[BoundCertificate]:
    """Certify both energies from a bipartite induced subgraph.

    Deleting S leaves a bipartite H, whose square energies both equal
    |E(H)|; interlacing transfers that to g.  When no deletion set is
    supplied one is chosen automatically: empty if g is already
    bipartite, a greedy odd-cycle cover if g is a cactus, otherwise the
    rule reports inapplicability.  The coarser estimate
    |E| - |S| * max_degree is recorded alongside for comparison.
    """
    st = stats(g)
    if deletions is None:
        if st.bipartite:
            dels: list[int] = []
        elif st.connected:
            found = _greedy_odd_cycle_deletions(g)
            if found is None:
                return None
            dels = found
        else:
            return None
    else:
        dels = sorted(set(deletions))
    keep = [v for v in range(g.n) if v not in set(dels)]
    h = induced_subgraph(g, keep)
    hstats = stats(h)
    if not hstats.bipartite:
        raise ValueError(f"deleting {dels} does not leave a bipartite graph")
    bound = h.m
    coarse = g.m - len(dels) * st.max_degree
    return _certificate(
        "induced_bipartite",
        "both",
        bound,
        {"deleted": list(dels), "remaining_edges": h.m, "coarse_bound": coarse},
        g.n,
    )


def quotient_bound(g: Graph, x: Partition) -> PairBound:
    """Square energies of any quotient matrix bound those of g.

    Quotient eigenvalues interlace the adjacency spectrum, so the sums of
    squared positive / negative quotient eigenvalues are lower bounds.
    """
    spec = quotient_eigenvalues(quotient_matrix(g, x))
    s_plus = sum(t * t for t in spec.positive)
    s_minus = sum(t * t for t in spec.negative)
    return PairBound(s_plus, s_minus)


# ---------------------------------------------------------------------------
# odd-cycle (unicyclic) fractional bound


def m0_threshold(n: float) -> float:
    """Smallest cycle half-length making the cosine bound reach n - 1.

    Solves 2 n cos(pi / (2m+1)) / (1 + cos(pi / (2m+1))) = n - 1 for m:
    m0 = pi / (2 arccos((n-1)/(n+1))) - 1/2.  Grows like sqrt(n).
    """
    if n < 3:
        raise ValueError(f"threshold needs n >= 3, got {n}")
    return math.pi / (2.0 * math.acos((n - 1.0) / (n + 1.0))) - 0.5


@dataclass(frozen=True)
class UnicyclicFractionalBound:
    """Fractional floor for both square energies of an odd-cycle unicyclic graph.

    ``bound`` is the operative value: the plain 2mn/(2m+1) floor, upgraded
    to the sharper cosine form exactly when the cycle is long enough
    (m >= m0(n)) for that form to reach n - 1 (``conclusive_pair``).
    """

    bound: float
    m: int
    conclusive_pair: bool
    base_bound: float
    sharp_bound: float


def unicyclic_fractional_bound(g: Graph) -> Optional[UnicyclicFractionalBound]:
    """Both square energies of a unicyclic graph with odd cycle 2m+1 (m >= 2)
    are at least 2mn/(2m+1); for m >= m0(n) the sharper cosine bound
    already reaches n - 1.  Returns None outside those hypotheses.
    """
    n = g.n
    st = stats(g)
    if not st.connected or g.m != n:
        return None
    prof = cactus_profile(g)
    if len(prof.cycles) != 1:
        return None
    length = len(prof.cycles[0])
    if length % 2 == 0:
        return None
    m = (length - 1) // 2
    if m < 2:
        return None
    base = 2.0 * m * n / (2 * m + 1)
    cos = math.cos(math.pi / (2 * m + 1))
    sharp = 2.0 * n * cos / (1.0 + cos)
    conclusive = m >= math.ceil(m0_threshold(n) - 1e-12) and sharp >= n - 1 - CONCLUSIVE_TOL
    return UnicyclicFractionalBound(
        bound=sharp if conclusive else base,
        m=m,
        conclusive_pair=conclusive,
        base_bound=base,
        sharp_bound=sharp,
    )


# ---------------------------------------------------------------------------
# majorization, energy counts, rank


@dataclass(frozen=True)
class MajorizationReport:
    """Evidence that (lam_1, lam_2, 0, ...) majorizes the |negative| spectrum.

    ``mu`` and ``theta`` have equal length (the number of negative
    eigenvalues); ``prefix_ok[k]`` records the k-th partial-sum
    comparison and ``totals_equal`` the trace identity.
    """

    mu: tuple[float, ...]
    theta: tuple[float, ...]
    prefix_ok: tuple[bool, ...]
    totals_equal: bool


def majorization_two_positive(
    g: Graph,
) -> Optional[tuple[MajorizationReport, BoundCertificate]]:
    """For connected graphs with exactly two positive eigenvalues, the
    positive part majorizes the absolute negative part, forcing
    s_plus >= s_minus and hence s_plus >= |E| >= n - 1.

    The positive count is tolerance-classified and, within the exact
    cap, cross-checked against the integer characteristic polynomial's
    zero-root multiplicity.  Returns None when the shape does not apply.
    """
    st = stats(g)
    if not st.connected:
        return None
    spec = eigenvalues(g)
    inert = inertia_of(spec)
    if inert.positive != 2:
        return None
    if g.n <= EXACT_ORDER_CAP:
        exact_zero = char_poly_exact(g).zero_root_multiplicity()
        if exact_zero != inert.zero:
            raise ArithmeticError(
                f"tolerance classified {inert.zero} zero eigenvalues, "
                f"exact polynomial says {exact_zero}"
            )
    nu = inert.negative
    mu = tuple(spec.values[:2]) + (0.0,) * (nu - 2) if nu >= 2 else tuple(spec.values[:nu])
    theta = tuple(abs(t) for t in spec.values[::-1][:nu])
    prefix_ok = []
    run_mu, run_theta = 0.0, 0.0
    for k in range(nu - 1):
        run_mu += mu[k]
        run_theta += theta[k]
        prefix_ok.append(run_mu >= run_theta - CONCLUSIVE_TOL)
    total_mu = sum(mu)
    total_theta = sum(theta)
    totals_equal = abs(total_mu - total_theta) <= 1e-9 * max(1.0, total_theta)
    report = MajorizationReport(mu, theta, tuple(prefix_ok), totals_equal)
    if not all(prefix_ok) or not totals_equal:
        raise ArithmeticError("majorization chain failed numerically on a two-positive graph")
    cert = _certificate(
        "two_positive",
        "s_plus",
        g.n - 1,
        {"positive_count": 2, "edge_count": g.m},
        g.n,
    )
    return report, cert


def energy_count_bound(g: Graph) -> PairBound:
    """Cauchy-Schwarz floors: s_plus >= E^2/(4 pi), s_minus >= E^2/(4 nu).

    E is the graph energy; pi/nu are the positive/negative eigenvalue
    counts.  Needs at least one edge so both counts are positive.
    """
    if g.m == 0:
        raise ValueError("energy count bound needs at least one edge")
    prof = graph_profile(g)
    e2 = prof.energy * prof.energy
    return PairBound(e2 / (4.0 * prof.inertia.positive), e2 / (4.0 * prof.inertia.negative))


def rank_bound(g: Graph) -> Optional[BoundCertificate]:
    """Rank pigeonhole: few eigenvalues of one sign force a big square sum.

    With r = rank(A), the nonzero eigenvalues have product at least 1 in
    absolute value, which yields s_plus >= r^2/(4 pi) whenever
    pi <= r^2/(4(n-1)) (and symmetrically for s_minus).  One certificate
    is returned covering whichever targets fire.
    """
    st = stats(g)
    if not st.connected:
        raise ValueError("rank bound assumes a connected graph")
    if g.n < 3:
        raise ValueError(f"rank bound assumes order >= 3, got {g.n}")
    spec = eigenvalues(g)
    inert = inertia_of(spec)
    r = g.n - char_poly_exact(g).zero_root_multiplicity() if g.n <= EXACT_ORDER_CAP else (
        inert.positive + inert.negative
    )
    gate = r * r / (4.0 * (g.n - 1))
    plus_fires = inert.positive <= gate
    minus_fires = inert.negative <= gate
    if not plus_fires and not minus_fires:
        return None
    witness = {"rank": r, "positive": inert.positive, "negative": inert.negative}
    if plus_fires and minus_fires:
        bound = min(r * r / (4.0 * inert.positive), r * r / (4.0 * inert.negative))
        return _certificate("rank", "both", bound, witness, g.n)
    if plus_fires:
        return _certificate("rank", "s_plus", r * r / (4.0 * inert.positive), witness, g.n)
    return _certificate("rank", "s_minus", r * r / (4.0 * inert.negative), witness, g.n)


# ---------------------------------------------------------------------------
# closed forms for the two benchmark families


@dataclass(frozen=True)
class ExtendedBarbellForm:
    """Closed-form spectrum of the bridge-subdivided double clique.

    Eigenvalues are k-1, -1 with multiplicity n-4, and the three roots of
    the cubic x^3 - (k-2) x^2 - (k+1) x + 2(k-2).
    """

    spectrum: Spectrum
    s_plus: float
    s_minus: float
    conclusive: bool
    cubic_coeffs: tuple[int, int, int, int]


def extended_barbell_closed_form(k: int) -> ExtendedBarbellForm:
    """Spectrum and square energies of the order-(2k+1) extended barbell.

    Verifies, in exact rational arithmetic, the cubic's values that pin
    the root ordering mu_1 > k-1 > mu_2 > -1 > mu_3 < -9/5, then returns
    floats.  Both energies clear n - 1 with room (s_plus > 2 (k-1)^2,
    s_minus > n - 4 + 3.24).
    """
    if k < 3:
        raise ValueError(f"extended barbell needs k >= 3, got {k}")
    n = 2 * k + 1
    coeffs = (1, -(k - 2), -(k + 1), 2 * (k - 2))

    def f(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in coeffs:
            acc = acc * x + c
        return acc

    if f(Fraction(k - 1)) != Fraction(-2):
        raise ArithmeticError("cubic sanity value at k-1 is off")
    if f(Fraction(-1)) != Fraction(2 * k - 2):
        raise ArithmeticError("cubic sanity value at -1 is off")
    if f(Fraction(-9, 5)) != Fraction(14 * k, 25) - Fraction(194, 125):
        raise ArithmeticError("cubic sanity value at -9/5 is off")
    roots = np.roots(np.array(coeffs, dtype=float))
    if float(np.max(np.abs(roots.imag))) > 1e-9:
        raise ArithmeticError("cubic produced complex roots")
    mu1, mu2, mu3 = sorted((float(t) for t in roots.real), reverse=True)
    if not (mu1 > k - 1 > mu2 > -1 > mu3 and mu3 < -9.0 / 5.0 and mu2 > 0):
        raise ArithmeticError("cubic roots violate the expected ordering")
    values = [mu1, float(k - 1), mu2] + [-1.0] * (n - 4) + [mu3]
    spec = spectrum_from_values(values, n=n)
    s_plus = mu1 * mu1 + (k - 1) ** 2 + mu2 * mu2
    s_minus = (n - 4) + mu3 * mu3
    conclusive = s_plus >= n - 1 - CONCLUSIVE_TOL and s_minus >= n - 1 - CONCLUSIVE_TOL
    return ExtendedBarbellForm(spec, s_plus, s_minus, conclusive, coeffs)


@dataclass(frozen=True)
class H3nAnalysis:
    """Quotient polynomial data for the triangle-with-pendants family.

    The degree-4 quotient polynomial carries the four non-trivial
    eigenvalues; the remaining spectrum is -1 once and 0 with
    multiplicity n - 5.  ``s_minus_gap`` = mu_3^2 + mu_4^2 - (n - 2)
    measures how far the two negative quotient roots alone sit from the
    n - 2 floor they would need for a fully spectral proof.
    """

    poly_coeffs: tuple[int, ...]
    mu: tuple[float, float, float, float]
    s_minus_gap: float


def h3n_quotient_analysis(n: int) -> H3nAnalysis:
    """Quotient eigenvalues of the triangle with a pendant star of order n >= 5."""
    if n < 5:
        raise ValueError(f"analysis needs n >= 5, got {n}")
    coeffs = (1, -1, -(n - 1), n - 3, 2 * (n - 4))
    roots = np.roots(np.array(coeffs, dtype=float))
    if float(np.max(np.abs(roots.imag))) > 1e-9:
        raise ArithmeticError("quotient polynomial produced complex roots")
    mu = tuple(sorted((float(t) for t in roots.real), reverse=True))
    gap = mu[2] ** 2 + mu[3] ** 2 - (n - 2)
    return H3nAnalysis(coeffs, mu, gap)


# ---------------------------------------------------------------------------
# certification pipeline


def certify(g: Graph, rules: Optional[Iterable[str]] = None) -> list[BoundCertificate]:
    """Run every self-contained certificate rule against one graph.

    Rules that need caller-supplied structure (factorizations, explicit
    cuts, moves) are not part of this sweep.  ``rules`` filters by name.
    Assumes a connected graph, as the n - 1 floor does.
    """
    st = stats(g)
    if not st.connected or g.n == 0:
        raise ValueError("certification assumes a non-empty connected graph")
    wanted = set(rules) if rules is not None else None
    out: list[BoundCertificate] = []

    def want(name: str) -> bool:
        return wanted is None or name in wanted

    if want("avg_degree"):
        cert = check_avg_degree(g)
        if cert:
            out.append(cert)
    if want("dominating_vertex") or want("complete_bipartite_span") or want("clique"):
        for cert in check_spanning_structures(g):
            if want(cert.rule):
                out.append(cert)
    if want("join"):
        cert = check_join(g)
        if cert:
            out.append(cert)
    if want("self_join"):
        cert = check_self_join(g)
        if cert:
            out.append(cert)
    if want("induced_bipartite"):
        cert = induced_bipartite_bound(g)
        if cert:
            out.append(cert)
    if want("odd_cycle"):
        rec = unicyclic_fractional_bound(g)
        if rec:
            out.append(
                _certificate(
                    "odd_cycle",
                    "both",
                    rec.bound,
                    {
                        "m": rec.m,
                        "cycle_length": 2 * rec.m + 1,
                        "base_bound": rec.base_bound,
                        "sharp_bound": rec.sharp_bound,
                    },
                    g.n,
                )
            )
    if want("two_positive"):
        pair = majorization_two_positive(g)
        if pair:
            out.append(pair[1])
    if want("rank") and g.n >= 3:
        cert = rank_bound(g)
        if cert:
            out.append(cert)
    if want("energy") and g.m >= 1:
        pb = energy_count_bound(g)
        n = g.n
        if pb.s_plus_lower >= n - 1 - CONCLUSIVE_TOL:
            out.append(
                _certificate("energy", "s_plus", pb.s_plus_lower, {"energy_sq_over_4pi": pb.s_plus_lower}, n)
            )
        if pb.s_minus_lower >= n - 1 - CONCLUSIVE_TOL:
            out.append(
                _certificate("energy", "s_minus", pb.s_minus_lower, {"energy_sq_over_4nu": pb.s_minus_lower}, n)
            )
    return out


CERTIFY_RULES = (
    "avg_degree",
    "dominating_vertex",
    "complete_bipartite_span",
    "clique",
    "join",
    "self_join",
    "induced_bipartite",
    "odd_cycle",
    "two_positive",
    "rank",
    "energy",
)
