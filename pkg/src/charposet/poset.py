"""The subgroup-character poset of a finite p-group and its connectivity.

Nodes are pairs (H, chi) where H runs over the subgroups of order at least
p^(e+1) and chi over Irr(H); (K, psi) <= (H, chi) iff K <= H and psi is a
constituent of chi restricted to K.  Connected components are computed by
union-find over materialized comparable pairs; the default edge strategy
only tests pairs where K is maximal in H, which yields the same partition
because any comparability factors through a chain of index-p steps (each
restriction step keeps a common constituent).  The full strategy is kept as
an oracle.

Witness chains make connectivity explicit: witness_direct joins two nodes
through a constituent of an induced character at the top group, and
witness_sequence recurses along a list of subgroups whose successive
intersections carry a common constituent.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .characters import CharContext, ClassFunction, get_context, induce, inner_product, restrict
from .cyclotomic import exact_div_int
from .errors import (
    ChoiceExhausted,
    ComponentCoverageError,
    InputError,
    InvalidExponent,
    NoConstituent,
    NotAbelian,
    NotDivisible,
    NotMultipleOfLinear,
    PreconditionFailed,
)
from .groups import (
    GroupTable,
    Subgroup,
    center,
    intersect_all,
    require_p_group,
)


class Ordering(Enum):
    LE = "a<=b"
    GE = "b<=a"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class PosetNode:
    subgroup_id: int
    char_id: int


@dataclass(frozen=True)
class ComponentPartition:
    node_to_component: tuple
    count: int


@dataclass(frozen=True)
class WitnessChain:
    """A path of comparable nodes; directions[i] says whether
    nodes[i] <= nodes[i+1] ('up') or nodes[i] >= nodes[i+1] ('down')."""

    nodes: tuple
    directions: tuple

    def __len__(self):
        return len(self.nodes)


class _DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra


class CharacterPoset:
    """Materialized node set of the poset for one (G, p, e), with edge
    construction, components, and witness machinery."""

    def __init__(self, ctx: CharContext, p: int, e: int, strategy: str = "maximal"):
        if strategy not in ("maximal", "full"):
            raise InputError(f"unknown edge strategy {strategy!r}")
        G = ctx.group
        p = require_p_group(G, p)
        if e < 0 or p ** (e + 1) > G.order:
            raise InvalidExponent(
                f"p^(e+1) = {p ** (e + 1)} exceeds |G| = {G.order}"
            )
        self.ctx = ctx
        self.group = G
        self.p = p
        self.e = e
        self.strategy = strategy
        self.min_order = p ** (e + 1)
        self.subgroups = [S for S in ctx.lattice() if len(S.elems) >= self.min_order]
        self._sid = {S.elems: i for i, S in enumerate(self.subgroups)}
        self.offsets = []
        self.nodes = []
        for sid, S in enumerate(self.subgroups):
            self.offsets.append(len(self.nodes))
            for cid in range(len(ctx.irr(S))):
                self.nodes.append(PosetNode(sid, cid))
        self._edges: Optional[list] = None
        self._edge_sets: dict = {}
        self._char_index: dict = {}

    # -- node helpers -------------------------------------------------------

    def node_id(self, node: PosetNode) -> int:
        return self.offsets[node.subgroup_id] + node.char_id

    def subgroup_of(self, node: PosetNode) -> Subgroup:
        return self.subgroups[node.subgroup_id]

    def char_of(self, node: PosetNode) -> ClassFunction:
        return self.ctx.irr(self.subgroups[node.subgroup_id])[node.char_id]

    def locate(self, S: Subgroup, chi: ClassFunction) -> PosetNode:
        """The PosetNode for an irreducible character chi of S."""
        sid = self._sid.get(S.elems)
        if sid is None:
            raise PreconditionFailed(
                f"subgroup of order {len(S.elems)} is not in S_(p,e): "
                f"needs order >= {self.min_order}"
            )
        lookup = self._char_index.get(S.elems)
        if lookup is None:
            lookup = {ch.values: i for i, ch in enumerate(self.ctx.irr(self.subgroups[sid]))}
            self._char_index[S.elems] = lookup
        cid = lookup.get(chi.values)
        if cid is None:
            raise InputError("character is not an irreducible of the subgroup")
        return PosetNode(sid, cid)

    # -- relation and edges --------------------------------------------------

    def related(self, a: PosetNode, b: PosetNode) -> Ordering:
        if a == b:
            return Ordering.EQUAL
        Sa = self.subgroups[a.subgroup_id]
        Sb = self.subgroups[b.subgroup_id]
        if Sa.elems == Sb.elems:
            return Ordering.INCOMPARABLE  # distinct irreducibles are orthogonal
        if Sa.is_subset_of(Sb):
            if (a.char_id, b.char_id) in self._edge_set(Sa, Sb):
                return Ordering.LE
            return Ordering.INCOMPARABLE
        if Sb.is_subset_of(Sa):
            if (b.char_id, a.char_id) in self._edge_set(Sb, Sa):
                return Ordering.GE
            return Ordering.INCOMPARABLE
        return Ordering.INCOMPARABLE

    def _edge_set(self, K: Subgroup, H: Subgroup) -> frozenset:
        key = (K.elems, H.elems)
        hit = self._edge_sets.get(key)
        if hit is None:
            hit = frozenset(self.ctx.restriction_edges(K, H))
            self._edge_sets[key] = hit
        return hit

    def edge_list(self) -> list:
        """Materialized comparable node pairs (ids), per the strategy."""
        if self._edges is not None:
            return self._edges
        edges = []
        if self.strategy == "maximal":
            for K, H in self.ctx.maximal_pairs():
                ks = self._sid.get(K.elems)
                hs = self._sid.get(H.elems)
                if ks is None or hs is None:
                    continue
                koff, hoff = self.offsets[ks], self.offsets[hs]
                for i, j in self.ctx.restriction_edges(K, H):
                    edges.append((koff + i, hoff + j))
        else:
            for hs, H in enumerate(self.subgroups):
                hoff = self.offsets[hs]
                for ks in range(hs):
                    K = self.subgroups[ks]
                    if len(K.elems) == len(H.elems) or not K.is_subset_of(H):
                        continue
                    koff = self.offsets[ks]
                    for i, j in self.ctx.restriction_edges(K, H):
                        edges.append((koff + i, hoff + j))
        self._edges = edges
        return edges

    # -- components ------------------------------------------------------------

    def components(self) -> ComponentPartition:
        ds = _DisjointSet(len(self.nodes))
        for a, b in self.edge_list():
            ds.union(a, b)
        labels = {}
        out = []
        for i in range(len(self.nodes)):
            root = ds.find(i)
            if root not in labels:
                labels[root] = len(labels)
            out.append(labels[root])
        return ComponentPartition(node_to_component=tuple(out), count=len(labels))

    def component_representatives(self, partition: ComponentPartition, H: Subgroup) -> dict:
        """One node (H, chi) per component; every component must contain one."""
        sid = self._sid.get(H.elems)
        if sid is None:
            raise InputError(f"subgroup of order {len(H.elems)} is not in S_(p,e)")
        reps: dict = {}
        off = self.offsets[sid]
        for cid in range(len(self.ctx.irr(self.subgroups[sid]))):
            comp = partition.node_to_component[off + cid]
            reps.setdefault(comp, PosetNode(sid, cid))
        if len(reps) != partition.count:
            raise ComponentCoverageError(
                f"only {len(reps)} of {partition.count} components contain a node "
                f"with the chosen subgroup"
            )
        return reps

    # -- witness chains ------------------------------------------------------------

    def validate_chain(self, chain: WitnessChain) -> bool:
        if len(chain.nodes) != len(chain.directions) + 1:
            return False
        for k, d in enumerate(chain.directions):
            rel = self.related(chain.nodes[k], chain.nodes[k + 1])
            if d == "up" and rel is not Ordering.LE:
                return False
            if d == "down" and rel is not Ordering.GE:
                return False
            if d not in ("up", "down"):
                return False
        return True

    def _chain(self, steps: Sequence) -> WitnessChain:
        """Assemble a chain from (direction_from_previous, node) data,
        merging consecutive duplicate nodes."""
        nodes = [steps[0][1]]
        directions = []
        for prev_dir, node in steps[1:]:
            if node == nodes[-1]:
                continue
            nodes.append(node)
            directions.append(prev_dir)
        return WitnessChain(nodes=tuple(nodes), directions=tuple(directions))

    def witness_direct(self, alpha: ClassFunction, beta: ClassFunction) -> WitnessChain:
        """Join (H, alpha) and (K, beta) through a constituent of the
        character induced from alpha to the whole group.

        Requires a common constituent of the two restrictions to H n K; the
        chosen peak omega satisfies (H, alpha) <= (G, omega) >= (K, beta).
        """
        ctx = self.ctx
        H = ctx.canonical(alpha.owner)
        K = ctx.canonical(beta.owner)
        start = self.locate(H, alpha)
        end = self.locate(K, beta)
        M = intersect_all([H, K])
        if inner_product(restrict(alpha, M), restrict(beta, M)) == 0:
            raise PreconditionFailed(
                "restrictions to the intersection share no constituent"
            )
        whole = ctx.whole
        ind = induce(alpha, whole)
        peak = None
        for w in ctx.irr(whole):
            if inner_product(ind, w) != 0 and inner_product(restrict(w, K), beta) != 0:
                peak = w
                break
        if peak is None:
            raise NoConstituent(
                "no constituent of the induced character lies over beta"
            )
        top = self.locate(whole, peak)
        return self._chain([(None, start), ("up", top), ("down", end)])

    def witness_sequence(
        self, L: Sequence[Subgroup], alpha: ClassFunction, beta: ClassFunction
    ) -> WitnessChain:
        """Join (L[0], alpha) and (L[-1], beta) given a common constituent of
        their restrictions to the intersection of all of L.

        Recursion: pick a common constituent gamma there; pick eta on
        L[-2] n L[-1] over gamma and under beta; pick a constituent alpha' of
        eta induced to L[-2] still compatible with alpha on the shorter
        intersection; recurse on L[:-1] and close with a direct witness
        between the last two subgroups.
        """
        ctx = self.ctx
        L = [ctx.canonical(S) for S in L]
        if not L:
            raise InputError("empty subgroup sequence")
        for S in L:
            if len(S.elems) < self.min_order:
                raise PreconditionFailed(
                    f"sequence member of order {len(S.elems)} is not in S_(p,e)"
                )
        if alpha.owner.elems != L[0].elems or beta.owner.elems != L[-1].elems:
            raise InputError("endpoint characters must live on the endpoint subgroups")
        bottom = intersect_all(L)
        if inner_product(restrict(alpha, bottom), restrict(beta, bottom)) == 0:
            raise PreconditionFailed(
                "restrictions to the full intersection share no constituent"
            )
        if len(L) == 1:
            # both characters irreducible on the same subgroup: they coincide
            return self._chain([(None, self.locate(L[0], alpha))])
        if len(L) == 2:
            return self.witness_direct(alpha, beta)

        A = intersect_all(L[-2:])
        K_short = intersect_all(L[:-1])
        r_alpha_bottom = restrict(alpha, bottom)
        r_beta_bottom = restrict(beta, bottom)
        gamma = None
        for g in ctx.irr(bottom):
            if (
                inner_product(r_alpha_bottom, g) != 0
                and inner_product(r_beta_bottom, g) != 0
            ):
                gamma = g
                break
        if gamma is None:
            raise ChoiceExhausted("no common constituent despite nonzero inner product")

        r_beta_A = restrict(beta, A)
        eta = None
        for h in ctx.irr(A):
            if inner_product(r_beta_A, h) != 0 and inner_product(restrict(h, bottom), gamma) != 0:
                eta = h
                break
        if eta is None:
            raise ChoiceExhausted("no character over gamma and under beta")

        ind = induce(eta, L[-2])
        r_alpha_short = restrict(alpha, K_short)
        mid = None
        for chi in ctx.irr(L[-2]):
            if inner_product(ind, chi) != 0 and inner_product(
                r_alpha_short, restrict(chi, K_short)
            ) != 0:
                mid = chi
                break
        if mid is None:
            raise ChoiceExhausted("no constituent of the induced character fits")

        left = self.witness_sequence(L[:-1], alpha, mid)
        right = self.witness_direct(mid, beta)
        assert left.nodes[-1] == right.nodes[0]
        steps = [(None, left.nodes[0])]
        steps += list(zip(left.directions, left.nodes[1:]))
        steps += list(zip(right.directions, right.nodes[1:]))
        return self._chain(steps)


# -- spec operations ---------------------------------------------------------------


def build_poset(
    G: GroupTable, p: Optional[int], e: int, strategy: str = "maximal"
) -> CharacterPoset:
    ctx = get_context(G)
    return CharacterPoset(ctx, p if p is not None else require_p_group(G), e, strategy)


def build_nodes(G: GroupTable, p: Optional[int], e: int) -> tuple:
    """The subgroup list S_(p,e)(G) and the node list of the poset."""
    poset = build_poset(G, p, e)
    return poset.subgroups, poset.nodes


def components(
    G: GroupTable, p: Optional[int], e: int, strategy: str = "maximal"
) -> ComponentPartition:
    return build_poset(G, p, e, strategy).components()


def central_poset_map(alpha: ClassFunction, A: Subgroup) -> ClassFunction:
    """The unique linear beta on a nontrivial central A with
    alpha restricted to A equal to deg(alpha) * beta."""
    G = A.ambient
    ctx = get_context(G)
    assert len(A.elems) > 1
    ZG = center(ctx.whole)
    assert A.is_subset_of(ZG)
    assert A.is_subset_of(alpha.owner)
    r = restrict(alpha, A)
    d = alpha.degree
    try:
        scaled = tuple(exact_div_int(v, d) for v in r.values)
    except NotDivisible:
        raise NotMultipleOfLinear(
            "restriction to the central subgroup is not deg * (a single value vector)"
        ) from None
    idx = ctx.linear_lookup(A).get(scaled)
    if idx is None:
        raise NotMultipleOfLinear(
            "restriction to the central subgroup is not a multiple of one linear character"
        )
    beta = ctx.irr(A)[idx]
    assert all(v == d * b for v, b in zip(r.values, beta.values))
    return beta


def abelian_component_count(A: GroupTable, f: int) -> int:
    """Component count of the poset of an abelian group of order p^(f+1) at
    level f: a single subgroup, no cross-character relations."""
    if not A.is_abelian():
        raise NotAbelian(f"{A.name} is not abelian")
    p = require_p_group(A)
    if A.order != p ** (f + 1):
        raise InvalidExponent(f"|A| = {A.order} is not p^(f+1) = {p ** (f + 1)}")
    return components(A, p, f).count
