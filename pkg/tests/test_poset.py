import json

import pytest

from charposet import export
from charposet import families as fam
from charposet import groups as gr
from charposet.characters import get_context, inner_product, irr, restrict
from charposet.errors import (
    InputError,
    InvalidExponent,
    NotAbelian,
    NotPGroup,
    PreconditionFailed,
)
from charposet.poset import (
    CharacterPoset,
    Ordering,
    abelian_component_count,
    build_nodes,
    build_poset,
    central_poset_map,
    components,
)


def _poset(G, e, strategy="maximal"):
    return build_poset(G, None, e, strategy)


def _sign_char_on_center(G):
    ctx = get_context(G)
    Z = gr.center(ctx.whole)
    return Z, [ch for ch in ctx.irr(Z) if ch.values[1].coeffs[0] == -1][0]


def test_build_nodes_c4(c4):
    subs, nodes = build_nodes(c4, 2, 1)
    assert len(subs) == 1 and len(subs[0]) == 4
    assert len(nodes) == 4


def test_build_nodes_q8(q8):
    subs, nodes = build_nodes(q8, 2, 1)
    assert [len(S) for S in subs] == [4, 4, 4, 8]
    assert len(nodes) == 3 * 4 + 5


def test_build_nodes_d8_e0(d8):
    subs, nodes = build_nodes(d8, 2, 0)
    assert [len(S) for S in subs] == [2, 2, 2, 2, 2, 4, 4, 4, 8]


def test_build_nodes_errors(q8, d8):
    with pytest.raises(InvalidExponent):
        build_nodes(q8, 2, 3)
    with pytest.raises(NotPGroup):
        build_nodes(q8, 3, 0)
    S3 = gr.from_permutations([(1, 0, 2), (1, 2, 0)], name="S3")
    with pytest.raises(NotPGroup):
        build_nodes(S3, None, 0)


def test_related_equal_and_examples(q8):
    poset = _poset(q8, 1)
    n0 = poset.nodes[0]
    assert poset.related(n0, n0) is Ordering.EQUAL

    # (Z, sign) vs (Q8, two-dim) needs e=0 so Z is a node
    poset0 = _poset(q8, 0)
    Z, sign = _sign_char_on_center(q8)
    a = poset0.locate(Z, sign)
    ctx = get_context(q8)
    two = ctx.irr(ctx.whole)[-1]
    b = poset0.locate(ctx.whole, two)
    assert poset0.related(a, b) is Ordering.LE
    assert poset0.related(b, a) is Ordering.GE

    # incomparable subgroups
    A = gr.generated_subgroup(q8, [1])
    B = gr.generated_subgroup(q8, [4])
    na = poset0.locate(ctx.canonical(A), ctx.irr(ctx.canonical(A))[3])
    nb = poset0.locate(ctx.canonical(B), ctx.irr(ctx.canonical(B))[0])
    assert poset0.related(na, nb) is Ordering.INCOMPARABLE

    # same subgroup, distinct characters
    nc = poset0.locate(ctx.canonical(A), ctx.irr(ctx.canonical(A))[0])
    assert poset0.related(na, nc) is Ordering.INCOMPARABLE


def _brute_component_count(G, e):
    """Full pairwise relation test plus DFS, independent of the edge
    strategies and of union-find."""
    ctx = get_context(G)
    p = gr.require_p_group(G)
    min_order = p ** (e + 1)
    subs = [S for S in ctx.lattice() if len(S) >= min_order]
    nodes = [(S, chi) for S in subs for chi in ctx.irr(S)]
    adj = {i: set() for i in range(len(nodes))}
    for i, (S, chi) in enumerate(nodes):
        for j, (T, psi) in enumerate(nodes):
            if j <= i:
                continue
            if S.elems != T.elems and S.is_subset_of(T):
                rel = inner_product(restrict(psi, S), chi) != 0
            elif T.elems != S.elems and T.is_subset_of(S):
                rel = inner_product(restrict(chi, T), psi) != 0
            else:
                continue
            if rel:
                adj[i].add(j)
                adj[j].add(i)
    seen = set()
    count = 0
    for i in range(len(nodes)):
        if i in seen:
            continue
        count += 1
        stack = [i]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj[x] - seen)
    return count


@pytest.mark.parametrize(
    "spec,e,expected",
    [
        ("ElemAbelian(2,3)", 1, 1),
        ("Quaternion(8)", 1, 2),
        ("Cyclic(2,4)", 2, 8),
        ("Dihedral(8)", 1, 2),
        ("Cyclic(2,2)", 0, 2),
    ],
)
def test_component_counts(spec, e, expected):
    G = fam.builtin(spec)
    assert _brute_component_count(G, e) == expected
    assert components(G, None, e, "full").count == expected
    assert components(G, None, e, "maximal").count == expected


def test_strategy_partitions_identical(q8, d8, d16, c4xc2, e222):
    for G in (q8, d8, d16, c4xc2, e222):
        for e in range(0, 3):
            if 2 ** (e + 1) > G.order:
                break
            full = components(G, None, e, "full")
            maxi = components(G, None, e, "maximal")
            assert full.node_to_component == maxi.node_to_component
            assert full.count == maxi.count


def test_component_representatives_abelian(c4xc2):
    poset = _poset(c4xc2, 0)
    part = poset.components()
    W = get_context(c4xc2).whole
    reps = poset.component_representatives(part, W)
    assert len(reps) == part.count
    for comp, node in reps.items():
        assert poset.subgroup_of(node).elems == W.elems
        assert part.node_to_component[poset.node_id(node)] == comp


def test_component_representatives_q8_d8(q8, d8):
    for G in (q8, d8):
        poset = _poset(G, 1)
        part = poset.components()
        for S in poset.subgroups:
            reps = poset.component_representatives(part, S)
            assert len(reps) == part.count == 2


def test_component_representatives_rejects_missing_subgroup(q8):
    poset = _poset(q8, 1)
    part = poset.components()
    Z = gr.center(get_context(q8).whole)
    with pytest.raises(InputError):
        poset.component_representatives(part, Z)


def test_witness_direct_same_node(q8):
    ctx = get_context(q8)
    poset = _poset(q8, 1)
    H = poset.subgroups[0]
    alpha = ctx.irr(H)[1]
    chain = poset.witness_direct(alpha, alpha)
    assert poset.validate_chain(chain)
    assert chain.nodes[0] == chain.nodes[-1] == poset.locate(H, alpha)
    assert len(chain.nodes) == 3  # through a peak over alpha


def test_witness_direct_q8_peak_is_two_dim(q8):
    ctx = get_context(q8)
    poset = _poset(q8, 1)
    Z, sign = _sign_char_on_center(q8)
    A, B = poset.subgroups[0], poset.subgroups[1]
    al = [c for c in ctx.irr(A) if inner_product(restrict(c, Z), sign)][0]
    be = [c for c in ctx.irr(B) if inner_product(restrict(c, Z), sign)][0]
    chain = poset.witness_direct(al, be)
    assert poset.validate_chain(chain)
    assert len(chain.nodes) == 3
    assert poset.char_of(chain.nodes[1]).degree == 2
    assert chain.directions == ("up", "down")


def test_witness_direct_abelian_degenerate(c4):
    ctx = get_context(c4)
    poset = _poset(c4, 1)
    chi = ctx.irr(ctx.whole)[2]
    chain = poset.witness_direct(chi, chi)
    assert len(chain.nodes) == 1
    assert chain.directions == ()
    assert poset.validate_chain(chain)


def test_witness_direct_precondition_failure(q8):
    ctx = get_context(q8)
    poset = _poset(q8, 1)
    Z, sign = _sign_char_on_center(q8)
    A, B = poset.subgroups[0], poset.subgroups[1]
    over_sign = [c for c in ctx.irr(A) if inner_product(restrict(c, Z), sign)][0]
    over_triv = [c for c in ctx.irr(B) if not inner_product(restrict(c, Z), sign)][0]
    with pytest.raises(PreconditionFailed):
        poset.witness_direct(over_sign, over_triv)


def test_witness_direct_rejects_small_subgroup(q8):
    ctx = get_context(q8)
    poset = _poset(q8, 1)
    Z, sign = _sign_char_on_center(q8)
    with pytest.raises(PreconditionFailed):
        poset.witness_direct(sign, sign)


def test_witness_sequence_two_subgroups_delegates(q8):
    ctx = get_context(q8)
    poset = _poset(q8, 1)
    Z, sign = _sign_char_on_center(q8)
    A, B = poset.subgroups[0], poset.subgroups[1]
    al = [c for c in ctx.irr(A) if inner_product(restrict(c, Z), sign)][0]
    be = [c for c in ctx.irr(B) if inner_product(restrict(c, Z), sign)][0]
    direct = poset.witness_direct(al, be)
    seq = poset.witness_sequence([A, B], al, be)
    assert seq == direct


def test_witness_sequence_three_c4s(q8):
    ctx = get_context(q8)
    poset = _poset(q8, 1)
    Z, sign = _sign_char_on_center(q8)
    A, B, C = poset.subgroups[0], poset.subgroups[1], poset.subgroups[2]
    al = [c for c in ctx.irr(A) if inner_product(restrict(c, Z), sign)][0]
    be = [c for c in ctx.irr(C) if inner_product(restrict(c, Z), sign)][0]
    chain = poset.witness_sequence([A, B, C], al, be)
    assert poset.validate_chain(chain)
    assert chain.nodes[0] == poset.locate(A, al)
    assert chain.nodes[-1] == poset.locate(C, be)


def test_witness_sequence_loop_same_subgroup(q8):
    ctx = get_context(q8)
    poset = _poset(q8, 1)
    Z, sign = _sign_char_on_center(q8)
    A, B = poset.subgroups[0], poset.subgroups[1]
    overs = [c for c in ctx.irr(A) if inner_product(restrict(c, Z), sign)]
    assert len(overs) == 2
    chain = poset.witness_sequence([A, B, A], overs[0], overs[1])
    assert poset.validate_chain(chain)
    assert chain.nodes[0] != chain.nodes[-1]


def test_witness_sequence_all_whole_group(q8):
    ctx = get_context(q8)
    poset = _poset(q8, 1)
    chi = ctx.irr(ctx.whole)[0]
    chain = poset.witness_sequence([ctx.whole] * 3, chi, chi)
    assert len(chain.nodes) == 1
    assert poset.validate_chain(chain)


def test_witness_sequence_precondition(q8):
    ctx = get_context(q8)
    poset = _poset(q8, 1)
    Z, sign = _sign_char_on_center(q8)
    A, B = poset.subgroups[0], poset.subgroups[1]
    al = [c for c in ctx.irr(A) if inner_product(restrict(c, Z), sign)][0]
    be = [c for c in ctx.irr(B) if not inner_product(restrict(c, Z), sign)][0]
    with pytest.raises(PreconditionFailed):
        poset.witness_sequence([A, B], al, be)


def test_central_poset_map_linear(c4xc2):
    ctx = get_context(c4xc2)
    W = ctx.whole
    A = gr.generated_subgroup(c4xc2, [2])  # order-2 central
    for chi in ctx.irr(W):
        beta = central_poset_map(chi, A)
        assert beta.values == restrict(chi, A).values


def test_central_poset_map_two_dim(q8):
    ctx = get_context(q8)
    Z, sign = _sign_char_on_center(q8)
    two = ctx.irr(ctx.whole)[-1]
    beta = central_poset_map(two, Z)
    assert beta.values == sign.values


def test_central_poset_map_constant_on_comparable_pairs(q8, d8):
    for G in (q8, d8):
        ctx = get_context(G)
        poset = _poset(G, 1)
        Z = gr.center(ctx.whole)
        for a in poset.nodes:
            for b in poset.nodes:
                if poset.related(a, b) is Ordering.LE:
                    ba = central_poset_map(poset.char_of(a), Z)
                    bb = central_poset_map(poset.char_of(b), Z)
                    assert ba.values == bb.values


@pytest.mark.parametrize(
    "spec,f,expected",
    [
        ("Cyclic(2,1)", 0, 2),
        ("Cyclic(3,2)", 1, 9),
        ("ElemAbelian(3,2)", 1, 9),
    ],
)
def test_abelian_component_count(spec, f, expected):
    assert abelian_component_count(fam.builtin(spec), f) == expected


def test_abelian_component_count_errors(q8, c4):
    with pytest.raises(NotAbelian):
        abelian_component_count(q8, 2)
    with pytest.raises(InvalidExponent):
        abelian_component_count(c4, 0)


def test_edge_lists_deterministic(q8):
    a = build_poset(q8, None, 1).edge_list()
    b = build_poset(q8, None, 1).edge_list()
    assert a == b


def test_poset_exports(q8, tmp_path):
    poset = _poset(q8, 1)
    part = poset.components()
    doc = export.poset_json(poset, part)
    text = export.canonical_json(doc)
    assert json.loads(text)["components"]["count"] == 2
    assert export.canonical_json(export.poset_json(poset, part)) == text

    dot = export.poset_dot(poset, part)
    assert dot.startswith("graph")
    assert dot.count("χ") == len(poset.nodes)
    assert export.poset_dot(poset, part) == dot


def test_chain_json(q8):
    ctx = get_context(q8)
    poset = _poset(q8, 1)
    chi = ctx.irr(ctx.whole)[0]
    chain = poset.witness_direct(chi, chi)
    doc = export.chain_json(poset, chain, poset.validate_chain(chain))
    assert doc["verified"] is True
    assert len(doc["nodes"]) == len(chain.nodes)
