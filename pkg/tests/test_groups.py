import itertools

import pytest

from charposet import families as fam
from charposet import groups as gr
from charposet.errors import (
    ClosureTooLarge,
    EmptyInput,
    InputError,
    LatticeTooLarge,
    NoIdentity,
    NoInverse,
    NotAbelian,
    NotAssociative,
    NotNormal,
    OrderCapExceeded,
)

from conftest import brute_classes, brute_commuting


def _z4_table():
    return [[(i + j) % 4 for j in range(4)] for i in range(4)]


def test_from_cayley_trivial():
    G = gr.from_cayley([[0]])
    assert G.order == 1 and G.exponent == 1 and G.identity == 0


def test_from_cayley_z4():
    G = gr.from_cayley(_z4_table(), name="Z4")
    assert G.order == 4
    assert G.exponent == 4
    assert G.elem_order == (1, 4, 2, 4)
    assert G.inverse == (0, 3, 2, 1)


def test_from_cayley_not_associative():
    table = _z4_table()
    table[1][1] = 1  # breaks (1*1)*2 = 1*(1*2)
    with pytest.raises(NotAssociative):
        gr.from_cayley(table)


def test_from_cayley_no_identity():
    with pytest.raises(NoIdentity):
        gr.from_cayley([[1, 1], [1, 1]])


def test_from_cayley_offset_identity():
    # identity need not sit at index 0 in user tables
    G = gr.from_cayley([[1, 0], [0, 1]])
    assert G.identity == 1
    assert G.elem_order == (2, 1)


def test_from_cayley_no_inverse():
    with pytest.raises(NoInverse):
        gr.from_cayley([[0, 1, 2], [1, 1, 1], [2, 1, 2]])


def test_from_cayley_malformed():
    with pytest.raises(InputError):
        gr.from_cayley([[0, 1], [1]])
    with pytest.raises(InputError):
        gr.from_cayley([[0, 5], [5, 0]])


def test_from_permutations_transposition():
    G = gr.from_permutations([(1, 0)])
    assert G.order == 2


def test_from_permutations_identity_only():
    G = gr.from_permutations([(0, 1, 2)])
    assert G.order == 1


def test_from_permutations_d8_closure():
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    # independent closure oracle on raw tuples
    elems = {(0, 1, 2, 3)}
    while True:
        new = {
            tuple(a[b[i]] for i in range(4))
            for a in elems
            for b in [r, s] + list(elems)
        } | elems
        if new == elems:
            break
        elems = new
    assert len(elems) == 8
    G = gr.from_permutations([r, s], name="D8")
    assert G.order == 8
    assert G.identity == 0


def test_from_permutations_bad_input():
    with pytest.raises(InputError):
        gr.from_permutations([(0, 0, 1)])
    with pytest.raises(InputError):
        gr.from_permutations([])


def test_from_permutations_cap():
    with pytest.raises(ClosureTooLarge):
        gr.from_permutations([(1, 2, 3, 0), (0, 3, 2, 1)], cap=4)


def test_light_associativity_used_for_large_tables():
    G = fam.cyclic(2, 7)  # order 128 > full-check limit
    assert G.order == 128 and G.exponent == 128
    table = [list(r) for r in G.table]
    table[3][5] = G.table[3][6]  # corrupt one entry
    with pytest.raises((NotAssociative, NoInverse, NoIdentity)):
        gr.from_cayley(table)


def test_prime_of():
    assert gr.prime_of(8) == 2
    assert gr.prime_of(81) == 3
    assert gr.prime_of(12) is None
    assert gr.prime_of(1) is None


def test_center_abelian(c4xc2):
    W = gr.whole_group(c4xc2)
    assert gr.center(W).elems == W.elems


def test_center_q8_d8(q8, d8):
    for G in (q8, d8):
        W = gr.whole_group(G)
        expected = brute_commuting(G.table, W.elems)
        Z = gr.center(W)
        assert list(Z.elems) == expected
        assert len(Z) == 2


def test_derived_subgroup_abelian(c4xc2):
    D = gr.derived_subgroup(gr.whole_group(c4xc2))
    assert len(D) == 1


def test_derived_subgroup_q8(q8):
    D = gr.derived_subgroup(gr.whole_group(q8))
    # brute-force commutators
    t, inv = q8.table, q8.inverse
    comms = {t[t[inv[a]][inv[b]]][t[a][b]] for a in range(8) for b in range(8)}
    assert set(D.elems) == comms  # already closed here
    assert len(D) == 2


def test_derived_subgroup_d16(d16):
    D = gr.derived_subgroup(gr.whole_group(d16))
    assert len(D) == 4
    # <r^2> in the (i + 8j) encoding: indices 0,2,4,6
    assert D.elems == (0, 2, 4, 6)


def test_conjugacy_classes_abelian(c4xc2):
    cc = gr.conjugacy_classes(gr.whole_group(c4xc2))
    assert cc.count == 8
    assert all(s == 1 for s in cc.sizes)


@pytest.mark.parametrize("maker", ["q8", "d8"])
def test_conjugacy_classes_order8(maker, request):
    G = request.getfixturevalue(maker)
    W = gr.whole_group(G)
    cc = gr.conjugacy_classes(W)
    expected = brute_classes(G, W.elems)
    assert sorted(cc.sizes) == sorted(len(c) for c in expected)
    assert sorted(cc.sizes) == [1, 1, 2, 2, 2]
    assert set(cc.members) == set(expected)
    # reps minimal, identity class is a singleton, inverse_class involutive
    for r, mem in zip(cc.reps, cc.members):
        assert r == min(mem)
    assert cc.sizes[cc.identity_class] == 1
    for c in range(cc.count):
        assert cc.inverse_class[cc.inverse_class[c]] == c


def test_all_subgroups_cyclic(c8):
    subs = gr.all_subgroups(c8)
    assert [len(S) for S in subs] == [1, 2, 4, 8]
    c27 = fam.cyclic(3, 3)
    assert [len(S) for S in gr.all_subgroups(c27)] == [1, 3, 9, 27]


def test_all_subgroups_q8_brute(q8):
    subs = gr.all_subgroups(q8)
    assert [len(S) for S in subs] == [1, 2, 4, 4, 4, 8]
    # independent oracle: check every subset of each divisor size
    t = q8.table
    found = []
    for size in (1, 2, 4, 8):
        for cand in itertools.combinations(range(1, 8), size - 1):
            elems = (0,) + cand
            eset = set(elems)
            if all(t[a][b] in eset for a in elems for b in elems):
                found.append(tuple(sorted(elems)))
    assert sorted(found) == sorted(S.elems for S in subs)


def test_all_subgroups_e222(e222):
    assert len(gr.all_subgroups(e222)) == 16  # 1 + 7 + 7 + 1 subspaces


def test_all_subgroups_conjugation_closed(d8, q8, d16):
    for G in (d8, q8, d16):
        subs = gr.all_subgroups(G)
        keys = {S.elems for S in subs}
        for S in subs:
            for x in range(G.order):
                assert gr.conjugate_subgroup(S, x).elems in keys


def test_all_subgroups_deterministic(d16):
    a = [S.elems for S in gr.all_subgroups(d16)]
    b = [S.elems for S in gr.all_subgroups(d16)]
    assert a == b


def test_all_subgroups_caps():
    big = fam.cyclic(2, 8, cap=512)
    with pytest.raises(OrderCapExceeded):
        gr.all_subgroups(big)
    with pytest.raises(LatticeTooLarge):
        gr.all_subgroups(fam.elem_abelian(2, 5), lattice_cap=100)


def test_subgroups_of_order(c8, q8, d8):
    assert len(gr.subgroups_of_order(c8, 4)) == 1
    assert len(gr.subgroups_of_order(q8, 4)) == 3
    d8_4 = gr.subgroups_of_order(d8, 4)
    assert len(d8_4) == 3
    cyclic_count = sum(
        1 for S in d8_4 if any(d8.elem_order[x] == 4 for x in S.elems)
    )
    assert cyclic_count == 1  # one C4, two Klein
    with pytest.raises(InputError):
        gr.subgroups_of_order(q8, 3)


def test_intersect_all(q8, klein):
    subs4 = gr.subgroups_of_order(q8, 4)
    I = gr.intersect_all(subs4)
    assert I.elems == gr.center(gr.whole_group(q8)).elems
    subs2 = gr.subgroups_of_order(klein, 2)
    assert len(gr.intersect_all(subs2)) == 1
    one = gr.subgroups_of_order(q8, 8)
    assert gr.intersect_all(one).elems == one[0].elems
    with pytest.raises(EmptyInput):
        gr.intersect_all([])


def test_quotient_self(q8):
    W = gr.whole_group(q8)
    Q, proj = gr.quotient(W, W)
    assert Q.order == 1
    assert all(p == 0 for p in proj)


def test_quotient_q8_center(q8):
    W = gr.whole_group(q8)
    Z = gr.center(W)
    Q, proj = gr.quotient(W, Z)
    assert Q.order == 4
    assert all(Q.elem_order[x] <= 2 for x in range(4))  # Klein four


def test_quotient_d8_rotations(d8):
    W = gr.whole_group(d8)
    R = gr.generated_subgroup(d8, [1])  # <r>
    assert len(R) == 4
    Q, proj = gr.quotient(W, R)
    assert Q.order == 2


def test_quotient_not_normal(d8):
    W = gr.whole_group(d8)
    S = gr.generated_subgroup(d8, [4])  # a reflection
    assert len(S) == 2
    with pytest.raises(NotNormal):
        gr.quotient(W, S)


def test_quotient_projection_homomorphism(q8, d8, c4xc2):
    cases = [
        (q8, gr.center(gr.whole_group(q8))),
        (d8, gr.generated_subgroup(d8, [1])),
        (c4xc2, gr.generated_subgroup(c4xc2, [4])),
    ]
    for G, N in cases:
        W = gr.whole_group(G)
        Q, proj = gr.quotient(W, N)
        for a in range(G.order):
            for b in range(G.order):
                assert proj[G.table[a][b]] == Q.table[proj[a]][proj[b]]


def test_abelian_decomposition_examples(c4, klein, c4xc2):
    assert gr.abelian_decomposition(c4).factors == (4,)
    assert gr.abelian_decomposition(klein).factors == (2, 2)
    assert gr.abelian_decomposition(c4xc2).factors == (4, 2)
    big = fam.abelian_product([8, 4, 2])
    assert gr.abelian_decomposition(big).factors == (8, 4, 2)
    shuffled = fam.abelian_product([2, 8, 4])
    assert gr.abelian_decomposition(shuffled).factors == (8, 4, 2)


def test_abelian_decomposition_round_trip():
    for spec in ([4], [2, 2], [4, 2], [9, 3], [8, 2], [3, 3, 3]):
        A = fam.abelian_product(spec)
        dec = gr.abelian_decomposition(A)
        for x in range(A.order):
            acc = A.identity
            for g, k in zip(dec.generators, dec.dlog[x]):
                acc = A.table[acc][A.power(g, k)]
            assert acc == x


def test_abelian_decomposition_rejects_nonabelian(q8):
    with pytest.raises(NotAbelian):
        gr.abelian_decomposition(q8)


def test_double_cosets_whole(q8):
    W = gr.whole_group(q8)
    assert gr.double_cosets(q8, W, W) == [0]


def test_double_cosets_abelian(c4xc2):
    H = gr.generated_subgroup(c4xc2, [4])  # order 2
    K = gr.generated_subgroup(c4xc2, [2])  # order 2: (2,0) has order 2
    reps = gr.double_cosets(c4xc2, H, K)
    # abelian: double cosets are cosets of HK
    HK = gr.generated_subgroup(c4xc2, [4, 2])
    assert len(reps) == c4xc2.order // len(HK)


def test_double_cosets_d8(d8):
    S = gr.generated_subgroup(d8, [4])
    reps = gr.double_cosets(d8, S, S)
    # brute-force partition: H x K sets
    t = d8.table
    sizes = []
    for x in reps:
        sizes.append(len({t[t[h][x]][k] for h in S.elems for k in S.elems}))
    assert len(reps) == 3
    assert sorted(sizes) == [2, 2, 4]
    assert sum(sizes) == 8


def test_subgroup_validation(q8):
    with pytest.raises(InputError):
        gr.Subgroup(q8, [0, 1])  # not closed: 1*1 = 2 missing
    S = gr.Subgroup(q8, [0, 1, 2, 3])
    assert len(S) == 4


def test_lagrange_all_subgroups(d16):
    for S in gr.all_subgroups(d16):
        assert d16.order % len(S) == 0
