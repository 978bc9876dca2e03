"""Irreducible characters of all subgroups of a fixed finite group.

Complete character sets are produced by the monomial method: every
irreducible of a p-group is induced from a linear character of some
subgroup, so inducing all linear characters of all subgroups of index at
most sqrt(|H|) and keeping the norm-1 results is exhaustive.  Completeness
is asserted (sum of squared degrees, class count), so a gap in the method
surfaces as an error rather than a wrong answer.

All values are exact cyclotomic integers at one global conductor, the
exponent of the ambient group.  A per-group CharContext memoizes the
subgroup lattice, conjugacy classes, character sets and restriction
decompositions; everything it stores is immutable.
"""

from __future__ import annotations

import weakref
from math import isqrt
from typing import Optional, Sequence

from . import cyclotomic as cyc
from .cyclotomic import CycInt, as_integer, exact_div_int
from .errors import IncompleteIrr, InputError, NotASubgroup, NotDivisible
from .groups import (
    DEFAULT_LATTICE_CAP,
    DEFAULT_ORDER_CAP,
    ConjClasses,
    GroupTable,
    Subgroup,
    abelian_decomposition,
    all_subgroups,
    conjugacy_classes,
    conjugate_subgroup,
    derived_subgroup,
    double_cosets,
    intersect_all,
    quotient,
    whole_group,
)


class ClassFunction:
    """A class function on a subgroup: one CycInt per conjugacy class."""

    __slots__ = ("owner", "classes", "values", "degree")

    def __init__(self, owner: Subgroup, classes: ConjClasses, values: Sequence[CycInt]):
        values = tuple(values)
        assert len(values) == classes.count
        self.owner = owner
        self.classes = classes
        self.values = values
        self.degree = as_integer(values[classes.identity_class])

    def value_at(self, g: int) -> CycInt:
        """Value at an ambient element index (must lie in the owner)."""
        c = self.classes.class_of[g]
        if c < 0:
            raise InputError(f"element {g} is not in the owner subgroup")
        return self.values[c]

    def sort_key(self):
        return (self.degree, tuple(v.coeffs for v in self.values))

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and self.owner.ambient is other.owner.ambient
            and self.owner.elems == other.owner.elems
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.owner.elems, self.values))

    def __repr__(self):
        return f"ClassFunction(deg={self.degree}, |H|={len(self.owner.elems)})"


_CONTEXTS: "weakref.WeakKeyDictionary[GroupTable, CharContext]" = weakref.WeakKeyDictionary()


def get_context(
    G: GroupTable,
    order_cap: int = DEFAULT_ORDER_CAP,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> "CharContext":
    ctx = _CONTEXTS.get(G)
    if ctx is None:
        ctx = CharContext(G, order_cap, lattice_cap)
        _CONTEXTS[G] = ctx
    return ctx


class CharContext:
    """Per-group memo of lattice, classes, characters and restriction data."""

    def __init__(self, G: GroupTable, order_cap: int, lattice_cap: int):
        self.group = G
        self.conductor = G.exponent
        self.order_cap = order_cap
        self.lattice_cap = lattice_cap
        self.whole = whole_group(G)
        self._scalar_values = cyc.euler_phi(G.exponent) == 1
        self._lattice: Optional[list] = None
        self._by_elems: dict = {}
        self._classes: dict = {}
        self._irr: dict = {}
        self._linear: dict = {}
        self._linear_lookup: dict = {}
        self._edges: dict = {}

    # -- lattice ---------------------------------------------------------

    def lattice(self) -> list:
        if self._lattice is None:
            self._lattice = all_subgroups(self.group, self.order_cap, self.lattice_cap)
            self._by_elems = {S.elems: S for S in self._lattice}
        return self._lattice

    def canonical(self, S: Subgroup) -> Subgroup:
        """The lattice's own instance for this element set."""
        self.lattice()
        hit = self._by_elems.get(S.elems)
        if hit is None:
            raise NotASubgroup(f"{S!r} is not in the subgroup lattice")
        return hit

    def maximal_pairs(self) -> list:
        """All pairs (K, H) with K maximal in H, i.e. of index p."""
        from .groups import prime_of

        p = prime_of(self.group.order)
        assert p is not None
        lattice = self.lattice()
        by_order: dict = {}
        for S in lattice:
            by_order.setdefault(len(S.elems), []).append(S)
        pairs = []
        for H in lattice:
            below = by_order.get(len(H.elems) // p, ()) if len(H.elems) % p == 0 else ()
            for K in below:
                if K.mask | H.mask == H.mask:
                    pairs.append((K, H))
        return pairs

    # -- classes and characters -------------------------------------------

    def classes(self, S: Subgroup) -> ConjClasses:
        hit = self._classes.get(S.elems)
        if hit is None:
            hit = conjugacy_classes(S)
            self._classes[S.elems] = hit
        return hit

    def linear(self, S: Subgroup) -> tuple:
        hit = self._linear.get(S.elems)
        if hit is None:
            hit = _linear_characters(self, S)
            self._linear[S.elems] = hit
        return hit

    def irr(self, S: Subgroup) -> tuple:
        hit = self._irr.get(S.elems)
        if hit is None:
            hit = _compute_irr(self, S)
            self._irr[S.elems] = hit
        return hit

    def linear_lookup(self, S: Subgroup) -> dict:
        """Map value-vector -> index in irr(S), for the degree-1 characters."""
        hit = self._linear_lookup.get(S.elems)
        if hit is None:
            hit = {
                ch.values: i for i, ch in enumerate(self.irr(S)) if ch.degree == 1
            }
            self._linear_lookup[S.elems] = hit
        return hit

    # -- restriction decomposition -----------------------------------------

    def inner_raw(self, cc: ConjClasses, va: Sequence[CycInt], vb: Sequence[CycInt]) -> int:
        """[a, b] on the subgroup with classes cc, given raw value tuples.

        Products are accumulated with exponents folded mod n and the whole
        sum is reduced mod Phi_n once at the end."""
        order = len(cc.owner.elems)
        inv = cc.inverse_class
        sizes = cc.sizes
        if self._scalar_values:
            tot = 0
            for c in range(len(sizes)):
                tot += sizes[c] * va[c].coeffs[0] * vb[inv[c]].coeffs[0]
            q, r = divmod(tot, order)
            if r:
                raise NotDivisible(f"inner product sum {tot} not divisible by {order}")
            return q
        n = self.conductor
        acc = [0] * n
        for c in range(len(sizes)):
            bcoeffs = vb[inv[c]].coeffs
            s = sizes[c]
            for i, ai in enumerate(va[c].coeffs):
                if ai:
                    sai = s * ai
                    for j, bj in enumerate(bcoeffs):
                        if bj:
                            k = i + j
                            if k >= n:
                                k -= n
                            acc[k] += sai * bj
        return as_integer(exact_div_int(CycInt(n, acc), order))

    def restriction_edges(self, K: Subgroup, H: Subgroup) -> tuple:
        """Pairs (i, j) with psi_i a constituent of chi_j restricted to K,
        for K a proper subgroup of H."""
        key = (K.elems, H.elems)
        hit = self._edges.get(key)
        if hit is not None:
            return hit
        irrK = self.irr(K)
        irrH = self.irr(H)
        ccK = self.classes(K)
        ccH = self.classes(H)
        index = len(H.elems) // len(K.elems)
        lookup = self.linear_lookup(K)
        class_map = tuple(ccH.class_of[r] for r in ccK.reps)
        edges = []
        for j, chi in enumerate(irrH):
            rvals = tuple(chi.values[c] for c in class_map)
            if chi.degree == 1:
                edges.append((lookup[rvals], j))
                continue
            remaining = chi.degree
            for i, psi in enumerate(irrK):
                if psi.degree > chi.degree or psi.degree * index < chi.degree:
                    continue
                m = self.inner_raw(ccK, rvals, psi.values)
                if m:
                    edges.append((i, j))
                    remaining -= m * psi.degree
                    if remaining == 0:
                        break
            if remaining:
                raise IncompleteIrr(
                    f"restriction of a degree-{chi.degree} character did not decompose"
                )
        hit = tuple(edges)
        self._edges[key] = hit
        return hit


# -- spec operations -----------------------------------------------------------


def _linear_characters(ctx: CharContext, H: Subgroup) -> tuple:
    """All |H/H'| degree-1 characters of H, via the abelianization."""
    n = ctx.conductor
    Hp = derived_subgroup(H)
    Q, proj = quotient(H, Hp)
    dec = abelian_decomposition(Q)
    cc = ctx.classes(H)
    zpows = cyc.zeta_table(n)
    steps = []
    for d in dec.factors:
        assert n % d == 0  # element orders divide the global conductor
        steps.append(n // d)
    rep_logs = [dec.dlog[proj[r]] for r in cc.reps]

    tuples = [()]
    for d in dec.factors:
        tuples = [t + (k,) for t in tuples for k in range(d)]

    out = []
    for t in tuples:
        values = []
        for logs in rep_logs:
            ang = 0
            for ti, ei, si in zip(t, logs, steps):
                ang += ti * ei * si
            values.append(zpows[ang % n])
        out.append(ClassFunction(H, cc, values))
    assert len({ch.values for ch in out}) == len(out)  # pairwise distinct
    return tuple(out)


def linear_characters(H: Subgroup) -> tuple:
    return get_context(H.ambient).linear(H)


def _compute_irr(ctx: CharContext, H: Subgroup, lattice: Optional[Sequence[Subgroup]] = None) -> tuple:
    cc = ctx.classes(H)
    order = len(H.elems)
    if cc.count == order:  # abelian
        chars = list(ctx.linear(H))
    else:
        if lattice is None:
            lattice = ctx.lattice()
        bound = isqrt(order)
        cands = [
            K
            for K in lattice
            if K.mask | H.mask == H.mask and order // len(K.elems) <= bound
        ]
        cands.sort(key=lambda K: -len(K.elems))
        seen = set()
        found: dict = {}
        total = 0
        for K in cands:
            for lam in ctx.linear(K):
                theta = induce(lam, H)
                if theta.values in seen:
                    continue
                seen.add(theta.values)
                if inner_product(theta, theta) == 1:
                    found[theta.values] = theta
                    total += theta.degree**2
            if total == order and len(found) == cc.count:
                break
        chars = list(found.values())
    chars.sort(key=ClassFunction.sort_key)
    if sum(ch.degree**2 for ch in chars) != order or len(chars) != cc.count:
        raise IncompleteIrr(
            f"monomial search found {len(chars)} characters with "
            f"sum(deg^2) = {sum(ch.degree ** 2 for ch in chars)} for |H| = {order}"
        )
    return tuple(chars)


def irr(H: Subgroup, lattice: Optional[Sequence[Subgroup]] = None) -> tuple:
    """The complete irreducible character set of H, canonically ordered
    (degree-major, then value-vector lexicographic)."""
    ctx = get_context(H.ambient)
    if lattice is not None:
        return _compute_irr(ctx, H, lattice)
    return ctx.irr(H)


def restrict(chi: ClassFunction, K: Subgroup) -> ClassFunction:
    H = chi.owner
    if not K.is_subset_of(H):
        raise NotASubgroup("restriction target is not a subgroup of the owner")
    ctx = get_context(H.ambient)
    ccK = ctx.classes(K)
    ccH = chi.classes
    values = tuple(chi.values[ccH.class_of[r]] for r in ccK.reps)
    return ClassFunction(K, ccK, values)


def induce(phi: ClassFunction, G_sub: Subgroup) -> ClassFunction:
    """Induced character phi^(G_sub): (1/|H|) sum over x of phi(x g x^-1),
    folded over each class of G_sub (the inner sum is |C(g)| times the sum of
    phi over the class members lying in H)."""
    H = phi.owner
    if not H.is_subset_of(G_sub):
        raise NotASubgroup("induction source is not a subgroup of the target")
    ctx = get_context(H.ambient)
    ccG = ctx.classes(G_sub)
    ccH = phi.classes
    n = ctx.conductor
    deg_len = cyc.euler_phi(n)
    hsize = len(H.elems)
    gsize = len(G_sub.elems)
    hvals = phi.values
    class_of_H = ccH.class_of
    values = []
    for ci in range(ccG.count):
        acc = [0] * deg_len
        for y in ccG.members[ci]:
            c = class_of_H[y]
            if c >= 0:
                for k, vk in enumerate(hvals[c].coeffs):
                    if vk:
                        acc[k] += vk
        weight = gsize // ccG.sizes[ci]  # centralizer order
        values.append(exact_div_int(CycInt(n, [a * weight for a in acc], _raw=True), hsize))
    out = ClassFunction(G_sub, ccG, values)
    assert out.degree == (gsize // hsize) * phi.degree
    return out


def conjugate_character(phi: ClassFunction, x: int) -> ClassFunction:
    """The character g -> phi(x^-1 g x) on the conjugated subgroup x H x^-1."""
    G = phi.owner.ambient
    ctx = get_context(G)
    Hx = conjugate_subgroup(phi.owner, x)
    ccHx = ctx.classes(Hx)
    xinv = G.inverse[x]
    values = tuple(
        phi.values[phi.classes.class_of[G.conj(r, xinv)]] for r in ccHx.reps
    )
    return ClassFunction(Hx, ccHx, values)


def inner_product(chi: ClassFunction, psi: ClassFunction) -> int:
    """[chi, psi] = (1/|H|) sum of size(c) * chi(c) * psi(c^-1)."""
    if chi.owner.ambient is not psi.owner.ambient or chi.owner.elems != psi.owner.elems:
        raise InputError("inner product requires characters of the same subgroup")
    ctx = get_context(chi.owner.ambient)
    return ctx.inner_raw(chi.classes, chi.values, psi.values)


def decompose(theta: ClassFunction, basis: Sequence[ClassFunction]) -> tuple:
    """Multiplicities of theta against a complete irreducible basis; the
    reconstruction is checked exactly."""
    mults = tuple(inner_product(theta, ch) for ch in basis)
    n = theta.values[0].n
    for c in range(theta.classes.count):
        acc = [0] * cyc.euler_phi(n)
        for m, ch in zip(mults, basis):
            if m:
                for k, vk in enumerate(ch.values[c].coeffs):
                    acc[k] += m * vk
        if CycInt(n, acc, _raw=True) != theta.values[c]:
            raise IncompleteIrr("decomposition does not reproduce the class function")
    return mults


def mackey_check(H: Subgroup, K: Subgroup, alpha: ClassFunction, beta: ClassFunction) -> tuple:
    """Both sides of the double-coset identity
    [(alpha^G)_K, beta] = sum over x in [H\\G/K] of [((x^-1 conj) alpha
    restricted to x^-1Hx intersect K) induced to K, beta]."""
    G = H.ambient
    ctx = get_context(G)
    assert alpha.owner.elems == H.elems and beta.owner.elems == K.elems
    lhs = inner_product(restrict(induce(alpha, ctx.whole), K), beta)
    rhs = 0
    for x in double_cosets(G, H, K):
        ax = conjugate_character(alpha, G.inverse[x])
        M = intersect_all([ax.owner, K])
        rhs += inner_product(induce(restrict(ax, M), K), beta)
    return lhs, rhs


def frobenius_check(H: Subgroup, phi: ClassFunction, chi: ClassFunction) -> tuple:
    """Both sides of [phi^G, chi]_G = [phi, chi_H]_H."""
    G = H.ambient
    ctx = get_context(G)
    assert phi.owner.elems == H.elems
    lhs = inner_product(induce(phi, ctx.whole), chi)
    rhs = inner_product(phi, restrict(chi, H))
    return lhs, rhs
