import pytest

from charposet import families
from charposet.characters import get_context


@pytest.fixture(scope="session")
def q8():
    return families.quaternion(8)


@pytest.fixture(scope="session")
def d8():
    return families.dihedral(8)


@pytest.fixture(scope="session")
def d16():
    return families.dihedral(16)


@pytest.fixture(scope="session")
def c4():
    return families.cyclic(2, 2)


@pytest.fixture(scope="session")
def c8():
    return families.cyclic(2, 3)


@pytest.fixture(scope="session")
def c16():
    return families.cyclic(2, 4)


@pytest.fixture(scope="session")
def klein():
    return families.elem_abelian(2, 2)


@pytest.fixture(scope="session")
def e222():
    return families.elem_abelian(2, 3)


@pytest.fixture(scope="session")
def c4xc2():
    return families.abelian_product([4, 2])


def ctx_of(G):
    return get_context(G)


# -- independent oracles used across test modules ------------------------------


def brute_commuting(table, elems):
    """Elements of the subset commuting with the whole subset."""
    return [z for z in elems if all(table[z][h] == table[h][z] for h in elems)]


def brute_classes(G, elems):
    """Conjugation-orbit partition computed directly from the table."""
    table, inv = G.table, G.inverse
    left = set(elems)
    classes = []
    while left:
        x = min(left)
        orbit = {table[table[h][x]][inv[h]] for h in elems}
        classes.append(tuple(sorted(orbit)))
        left -= orbit
    return classes


def naive_induced_value(target, source, phi, g):
    """(1/|source|) sum over all x in target of phi(x g x^-1), the unfolded
    induction formula."""
    from charposet import cyclotomic as cyc

    amb = target.ambient
    total = cyc.zero(amb.exponent)
    table, inv = amb.table, amb.inverse
    for x in target.elems:
        y = table[table[x][g]][inv[x]]
        if source.contains(y):
            total = total + phi.value_at(y)
    return cyc.exact_div_int(total, len(source.elems))
