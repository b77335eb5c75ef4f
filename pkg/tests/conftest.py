import pytest

from lattkit.lattice import build_lattice, LatticeCongruence, mask_of


def lat(labels, covers):
    return build_lattice(labels.split(), [tuple(c.split("-")) for c in covers.split()])


def cong(L, *blocks):
    """Congruence from blocks written as label strings; singletons may be omitted."""
    block_of = list(range(L.n))
    for b in blocks:
        members = [L.index(x) for x in b.split()]
        for x in members:
            block_of[x] = L.n + members[0]
    return LatticeCongruence.from_labels(L, block_of)


def elems(L, labels):
    return mask_of(L.index(x) for x in labels.split())


def names(L, mask):
    return set(L.names(mask))


@pytest.fixture
def b2_plus_top():
    """The four-element Boolean lattice with a new top adjoined."""
    return lat("0 a b c 1", "0-a 0-b a-c b-c c-1")
