import itertools
import random

import pytest

from topolinear.codes import (MdsCode, NAryQuasigroup, graph_of, is_mds,
                              pair_code, parity_code, quasigroup_of, subcode)
from topolinear.loops import random_latin_square


def lines(q, n):
    """Every maximal coordinate line of the Hamming space, as a frozen set."""
    for free in range(n):
        for rest in itertools.product(range(q), repeat=n - 1):
            line = []
            for s in range(q):
                w = rest[:free] + (s,) + rest[free:]
                line.append(w)
            yield frozenset(line)


def brute_mds(words, q, n):
    """Independent check: q^(n-1) words, exactly one per line."""
    ws = set(words)
    if len(ws) != q ** (n - 1):
        return False
    return all(len(ws & line) == 1 for line in lines(q, n))


@pytest.mark.parametrize("q,n", [(2, 3), (3, 3), (4, 3), (3, 4)])
def test_parity_code_matches_brute_force_oracle(q, n):
    M = parity_code(q, n)
    assert len(M) == q ** (n - 1)
    assert bool(is_mds(M)) == brute_mds(M.words, q, n) == True


def test_is_mds_rejects_what_the_oracle_rejects():
    bad = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)]  # line 11* hit twice
    v = is_mds(MdsCode(2, 3, bad))
    assert not v and not brute_mds(bad, 2, 3)
    assert v.reason


def test_words_are_canonically_sorted():
    M = MdsCode(2, 2, [(1, 1), (0, 0)])
    assert M.words == ((0, 0), (1, 1))
    assert MdsCode(2, 2, [(0, 0), (1, 1)]).words == M.words


def test_symbol_validation():
    with pytest.raises(ValueError):
        MdsCode(2, 2, [(0, 2)])
    with pytest.raises(ValueError):
        MdsCode(2, 2, [(0, 0, 0)])


def test_graph_round_trip():
    rng = random.Random(3)
    f = NAryQuasigroup(random_latin_square(4, rng).table)
    M = graph_of(f)
    assert is_mds(M)
    g = quasigroup_of(M, M.n - 1)
    assert g.table.tolist() == f.table.tolist()


def test_quasigroup_of_other_coordinate():
    M = parity_code(3, 3)
    g = quasigroup_of(M, 0)
    # reading coordinate 0 off the parity relation: x0 = -(x1 + x2) mod 3
    for x1 in range(3):
        for x2 in range(3):
            assert g.table[x1][x2] == (-(x1 + x2)) % 3


def test_pair_code_size_and_mds():
    add4 = NAryQuasigroup([[(a + b) % 4 for b in range(4)] for a in range(4)])
    M = pair_code(add4, add4)
    assert M.n == 4 and len(M) == 4 ** 3
    assert is_mds(M)


def test_subcode_fixes_coordinates():
    M = parity_code(3, 4)
    R = subcode(M, {0: 0})
    assert R.n == 3 and len(R) == 9
    assert all((0,) + w in M for w in R.words)
    assert is_mds(R)


def test_single_table_flip_breaks_mds():
    rng = random.Random(9)
    sq = random_latin_square(5, rng)
    table = [list(row) for row in sq.table]
    M = graph_of(NAryQuasigroup(table))
    assert is_mds(M)
    i, j = rng.randrange(5), rng.randrange(5)
    new = (table[i][j] + 1) % 5
    words = [w for w in M.words if w[:2] != (i, j)] + [(i, j, new)]
    assert not is_mds(MdsCode(5, 3, words))
