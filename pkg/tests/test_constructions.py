import itertools
import random

import pytest

from topolinear.budget import BudgetExceeded
from topolinear.codes import is_mds
from topolinear.constructions import (CompositionSpec, IteratedGroupSpec,
                                      QuadraticSpec, composition_code,
                                      composition_witness,
                                      condition_c_solutions, element_inverse,
                                      fold, iterated_code, quadratic_code,
                                      quadratic_witness,
                                      regular_group_iterated,
                                      sigma_compatibility_failure,
                                      shift_isotopism, solve_condition_c,
                                      star_product)
from topolinear.isometry import (check_regular_condition, equivalent_codes,
                                 is_isotopically_transitive, is_topolinear)
from topolinear.loops import make_cp, make_dihedral
from topolinear.perms import random_permutation


# ---------------------------------------------------------------------------
# star machinery

def test_folds_multiply_under_star():
    L = make_dihedral(3)
    rng = random.Random(0)
    for _ in range(30):
        xs = tuple(rng.randrange(6) for _ in range(4))
        ys = tuple(rng.randrange(6) for _ in range(4))
        prod = star_product(L, xs, ys)
        assert fold(L, prod) == L.table[fold(L, xs)][fold(L, ys)]


def test_shift_isotopism_preserves_fold_fibers():
    L = make_dihedral(3)
    M = iterated_code(IteratedGroupSpec(L, 3))
    for b in list(M.words)[:8]:
        g = shift_isotopism(L, b)
        assert g.apply_word(b) == (L.identity,) * 3
        assert g.is_automorphism_of(M)


def test_iterated_code_is_topolinear_by_its_regular_group():
    spec = IteratedGroupSpec(make_dihedral(3), 3)
    M = iterated_code(spec)
    assert is_mds(M) and len(M) == 36
    group = regular_group_iterated(spec, M)
    assert len(set(group)) == len(M)
    verdict = check_regular_condition(M, group, 0)
    assert verdict.ok
    assert is_topolinear(M).status is True


def test_iterated_rejects_nonassociative_loops():
    with pytest.raises(ValueError):
        IteratedGroupSpec(make_cp(3), 3)


# ---------------------------------------------------------------------------
# the block equation

def test_condition_c_solutions_count_and_replay():
    L = make_dihedral(3)
    # left translations compose with automorphisms, so they are compatible
    sigma = tuple(L.table[2][z] for z in range(6))
    assert sigma_compatibility_failure(L, sigma) is None
    m = 2
    sols = list(condition_c_solutions(L, m, sigma))
    assert len(sols) == 6 ** (m - 1)
    assert len(set(sols)) == len(sols)
    for taus in sols:
        for zs in itertools.product(range(6), repeat=m):
            image = tuple(t[z] for t, z in zip(taus, zs))
            assert fold(L, image) == sigma[fold(L, zs)]


def test_condition_c_rejects_incompatible_sigmas():
    L = make_dihedral(3)
    rng = random.Random(4)
    rejected = 0
    for _ in range(20):
        sigma = random_permutation(6, rng)
        if sigma_compatibility_failure(L, sigma) is not None:
            rejected += 1
            with pytest.raises(ValueError):
                solve_condition_c(L, 2, sigma)
    assert rejected > 0


def test_condition_c_tail_controls_the_solution():
    L = make_dihedral(3)
    sigma = tuple(L.table[1][z] for z in range(6))
    a = solve_condition_c(L, 3, sigma, tail=(0, 0))
    b = solve_condition_c(L, 3, sigma, tail=(2, 5))
    assert a != b
    # the tail really is the image of the identity at positions 2..m
    e = L.identity
    assert (b[1][e], b[2][e]) == (2, 5)


# ---------------------------------------------------------------------------
# composition codes

def test_composition_code_sizes_and_mds():
    for inner, n in [((1, 1), 3), ((1, 2), 4), ((2, 2), 5)]:
        M = composition_code(CompositionSpec("cp", 3, inner))
        assert M.n == n and len(M) == 6 ** (n - 1)
    assert is_mds(composition_code(CompositionSpec("cp", 3, (1, 2))))


def test_composition_witnesses_flatten_every_word():
    spec = CompositionSpec("cp", 3, (1, 1))
    M = composition_code(spec)
    base = (0,) * M.n
    seen = set()
    for w in M.words:
        g = composition_witness(spec, w)
        assert g.apply_word(w) == base
        assert g.is_automorphism_of(M)
        seen.add(g.inverse())
    # the inverses hit every word from the base, one each
    assert len(seen) == len(M)
    assert {g.apply_word(base) for g in seen} == set(M.words)


def test_composition_zpz2_outer():
    M = composition_code(CompositionSpec("zpz2", 3, (2,)))
    assert M.n == 3 and is_mds(M)
    assert is_isotopically_transitive(M).transitive


def test_distinct_partitions_of_3_give_inequivalent_codes():
    codes = [composition_code(CompositionSpec("zpz2", 3, inner))
             for inner in ((3,), (2, 1), (1, 1, 1))]
    for a, b in itertools.combinations(codes, 2):
        assert equivalent_codes(a, b) is None


def test_partitions_of_4_exceed_the_equivalence_budget():
    a = composition_code(CompositionSpec("zpz2", 3, (4,)))
    b = composition_code(CompositionSpec("zpz2", 3, (2, 2)))
    with pytest.raises(BudgetExceeded):
        equivalent_codes(a, b)


# ---------------------------------------------------------------------------
# quadratic codes

@pytest.mark.parametrize("n,pairs", [(3, []), (3, [(0, 1)]),
                                     (4, [(0, 1)]), (4, [(0, 1), (2, 3)])])
def test_quadratic_codes_verify_end_to_end(n, pairs):
    alpha = [[0] * n for _ in range(n)]
    for i, j in pairs:
        alpha[i][j] = 1
    spec = QuadraticSpec.make(2, 1, n, alpha=alpha)
    M = quadratic_code(spec)
    assert is_mds(M)
    rng = random.Random(n)
    sample = [M.words[rng.randrange(len(M))] for _ in range(10)]
    base = (0,) * n
    for w in sample:
        g = quadratic_witness(spec, w)
        assert g.apply_word(w) == base
        assert g.is_automorphism_of(M)
    assert is_topolinear(M).status is True


def test_quadratic_beta_tables_are_respected():
    beta = [[0, 1], [0, 0], [0, 1]]
    spec = QuadraticSpec.make(2, 1, 3, beta=beta)
    M = quadratic_code(spec)
    assert is_mds(M)
    plain = quadratic_code(QuadraticSpec.make(2, 1, 3))
    assert M.words != plain.words
    assert is_topolinear(M).status is True


def test_element_inverse_is_two_sided_in_groups():
    L = make_dihedral(5)
    for x in range(L.q):
        w = element_inverse(L, x)
        assert L.table[x][w] == L.identity == L.table[w][x]
