"""Constructions of isotopically transitive codes with explicit witnesses.

Three families:

  * iterated group codes: words whose left group product folds to the
    identity, carrying a sharply transitive group of conjugation-twisted
    translations (the star group);
  * composition codes: an outer order-2p operation fed by iterated dihedral
    products over disjoint blocks, with witnesses assembled block by block;
  * quadratic codes: pairs of linear words over a finite field coupled by a
    quadratic form, with two-stage translation witnesses.

Every witness here is constructive: apply it to its word and you land on the
all-zero word; all of them are verified symmetries in the tests.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .alphabet import Alphabet, pair_join, pair_split
from .codes import MdsCode
from .fields import field_make
from .isometry import Isotopism, chase_to_zero_cp, ic_p_generators
from .loops import Loop, is_associative, make_cp, make_dihedral, make_zp_z2
from .perms import compose as compose_perm, identity_perm, invert


def element_inverse(loop: Loop, x: int) -> int:
    """Group inverse: the w with x * w = identity."""
    return invert(loop.table[x])[loop.identity]


def fold(loop: Loop, zs) -> int:
    """Left-to-right product, starting at the identity; fold(()) = identity."""
    acc = loop.identity
    t = loop.table
    for z in zs:
        acc = t[acc][z]
    return acc


# ---------------------------------------------------------------------------
# star machinery over an associative loop

def star_product(loop: Loop, xs, ys) -> tuple[int, ...]:
    """Componentwise twisted product: component k is P^-1 x_k P y_k where P
    runs over the prefix products y_1 .. y_(k-1). Folds multiply:
    fold(x star y) = fold(x) fold(y)."""
    t = loop.table
    out = []
    pref = loop.identity
    for xk, yk in zip(xs, ys):
        pinv = element_inverse(loop, pref)
        out.append(t[t[t[pinv][xk]][pref]][yk])
        pref = t[pref][yk]
    return tuple(out)


def star_isotopism(loop: Loop, ys) -> Isotopism:
    """x -> x star y as a coordinatewise map; sends the all-identity word to y."""
    t = loop.table
    q = loop.q
    taus = []
    pref = loop.identity
    for yk in ys:
        pinv = element_inverse(loop, pref)
        taus.append(tuple(t[t[t[pinv][v]][pref]][yk] for v in range(q)))
        pref = t[pref][yk]
    return Isotopism(taus)


def star_inverse(loop: Loop, bs) -> tuple[int, ...]:
    """The c with b star c = all-identity word."""
    t = loop.table
    cs = []
    pref = loop.identity
    for bk in bs:
        pinv = element_inverse(loop, pref)
        ck = t[t[pinv][element_inverse(loop, bk)]][pref]
        cs.append(ck)
        pref = t[pref][ck]
    return tuple(cs)


def shift_isotopism(loop: Loop, bs) -> Isotopism:
    """Star translation carrying b to the all-identity word; because folds
    multiply and fold(c) completes fold(b) to the identity, it preserves every
    fold fiber pointwise whenever fold(b) is the identity."""
    return star_isotopism(loop, star_inverse(loop, bs))


@dataclass(frozen=True)
class IteratedGroupSpec:
    loop: Loop
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("length must be at least 2")
        if not is_associative(self.loop):
            raise ValueError("iterated codes need an associative operation")


def iterated_code(spec: IteratedGroupSpec) -> MdsCode:
    """Words whose full left product is the identity."""
    loop, n = spec.loop, spec.n
    words = []
    for xs in itertools.product(range(loop.q), repeat=n - 1):
        words.append(xs + (element_inverse(loop, fold(loop, xs)),))
    prov = {"construction": "iterated", "table": [list(r) for r in loop.table],
            "identity": loop.identity, "n": n}
    return MdsCode(loop.q, n, words, alphabet=loop.alphabet,
                   provenance=prov, check_symbols=False)


def regular_group_iterated(spec: IteratedGroupSpec, M: MdsCode | None = None):
    """The star translations by all codewords; a sharply transitive group."""
    if M is None:
        M = iterated_code(spec)
    return [star_isotopism(spec.loop, w) for w in M.words]


# ---------------------------------------------------------------------------
# the fold-equivariance equation on a block

def sigma_compatibility_failure(loop: Loop, sigma):
    """First (x, y) with sigma(xy) != sigma(x) sigma(e)^-1 sigma(y), or None.

    That identity on sigma alone decides solvability of the block equation
    below: it says sigma is a left translation composed with an automorphism.
    """
    t = loop.table
    mid = element_inverse(loop, sigma[loop.identity])
    for x in range(loop.q):
        left = t[sigma[x]][mid]
        row = t[x]
        for y in range(loop.q):
            if sigma[row[y]] != t[left][sigma[y]]:
                return (x, y)
    return None


def solve_condition_c(loop: Loop, m: int, sigma, tail=None, verify: bool = True):
    """Coordinate maps (tau_1..tau_m) with fold(tau(z)) = sigma(fold(z)) for
    every z in Q^m.

    Solutions are parameterized completely by the images of the identity in
    positions 2..m (the tail): writing R_j for the suffix product
    u_(j+1) .. u_m, they are tau_1 = sigma(.) R_1^-1 and
    tau_j = R_(j-1) sigma(e)^-1 sigma(.) R_j^-1. The default tail is all
    identities. Raises ValueError when sigma fails the compatibility identity,
    in which case no solution exists for m >= 2.
    """
    q = loop.q
    sigma = tuple(int(v) for v in sigma)
    if sorted(sigma) != list(range(q)):
        raise ValueError("sigma must be a permutation of the symbols")
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return (sigma,)
    bad = sigma_compatibility_failure(loop, sigma)
    if bad is not None:
        raise ValueError(f"sigma is not fold-compatible at {bad}; no solution")
    e = loop.identity
    if tail is None:
        tail = (e,) * (m - 1)
    tail = tuple(int(v) for v in tail)
    if len(tail) != m - 1:
        raise ValueError("tail must list the identity images at positions 2..m")
    t = loop.table
    suffix = [e] * (m + 1)  # suffix[j] = u_(j+1) ... u_m, suffix[m] = e
    for j in range(m - 1, 0, -1):
        suffix[j] = t[tail[j - 1]][suffix[j + 1]]
    mid = element_inverse(loop, sigma[e])
    taus = [tuple(t[sigma[z]][element_inverse(loop, suffix[1])] for z in range(q))]
    for j in range(2, m + 1):
        head = suffix[j - 1]
        rinv = element_inverse(loop, suffix[j])
        taus.append(tuple(t[t[t[head][mid]][sigma[z]]][rinv] for z in range(q)))
    taus = tuple(taus)
    if verify:
        if q ** m <= 10000:
            space = itertools.product(range(q), repeat=m)
        else:
            rng = random.Random(q * m)
            space = (tuple(rng.randrange(q) for _ in range(m)) for _ in range(500))
        for zs in space:
            image = tuple(tau[z] for tau, z in zip(taus, zs))
            if fold(loop, image) != sigma[fold(loop, zs)]:
                raise AssertionError(f"solution check failed at {zs}")
    return taus


def condition_c_solutions(loop: Loop, m: int, sigma):
    """All solutions, one per tail in Q^(m-1)."""
    if m == 1:
        yield (tuple(int(v) for v in sigma),)
        return
    for tail in itertools.product(range(loop.q), repeat=m - 1):
        yield solve_condition_c(loop, m, sigma, tail=tail, verify=False)


# ---------------------------------------------------------------------------
# composition codes

@dataclass(frozen=True)
class CompositionSpec:
    """Outer operation ("cp" twisted loop or "zpz2" direct product) of order
    2p, fed by iterated dihedral folds over blocks of the listed arities."""

    outer: str
    p: int
    inner: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "inner", tuple(int(m) for m in self.inner))
        if self.outer not in ("cp", "zpz2"):
            raise ValueError("outer must be 'cp' or 'zpz2'")
        if self.p < 2:
            raise ValueError("p must be >= 2")
        if any(m < 1 for m in self.inner):
            raise ValueError("block arities must be positive")
        if self.outer == "cp" and len(self.inner) != 2:
            raise ValueError("the twisted loop is binary: exactly two blocks")
        if self.outer == "zpz2" and not self.inner:
            raise ValueError("at least one block")

    @property
    def q(self) -> int:
        return 2 * self.p

    @property
    def length(self) -> int:
        return 1 + sum(self.inner)


def _outer_loop(spec: CompositionSpec) -> Loop:
    return make_cp(spec.p) if spec.outer == "cp" else make_zp_z2(spec.p)


def _split_blocks(spec: CompositionSpec, word):
    blocks = []
    pos = 1
    for m in spec.inner:
        blocks.append(tuple(word[pos:pos + m]))
        pos += m
    return word[0], blocks


def composition_code(spec: CompositionSpec) -> MdsCode:
    """Coordinate 0 equals the outer operation applied to the dihedral folds
    of the blocks."""
    q = spec.q
    dih = make_dihedral(spec.p)
    outer = _outer_loop(spec)
    words = []
    for zs in itertools.product(range(q), repeat=sum(spec.inner)):
        vs = []
        pos = 0
        for m in spec.inner:
            vs.append(fold(dih, zs[pos:pos + m]))
            pos += m
        words.append((fold(outer, vs),) + zs)
    prov = {"construction": "composition", "outer": spec.outer, "p": spec.p,
            "inner": list(spec.inner)}
    return MdsCode(q, spec.length, words, alphabet=Alphabet.two_indexed(spec.p),
                   provenance=prov, check_symbols=False)


@lru_cache(maxsize=None)
def _solve_block(p: int, m: int, sigma: tuple) -> tuple:
    return solve_condition_c(make_dihedral(p), m, sigma)


def composition_witness(spec: CompositionSpec, word) -> Isotopism:
    """Symmetry of the composition code carrying the given word to all zeros.

    The outer symbols transform by a symmetry of the outer operation's graph
    killing (fold values, coordinate 0); each block then gets a solution of
    the fold-equivariance equation for its outer component, followed by a
    fiber-preserving star shift flattening the block itself.
    """
    dih = make_dihedral(spec.p)
    b0, blocks = _split_blocks(spec, word)
    vs = [fold(dih, b) for b in blocks]
    if spec.outer == "cp":
        g = chase_to_zero_cp(spec.p, (vs[0], vs[1], b0))
        sigma0 = g.taus[2]
        sigmas = [g.taus[0], g.taus[1]]
    else:
        zp = _outer_loop(spec)
        sigma0 = zp.col_perm(element_inverse(zp, b0))
        sigmas = [zp.col_perm(element_inverse(zp, v)) for v in vs]
    taus = [tuple(sigma0)]
    for m, sig, blk in zip(spec.inner, sigmas, blocks):
        block_taus = _solve_block(spec.p, m, tuple(sig))
        moved = tuple(t[z] for t, z in zip(block_taus, blk))
        shift = shift_isotopism(dih, moved)
        taus.extend(compose_perm(a, b) for a, b in zip(shift.taus, block_taus))
    out = Isotopism(taus)
    assert out.apply_word(word) == (0,) * spec.length
    return out


# ---------------------------------------------------------------------------
# quadratic codes over a field

@dataclass(frozen=True)
class QuadraticSpec:
    """Code over paired field symbols (x, y): the x-parts sum to zero and the
    y-parts sum to -r(x), r a quadratic form plus arbitrary per-coordinate
    functions vanishing at 0."""

    p: int
    k: int
    n: int
    alpha: tuple[tuple[int, ...], ...]
    beta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        q = self.p ** self.k
        if self.n < 2:
            raise ValueError("length must be at least 2")
        alpha = tuple(tuple(int(v) for v in row) for row in self.alpha)
        beta = tuple(tuple(int(v) for v in row) for row in self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if len(alpha) != self.n or any(len(r) != self.n for r in alpha):
            raise ValueError("alpha must be n x n")
        if len(beta) != self.n or any(len(b) != q for b in beta):
            raise ValueError("beta must give one length-q table per coordinate")
        if any(v < 0 or v >= q for row in alpha for v in row):
            raise ValueError("alpha entries must be field elements")
        if any(v < 0 or v >= q for row in beta for v in row):
            raise ValueError("beta values must be field elements")
        if any(b[0] != 0 for b in beta):
            raise ValueError("beta must vanish at 0")

    @staticmethod
    def make(p: int, k: int, n: int, alpha=None, beta=None) -> "QuadraticSpec":
        q = p ** k
        if alpha is None:
            alpha = [[0] * n for _ in range(n)]
        if beta is None:
            beta = [[0] * q for _ in range(n)]
        return QuadraticSpec(p, k, n, tuple(map(tuple, alpha)), tuple(map(tuple, beta)))

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def field(self):
        return field_make(self.p, self.k)


def quadratic_r(spec: QuadraticSpec, xs) -> int:
    F = spec.field
    acc = 0
    for i in range(spec.n):
        for j in range(spec.n):
            acc = F.a(acc, F.m(spec.alpha[i][j], F.m(xs[i], xs[j])))
        acc = F.a(acc, spec.beta[i][xs[i]])
    return acc


def quadratic_code(spec: QuadraticSpec) -> MdsCode:
    F = spec.field
    q, n = spec.q, spec.n
    words = []
    for xs in itertools.product(range(q), repeat=n - 1):
        tot = 0
        for v in xs:
            tot = F.a(tot, v)
        full_x = xs + (F.s(0, tot),)
        r = quadratic_r(spec, full_x)
        for ys in itertools.product(range(q), repeat=n - 1):
            tot = r
            for v in ys:
                tot = F.a(tot, v)
            full_y = ys + (F.s(0, tot),)
            words.append(tuple(pair_join(x, y, q) for x, y in zip(full_x, full_y)))
    prov = {"construction": "quadratic", "p": spec.p, "k": spec.k, "n": n,
            "alpha": [list(r_) for r_ in spec.alpha],
            "beta": [list(b) for b in spec.beta]}
    return MdsCode(q * q, n, words, alphabet=Alphabet.pair(q, q),
                   provenance=prov, check_symbols=False)


def quadratic_witness(spec: QuadraticSpec, word) -> Isotopism:
    """Two translation stages: shift the x-parts by the word's x-parts with a
    compensating y-shear keeping both defining sums invariant, then shift the
    y-parts by the image's y-parts."""
    F = spec.field
    q = spec.q
    axs = [pair_split(s, q)[0] for s in word]
    bys = [pair_split(s, q)[1] for s in word]
    taus = []
    for i in range(spec.n):
        ai = axs[i]
        row = 0
        col = 0
        for j in range(spec.n):
            row = F.a(row, F.m(spec.alpha[i][j], axs[j]))
            col = F.a(col, F.m(spec.alpha[j][i], axs[j]))
        shear = F.a(row, col)
        const = F.m(ai, row)
        beta_i = spec.beta[i]

        def stage1(x, y):
            xp = F.s(x, ai)
            yp = F.a(y, F.m(x, shear))
            yp = F.a(F.s(yp, beta_i[xp]), beta_i[x])
            return xp, F.s(yp, const)

        _, ci = stage1(ai, bys[i])
        perm = [0] * (q * q)
        for s in range(q * q):
            x, y = pair_split(s, q)
            xp, yp = stage1(x, y)
            perm[s] = pair_join(xp, F.s(yp, ci), q)
        taus.append(tuple(perm))
    out = Isotopism(taus)
    assert out.apply_word(word) == (0,) * spec.n
    return out


# ---------------------------------------------------------------------------
# rebuilding witness families from recorded provenance

def _loop_from(prov) -> Loop:
    return Loop(prov["table"], identity=prov.get("identity"), check=False)


def composition_spec_from(prov) -> CompositionSpec:
    return CompositionSpec(prov["outer"], int(prov["p"]), tuple(prov["inner"]))


def quadratic_spec_from(prov) -> QuadraticSpec:
    return QuadraticSpec(int(prov["p"]), int(prov["k"]), int(prov["n"]),
                         tuple(tuple(r) for r in prov["alpha"]),
                         tuple(tuple(b) for b in prov["beta"]))


def witnesses_from_provenance(M: MdsCode):
    """Map word -> symmetry carrying the all-zero word to it, or None when the
    recorded construction carries no such family."""
    prov = M.provenance or {}
    kind = prov.get("construction")
    if kind == "iterated":
        loop = _loop_from(prov)
        wits = {}
        adjust = None
        if loop.identity != 0:
            adjust = star_isotopism(loop, (0,) * M.n).inverse()
        for w in M.words:
            g = star_isotopism(loop, w)
            wits[w] = g.compose(adjust) if adjust is not None else g
        return wits
    if kind == "composition":
        spec = composition_spec_from(prov)
        try:
            return {w: composition_witness(spec, w).inverse() for w in M.words}
        except ValueError:
            return None
    if kind == "quadratic":
        spec = quadratic_spec_from(prov)
        return {w: quadratic_witness(spec, w).inverse() for w in M.words}
    return None


def generators_from_provenance(M: MdsCode):
    """Generators of a candidate sharply transitive symmetry group read off
    the recorded construction, or None."""
    prov = M.provenance or {}
    kind = prov.get("construction")
    if kind == "graph":
        if prov.get("loop") == "cp":
            return ic_p_generators(int(prov["p"]))
        table = prov.get("table")
        if table is None:
            return None
        loop = _loop_from(prov)
        if not is_associative(loop):
            return None
        # the graph is the length-3 iterated code with its last coordinate
        # relabeled by inversion; conjugate the star group through the relabel
        inv_perm = tuple(element_inverse(loop, v) for v in range(loop.q))
        ident = identity_perm(loop.q)
        relabel = Isotopism((ident, ident, inv_perm))
        spec = IteratedGroupSpec(loop, 3)
        gens = []
        for g in regular_group_iterated(spec):
            gens.append(relabel.compose(g).compose(relabel))
        return gens
    if kind == "iterated":
        loop = _loop_from(prov)
        return [star_isotopism(loop, w) for w in M.words]
    if kind in ("composition", "quadratic"):
        wits = witnesses_from_provenance(M)
        return None if wits is None else list(wits.values())
    if kind == "product":
        from .isometry import _provenance_generators

        lifted = []
        sides = []
        for key in ("a", "b"):
            info = prov[key]
            words = [tuple(w) for w in info["words"]]
            factor = MdsCode(int(info["q"]), M.n, words,
                             provenance=info["provenance"], check_symbols=False)
            gens = _provenance_generators(factor)
            if gens is None:
                return None
            sides.append((factor.q, gens))
        qa, gens_a = sides[0]
        qb, gens_b = sides[1]
        for g in gens_a:
            lifted.append(Isotopism(tuple(
                tuple(pair_join(t[a], b, qb) for a in range(qa) for b in range(qb))
                for t in g.taus)))
        for g in gens_b:
            lifted.append(Isotopism(tuple(
                tuple(pair_join(a, t[b], qb) for a in range(qa) for b in range(qb))
                for t in g.taus)))
        return lifted
    return None
