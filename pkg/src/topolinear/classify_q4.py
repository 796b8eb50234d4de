"""Transitivity classification over the four-symbol alphabet.

Symbols are read as bit pairs u = x + 2y. A code is in standard form when its
words satisfy two parity equations: the x-bits sum to zero and the y-bits sum
to a Boolean function r of the x-bits. Codes isotopic to a standard form are
called semilinear; transitivity is decided by the degree of r after reducing
modulo the x-parity equation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .codes import MdsCode, NAryQuasigroup, pair_code, subcode
from .isometry import (Isotopism, equivalent_codes,
                       is_isotopically_transitive)

X_BIT = (0, 1, 0, 1)
Y_BIT = (0, 0, 1, 1)

# the six ways to split the four symbols into a labeled pair of pairs
_BALANCED_LABELINGS = tuple(
    labels for labels in itertools.product((0, 1), repeat=4) if sum(labels) == 2
)


# ---------------------------------------------------------------------------
# Boolean functions and normal forms

def form_function(monomials):
    """Boolean function x -> xor of the given monomials, each a tuple of
    0-based variable indices. () is the constant-zero function."""
    mono = tuple(tuple(m) for m in monomials)

    def r(xs):
        v = 0
        for m in mono:
            t = 1
            for i in m:
                t &= xs[i]
            v ^= t
        return v

    return r


def truth_table(r, n: int) -> tuple[int, ...]:
    """Truth bits indexed by variable mask (bit i of the index = value of
    variable i)."""
    return tuple(
        r(tuple((mask >> i) & 1 for i in range(n))) & 1 for mask in range(1 << n)
    )


def anf(truth) -> frozenset[int]:
    """Moebius transform of a truth table of length 2^m; returns the set of
    monomials present, each encoded as a variable mask."""
    c = list(truth)
    m = len(c).bit_length() - 1
    if len(c) != 1 << m:
        raise ValueError("truth table length must be a power of two")
    for i in range(m):
        step = 1 << i
        for a in range(len(c)):
            if a & step:
                c[a] ^= c[a ^ step]
    return frozenset(a for a in range(len(c)) if c[a] & 1)


def anf_degree(monomials) -> int:
    return max((bin(m).count("1") for m in monomials), default=0)


def reduced_truth(r, n: int) -> tuple[int, ...]:
    """Restrict r to the even-weight slice: substitute x_n = x_1 + .. +
    x_{n-1} and tabulate over the n-1 free variables."""
    out = []
    for mask in range(1 << (n - 1)):
        xs = [(mask >> i) & 1 for i in range(n - 1)]
        xs.append(sum(xs) % 2)
        out.append(r(tuple(xs)) & 1)
    return tuple(out)


# ---------------------------------------------------------------------------
# standard forms and the pair-code obstruction

def standard_semilinear_code(n: int, r, provenance=None) -> MdsCode:
    """Words u_i = x_i + 2 y_i with sum of x zero and sum of y equal to
    r(x_1..x_n); 4^(n-1) words. `r` is a Boolean callable on n bits or a
    collection of monomials for form_function."""
    if n < 2:
        raise ValueError("need length at least 2")
    if not callable(r):
        r = form_function(r)
    words = []
    for xs in itertools.product((0, 1), repeat=n - 1):
        full = xs + (sum(xs) % 2,)
        target = r(full) & 1
        for yhead in itertools.product((0, 1), repeat=n - 1):
            ys = yhead + ((sum(yhead) + target) % 2,)
            words.append(tuple(x + 2 * y for x, y in zip(full, ys)))
    prov = provenance or {
        "construction": "semilinear",
        "n": n,
        "r_truth": list(truth_table(r, n)),
    }
    return MdsCode(4, n, words, provenance=prov, check_symbols=False)


def code_h(provenance=None) -> MdsCode:
    """Length-4 code x1 * x2 = x3 <> x4 pairing two loops that share the
    identity 0 but have different squares: * is addition mod 4 (order-2
    element 2) and <> is its conjugate by the transposition of 1 and 2
    (order-2 element 1).

    This code has no standard form, yet it is isotopically transitive: its
    full symmetry group has order 64 and acts regularly, so the degree
    shortcut of `classify` does not extend to codes without a standard form.
    """
    star = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    sigma = (0, 2, 1, 3)
    diamond = [[sigma[(sigma[a] + sigma[b]) % 4] for b in range(4)] for a in range(4)]
    prov = provenance or {"construction": "pair", "left": star, "right": diamond}
    return pair_code(NAryQuasigroup(star), NAryQuasigroup(diamond), provenance=prov)


# ---------------------------------------------------------------------------
# semilinearity search

@dataclass(frozen=True)
class SemilinearForm:
    """Witness relabeling onto a standard form, with r reduced to the n-1
    free variables."""
    witness: Isotopism
    monomials: frozenset[int]
    degree: int


def _x_labelings(M: MdsCode):
    """All joint balanced bit labelings of the coordinates under which every
    word has x-parity zero. The last coordinate is forced word by word."""
    words = M.words
    n = M.n
    found = []

    def rec(i, labels, parities):
        if i == n - 1:
            forced = [-1, -1, -1, -1]
            for w, par in zip(words, parities):
                u = w[-1]
                if forced[u] == -1:
                    forced[u] = par
                elif forced[u] != par:
                    return
            if sum(forced) != 2 or -1 in forced:
                return
            found.append(labels + (tuple(forced),))
            return
        for lab in _BALANCED_LABELINGS:
            rec(i + 1, labels + (lab,),
                tuple((p ^ lab[w[i]]) for p, w in zip(parities, words)))

    rec(0, (), (0,) * len(words))
    return found


def semilinearity_test(M: MdsCode) -> SemilinearForm | None:
    """Search per-coordinate relabelings carrying M onto a standard form and
    return a minimum-degree one, or None when no relabeling works.

    Stage 1 assigns each coordinate one of the six balanced bit labelings so
    that every word gets x-parity 0. Stage 2 checks that the y-parity is
    constant on each x-pattern under an arbitrary bit labeling of the pair
    classes; flipping a class label toggles that constant on a whole pattern
    at once, so one labeling per partition decides, and the change in r stays
    affine, which leaves every degree-2-and-up term alone.
    """
    if M.q != 4:
        raise ValueError("classification is specific to alphabet size 4")
    n = M.n
    best: SemilinearForm | None = None
    for labels in _x_labelings(M):
        taus = []
        for lab in labels:
            pairs = {0: [u for u in range(4) if lab[u] == 0],
                     1: [u for u in range(4) if lab[u] == 1]}
            tau = [0] * 4
            for x, syms in pairs.items():
                tau[syms[0]] = x
                tau[syms[1]] = x + 2
            taus.append(tuple(tau))
        iso = Isotopism(tuple(taus))
        per_pattern: dict[tuple, int] = {}
        ok = True
        for w in M.words:
            img = tuple(taus[i][w[i]] for i in range(n))
            pattern = tuple(X_BIT[u] for u in img)
            parity = sum(Y_BIT[u] for u in img) % 2
            prev = per_pattern.setdefault(pattern, parity)
            if prev != parity:
                ok = False
                break
        if not ok:
            continue
        reduced = tuple(
            per_pattern[tuple((mask >> i) & 1 for i in range(n - 1))
                        + (bin(mask).count("1") % 2,)]
            for mask in range(1 << (n - 1))
        )
        monos = anf(reduced)
        degree = anf_degree(monos)
        if best is None or degree < best.degree:
            best = SemilinearForm(iso, monos, degree)
            if degree <= 1:
                break
    return best


# ---------------------------------------------------------------------------
# the classification verdict

@dataclass
class Q4Verdict:
    semilinear: bool
    degree: int | None
    transitive: bool
    evidence: object = None

    def __bool__(self):
        return self.transitive


def h_subcode_witness(M: MdsCode):
    """Length-4 subcode of M isotopic to the pair code, as a pair
    (fixed coordinates, isometry), or None. Evidence that can accompany a
    non-semilinear verdict; every code without a standard form holds such a
    subcode."""
    H = code_h()
    if M.n == 4:
        w = equivalent_codes(M, H)
        return ({}, w) if w is not None else None
    for coords in itertools.combinations(range(M.n), M.n - 4):
        for vals in itertools.product(range(4), repeat=len(coords)):
            fixed = dict(zip(coords, vals))
            w = equivalent_codes(subcode(M, fixed), H)
            if w is not None:
                return (fixed, w)
    return None


def classify(M: MdsCode, locate_pair_subcode: bool = False) -> Q4Verdict:
    """Transitivity verdict for a code over the four-symbol alphabet.

    Semilinear codes are decided by the degree of the reduced form: degree at
    most 2 means transitive (the standard form carries explicit witnesses),
    degree 3 or more embeds the cubic code, whose transitivity fails. No
    degree shortcut exists for codes without a standard form; code_h() is a
    transitive one, so those fall back to the pinned witness search.
    Optionally attaches a length-4 subcode isotopic to the pair code as
    evidence for a non-semilinear verdict."""
    form = semilinearity_test(M)
    if form is not None:
        return Q4Verdict(True, form.degree, form.degree <= 2, form)
    searched = is_isotopically_transitive(M, method="pinned")
    evidence = h_subcode_witness(M) if locate_pair_subcode else None
    return Q4Verdict(False, None, searched.transitive, evidence)


def all_latin_squares(n: int):
    """Every n x n Latin square as a tuple of rows (576 for n = 4)."""
    perms = list(itertools.permutations(range(n)))
    out = []

    def rec(rows):
        if len(rows) == n:
            out.append(tuple(rows))
            return
        for p in perms:
            if all(p[j] != r[j] for r in rows for j in range(n)):
                rec(rows + [p])

    rec([])
    return out
