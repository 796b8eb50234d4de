"""Distance-2 MDS codes over dense integer alphabets, and n-ary quasigroups.

A code M over {0..q-1}^n is MDS here when |M| = q^(n-1) and every line (all n-1
coordinates fixed except one) carries exactly one codeword; equivalently the
pairwise Hamming distance is at least 2. Such codes are exactly the graphs of
(n-1)-ary quasigroups once an output coordinate is chosen.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .alphabet import Alphabet, pair_join


class MdsCode:
    """Immutable word set with cached line-completion and membership indexes.

    Words are stored sorted lexicographically; that sorted tuple is the
    canonical form used for equality, hashing and serialization.
    """

    def __init__(self, q, n, words, alphabet=None, provenance=None, check_symbols=True):
        self.q = int(q)
        self.n = int(n)
        if alphabet is None:
            alphabet = Alphabet.plain(self.q)
        if alphabet.q != self.q:
            raise ValueError("alphabet size disagrees with q")
        self.alphabet = alphabet
        ws = sorted(tuple(int(s) for s in w) for w in words)
        if check_symbols:
            for w in ws:
                if len(w) != self.n:
                    raise ValueError(f"word {w} has length {len(w)}, expected {self.n}")
                for s in w:
                    if not 0 <= s < self.q:
                        raise ValueError(f"symbol {s} out of range in {w}")
        self.words: tuple[tuple[int, ...], ...] = tuple(ws)
        self.provenance = dict(provenance) if provenance else {"construction": "literal"}
        self._word_set = None
        self._complete = None
        self._slots = None
        self._enc = None

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return tuple(w) in self.word_set

    def __eq__(self, other):
        return (
            isinstance(other, MdsCode)
            and self.q == other.q
            and self.n == other.n
            and self.words == other.words
        )

    def __hash__(self):
        return hash((self.q, self.n, self.words))

    def __repr__(self):
        return f"MdsCode(q={self.q}, n={self.n}, words={len(self.words)})"

    @property
    def word_set(self) -> set:
        if self._word_set is None:
            self._word_set = set(self.words)
        return self._word_set

    def word_array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int64)

    def encoded(self) -> np.ndarray:
        """Sorted base-q integer encodings of the words."""
        if self._enc is None:
            arr = self.word_array()
            weights = self.q ** np.arange(self.n - 1, -1, -1, dtype=np.int64)
            self._enc = np.sort(arr @ weights)
        return self._enc

    def completion_maps(self):
        """For each direction i: dict from the word with coordinate i dropped
        to the value at i. Total when the code is MDS."""
        if self._complete is None:
            maps = [dict() for _ in range(self.n)]
            for w in self.words:
                for i in range(self.n):
                    maps[i][w[:i] + w[i + 1:]] = w[i]
            self._complete = maps
        return self._complete

    def slots(self):
        """(coordinate, symbol) -> indices of words carrying that symbol there."""
        if self._slots is None:
            table: dict[tuple[int, int], list[int]] = {}
            for idx, w in enumerate(self.words):
                for i, s in enumerate(w):
                    table.setdefault((i, s), []).append(idx)
            self._slots = table
        return self._slots

    def complete_line(self, coord: int, rest: tuple[int, ...]):
        """Value at coord of the unique codeword whose other coordinates are
        rest (in coordinate order), or None."""
        return self.completion_maps()[coord].get(tuple(rest))


@dataclass
class MdsVerdict:
    ok: bool
    reason: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def is_mds(code_or_words, q: int | None = None, n: int | None = None) -> MdsVerdict:
    """Check size q^(n-1) and exactly one codeword per line.

    On failure the witness is either a pair of words at distance < 2 or a
    direction whose projection misses some line.
    """
    if isinstance(code_or_words, MdsCode):
        words, q, n = code_or_words.words, code_or_words.q, code_or_words.n
    else:
        if q is None or n is None:
            raise ValueError("q and n required for a raw word list")
        words = [tuple(w) for w in code_or_words]
        for w in words:
            if len(w) != n or any(not 0 <= s < q for s in w):
                raise ValueError(f"malformed word {w}")
    if n < 2:
        raise ValueError("codes of length < 2 are out of scope")
    expected = q ** (n - 1)
    if len(set(words)) != len(words):
        seen = {}
        for w in words:
            if w in seen:
                return MdsVerdict(False, "duplicate word", (w, w))
            seen[w] = True
    if len(words) != expected:
        return MdsVerdict(False, f"size {len(words)} != q^(n-1) = {expected}")
    for i in range(n):
        proj = {}
        for w in words:
            key = w[:i] + w[i + 1:]
            if key in proj:
                return MdsVerdict(False, "two words on one line", (proj[key], w))
            proj[key] = w
    return MdsVerdict(True)


class NAryQuasigroup:
    """Total n-ary operation on {0..q-1} that is a bijection in each argument
    when the others are fixed. The table has shape (q,)*arity."""

    def __init__(self, table, alphabet: Alphabet | None = None):
        arr = np.asarray(table, dtype=np.int64)
        if arr.ndim < 1:
            raise ValueError("table must have at least one axis")
        q = arr.shape[0]
        if any(s != q for s in arr.shape):
            raise ValueError("table must be q**arity entries with equal axes")
        self.table = arr
        self.q = q
        self.arity = arr.ndim
        self.alphabet = alphabet if alphabet is not None else Alphabet.plain(q)

    def value(self, *args: int) -> int:
        if len(args) != self.arity:
            raise ValueError(f"expected {self.arity} arguments")
        return int(self.table[args])

    def is_valid(self) -> bool:
        """Every unary retract is a permutation."""
        target = np.arange(self.q)
        for axis in range(self.arity):
            moved = np.moveaxis(self.table, axis, -1).reshape(-1, self.q)
            if not np.array_equal(np.sort(moved, axis=1), np.tile(target, (moved.shape[0], 1))):
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, NAryQuasigroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.q, self.arity, self.table.tobytes()))


def graph_of(f: NAryQuasigroup, provenance=None) -> MdsCode:
    """All (x_1..x_m, f(x)); the output is the last coordinate."""
    q, m = f.q, f.arity
    words = []
    for xs in itertools.product(range(q), repeat=m):
        words.append(xs + (int(f.table[xs]),))
    return MdsCode(q, m + 1, words, alphabet=f.alphabet,
                   provenance=provenance, check_symbols=False)


def quasigroup_of(M: MdsCode, output_coord: int) -> NAryQuasigroup:
    """Invert graph_of: read coordinate output_coord as a function of the rest
    (kept in coordinate order)."""
    if not 0 <= output_coord < M.n:
        raise ValueError("output coordinate out of range")
    verdict = is_mds(M)
    if not verdict:
        raise ValueError(f"not an MDS code: {verdict.reason}")
    shape = (M.q,) * (M.n - 1)
    table = np.zeros(shape, dtype=np.int64)
    for w in M.words:
        key = w[:output_coord] + w[output_coord + 1:]
        table[key] = w[output_coord]
    return NAryQuasigroup(table, alphabet=M.alphabet)


def pair_code(f: NAryQuasigroup, g: NAryQuasigroup, provenance=None) -> MdsCode:
    """All (x, y) with f(x) = g(y); MDS of length arity(f) + arity(g)."""
    if f.q != g.q:
        raise ValueError("operand alphabets differ")
    q = f.q
    fibers: dict[int, list[tuple[int, ...]]] = {v: [] for v in range(q)}
    for ys in itertools.product(range(q), repeat=g.arity):
        fibers[int(g.table[ys])].append(ys)
    words = []
    for xs in itertools.product(range(q), repeat=f.arity):
        for ys in fibers[int(f.table[xs])]:
            words.append(xs + ys)
    return MdsCode(q, f.arity + g.arity, words, alphabet=f.alphabet,
                   provenance=provenance, check_symbols=False)


def subcode(M: MdsCode, fixed: dict[int, int]) -> MdsCode:
    """Fix coordinates per `fixed`, project the matching words onto the rest."""
    if not fixed:
        return M
    for c, v in fixed.items():
        if not 0 <= c < M.n:
            raise ValueError(f"coordinate {c} out of range")
        if not 0 <= v < M.q:
            raise ValueError(f"value {v} out of range")
    free = [i for i in range(M.n) if i not in fixed]
    if len(free) < 2:
        raise ValueError("fixing n-1 or more coordinates degenerates the code")
    words = []
    for w in M.words:
        if all(w[c] == v for c, v in fixed.items()):
            words.append(tuple(w[i] for i in free))
    prov = {"construction": "subcode", "fixed": {str(k): v for k, v in sorted(fixed.items())},
            "of": M.provenance}
    return MdsCode(M.q, len(free), words, alphabet=M.alphabet,
                   provenance=prov, check_symbols=False)


def product_code(A: MdsCode, B: MdsCode) -> MdsCode:
    """Componentwise pairing over the product alphabet; pair (a, b) gets index
    a * qB + b."""
    if A.n != B.n:
        raise ValueError("factors must have equal length")
    qb = B.q
    words = []
    for wa in A.words:
        for wb in B.words:
            words.append(tuple(pair_join(a, b, qb) for a, b in zip(wa, wb)))
    prov = {"construction": "product",
            "a": {"q": A.q, "words": [list(w) for w in A.words],
                  "provenance": A.provenance},
            "b": {"q": B.q, "words": [list(w) for w in B.words],
                  "provenance": B.provenance}}
    return MdsCode(A.q * B.q, A.n, words, alphabet=Alphabet.pair(A.q, B.q),
                   provenance=prov, check_symbols=False)


def parity_code(q: int, n: int, provenance=None) -> MdsCode:
    """Words summing to 0 mod q; the basic linear example."""
    words = []
    for xs in itertools.product(range(q), repeat=n - 1):
        words.append(xs + ((-sum(xs)) % q,))
    prov = provenance or {"construction": "parity", "q": q, "n": n}
    return MdsCode(q, n, words, provenance=prov, check_symbols=False)
