"""Isotopisms, isometries, autotopism search, and transitivity certificates.

An isotopism of length-n codes over {0..q-1} is an n-tuple of symbol
permutations applied coordinatewise; an isometry additionally permutes the
coordinates first. A code M is isotopically transitive when for every codeword
there is an isotopism of M onto itself carrying a fixed base word (0..0) to it,
propelinear when some sharply transitive (regular) group of isometries sits
inside the symmetry group, and topolinear when isotopisms alone suffice.

Two certification routes coexist and are kept separate on purpose: explicit
witness families attached by the constructions, and an independent
backtracking search that knows nothing about how a code was built.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .alphabet import from_residue_bit, to_residue_bit
from .budget import BudgetExceeded, DEFAULT_BUDGET, EQUIVALENCE_BUDGET, SearchBudget
from .codes import MdsCode, subcode
from .perms import compose, identity_perm, invert


class Isotopism:
    """Tuple of per-coordinate symbol permutations."""

    __slots__ = ("taus",)

    def __init__(self, taus):
        self.taus = tuple(tuple(int(v) for v in t) for t in taus)

    @property
    def n(self) -> int:
        return len(self.taus)

    @property
    def q(self) -> int:
        return len(self.taus[0])

    @staticmethod
    def identity(q: int, n: int) -> "Isotopism":
        return Isotopism((identity_perm(q),) * n)

    def apply_word(self, w) -> tuple[int, ...]:
        return tuple(t[s] for t, s in zip(self.taus, w))

    def apply_code(self, M: MdsCode) -> MdsCode:
        prov = {"construction": "isotopism-image", "of": M.provenance}
        return MdsCode(M.q, M.n, [self.apply_word(w) for w in M.words],
                       alphabet=M.alphabet, provenance=prov, check_symbols=False)

    def compose(self, other: "Isotopism") -> "Isotopism":
        """(self o other): other is applied first."""
        return Isotopism(tuple(compose(a, b) for a, b in zip(self.taus, other.taus)))

    def inverse(self) -> "Isotopism":
        return Isotopism(tuple(invert(t) for t in self.taus))

    def is_automorphism_of(self, M: MdsCode) -> bool:
        arr = M.word_array()
        out = np.empty_like(arr)
        for i, t in enumerate(self.taus):
            out[:, i] = np.asarray(t, dtype=np.int64)[arr[:, i]]
        weights = M.q ** np.arange(M.n - 1, -1, -1, dtype=np.int64)
        return np.array_equal(np.sort(out @ weights), M.encoded())

    def __eq__(self, other):
        return isinstance(other, Isotopism) and self.taus == other.taus

    def __hash__(self):
        return hash(self.taus)

    def __repr__(self):
        return f"Isotopism(q={self.q}, n={self.n})"


def is_automorphism(M: MdsCode, iso: Isotopism) -> bool:
    return iso.is_automorphism_of(M)


def permute_word(w, eps) -> tuple[int, ...]:
    """Coordinate j of w moves to position eps[j]."""
    out = [0] * len(w)
    for j, s in enumerate(w):
        out[eps[j]] = s
    return tuple(out)


def parastrophe(M: MdsCode, eps) -> MdsCode:
    prov = {"construction": "parastrophe", "eps": list(eps), "of": M.provenance}
    return MdsCode(M.q, M.n, [permute_word(w, eps) for w in M.words],
                   alphabet=M.alphabet, provenance=prov, check_symbols=False)


class Isometry:
    """Coordinate permutation followed by an isotopism."""

    __slots__ = ("iso", "eps")

    def __init__(self, iso: Isotopism, eps):
        self.iso = iso
        self.eps = tuple(int(v) for v in eps)

    def apply_word(self, w) -> tuple[int, ...]:
        return self.iso.apply_word(permute_word(w, self.eps))

    def apply_code(self, M: MdsCode) -> MdsCode:
        return self.iso.apply_code(parastrophe(M, self.eps))

    def compose(self, other: "Isometry") -> "Isometry":
        """(self o other): other is applied first; isotopism parts braid past
        the coordinate permutation."""
        eps = compose(self.eps, other.eps)
        inv_self = invert(self.eps)
        taus = tuple(
            compose(self.iso.taus[i], other.iso.taus[inv_self[i]])
            for i in range(len(self.eps))
        )
        return Isometry(Isotopism(taus), eps)

    def inverse(self) -> "Isometry":
        taus = tuple(invert(self.iso.taus[self.eps[j]]) for j in range(len(self.eps)))
        return Isometry(Isotopism(taus), invert(self.eps))

    def __eq__(self, other):
        return isinstance(other, Isometry) and self.iso == other.iso and self.eps == other.eps

    def __hash__(self):
        return hash((self.iso, self.eps))

    def __repr__(self):
        return f"Isometry(eps={self.eps}, q={self.iso.q})"


# ---------------------------------------------------------------------------
# explicit symmetry families of the twisted-loop graph

def _signed(p: int, sign_bit: int, x: int) -> int:
    return (-x if sign_bit & 1 else x) % p


def cp_autotopism_a1(p: int, beta: int) -> Isotopism:
    """First family: x_s -> ((-1)^beta x + s*beta)_s, and the second and third
    coordinates get their index bit flipped by beta."""
    q = 2 * p
    tx, ty, tz = [0] * q, [0] * q, [0] * q
    for u in range(q):
        x, s = to_residue_bit(u, p)
        tx[u] = from_residue_bit(_signed(p, beta, x) + s * beta, s, p)
        ty[u] = from_residue_bit(x, s ^ beta, p)
        tz[u] = from_residue_bit(x, s ^ beta, p)
    return Isotopism((tx, ty, tz))


def cp_autotopism_a2(p: int, a1: int, b: int, alpha: int) -> Isotopism:
    """Second family: translations whose first and third components flip sign
    with the index bit relative to alpha."""
    q = 2 * p
    tx, ty, tz = [0] * q, [0] * q, [0] * q
    for u in range(q):
        x, s = to_residue_bit(u, p)
        tx[u] = from_residue_bit(x - a1 * (-1) ** (s ^ alpha), s, p)
        ty[u] = from_residue_bit(x - b, s, p)
        tz[u] = from_residue_bit(x - a1 * (-1) ** (s ^ alpha) - b, s, p)
    return Isotopism((tx, ty, tz))


def cp_autotopism_a3(p: int, alpha: int) -> Isotopism:
    """Third family: global sign flip with an index-bit swap on the outer
    coordinates and a shear on the middle one."""
    q = 2 * p
    tx, ty, tz = [0] * q, [0] * q, [0] * q
    for u in range(q):
        x, s = to_residue_bit(u, p)
        tx[u] = from_residue_bit(_signed(p, alpha, x), s ^ alpha, p)
        ty[u] = from_residue_bit(_signed(p, alpha, x) - alpha * s, s, p)
        tz[u] = from_residue_bit(_signed(p, alpha, x), s ^ alpha, p)
    return Isotopism((tx, ty, tz))


def ic_p_generators(p: int) -> list[Isotopism]:
    """All members of the three families over all parameter choices."""
    gens = [cp_autotopism_a1(p, beta) for beta in (0, 1)]
    gens += [
        cp_autotopism_a2(p, a1, b, alpha)
        for a1 in range(p)
        for b in range(p)
        for alpha in (0, 1)
    ]
    gens += [cp_autotopism_a3(p, alpha) for alpha in (0, 1)]
    return gens


def chase_to_zero_cp(p: int, word) -> Isotopism:
    """Compose one member of each family so the given graph word lands on
    (0, 0, 0). Parameters are read off the word itself."""
    a, alpha = to_residue_bit(word[0], p)
    b, beta = to_residue_bit(word[1], p)
    g1 = cp_autotopism_a1(p, beta)
    a1 = (_signed(p, beta, a) + alpha * beta) % p
    g2 = cp_autotopism_a2(p, a1, b, alpha)
    g3 = cp_autotopism_a3(p, alpha)
    return g3.compose(g2.compose(g1))


def cp_shear(p: int) -> Isotopism:
    """Composite of family maps that fixes (0, 0, 0) but is not the identity:
    on every coordinate it sends a symbol with upper bit s to itself minus 2s.
    Its powers are the full stabilizer of the base word inside the closure of
    the three families, which is therefore p times larger than sharply
    transitive."""
    g1 = cp_autotopism_a1(p, 1)
    g3 = cp_autotopism_a3(p, 1)
    k = g3.compose(g1)
    return cp_autotopism_a2(p, p - 1, 1, 0).compose(k.compose(k))


def cp_regular_generators(p: int) -> list[Isotopism]:
    """Composites of family maps generating a sharply transitive group of
    symmetries of graph(C_p), of order (2p)^2 = one element per codeword.

    Closing every family member over all parameters gives a group p times
    larger that contains cp_shear(p), so it cannot be sharply transitive.
    The shear moves the first components of its non-identity elements by
    different amounts on the two halves of the alphabet; the maps whose first
    component shifts both halves equally form a complement to the shear
    powers, and the four products below generate exactly that subgroup.
    """
    g1 = cp_autotopism_a1(p, 1)
    g3 = cp_autotopism_a3(p, 1)
    k = g3.compose(g1)
    m = k.compose(k)  # first component x - 1, no bit flips
    s = cp_shear(p)
    w = g1
    for _ in range((p - 1) // 2):
        w = w.compose(s)  # first component becomes plain negation
    return [cp_autotopism_a2(p, 0, 1, 0), m, g3, w]


def cp_regular_witness(p: int, word) -> Isotopism:
    """The unique member of the sharply transitive group carrying (0, 0, 0)
    to `word`. The inverted chase composite already does the carrying but may
    land outside the group; composing with the right power of cp_shear(p),
    which fixes the base word, repairs membership without any search."""
    c = chase_to_zero_cp(p, word).inverse()
    tx = c.taus[0]
    sgn = 1 if (tx[1] - tx[0]) % p == 1 else -1
    delta = (tx[p] - tx[0]) % p
    t = (delta * pow(2 * sgn, -1, p)) % p
    s = cp_shear(p)
    for _ in range(t):
        c = c.compose(s)
    return c


# ---------------------------------------------------------------------------
# group closure and the sharply-transitive criterion

def mulclose(gens, cap: int = DEFAULT_BUDGET.max_group) -> list[Isotopism]:
    """Closure under composition (inverses come for free in a finite group)."""
    gens = list(gens)
    if not gens:
        return []
    seen = {Isotopism.identity(gens[0].q, gens[0].n)}
    queue = list(seen)
    while queue:
        a = queue.pop()
        for g in gens:
            b = g.compose(a)
            if b not in seen:
                if len(seen) >= cap:
                    raise BudgetExceeded("group closure", cap)
                seen.add(b)
                queue.append(b)
    return sorted(seen, key=lambda x: x.taus)


@dataclass
class RegularVerdict:
    ok: bool
    group_size: int
    reason: str | None = None
    fiber_witness: tuple | None = None

    def __bool__(self):
        return self.ok


def check_regular_condition(M: MdsCode, witnesses, coord: int,
                            cap: int = DEFAULT_BUDGET.max_group) -> RegularVerdict:
    """Sharply-transitive test. Closes `witnesses` under composition, then
    requires: the closure acts transitively on M and equal action on the base
    word forces equal component at `coord`. When it holds, the closure is
    regular of order |M| (two elements agreeing on the base word then agree
    everywhere, one line at a time)."""
    return _regular_condition_closed(M, mulclose(witnesses, cap), coord)


def _regular_condition_closed(M: MdsCode, elements, coord: int) -> RegularVerdict:
    elements = list(elements)
    base = (0,) * M.n
    if base not in M:
        return RegularVerdict(False, len(elements), "base word not in code")
    fibers: dict[tuple, tuple] = {}
    for g in elements:
        if not g.is_automorphism_of(M):
            return RegularVerdict(False, len(elements),
                                  "element is not a symmetry of the code")
        img = g.apply_word(base)
        comp = g.taus[coord]
        prev = fibers.get(img)
        if prev is None:
            fibers[img] = comp
        elif prev != comp:
            return RegularVerdict(False, len(elements),
                                  "two elements agree on the base word but differ "
                                  f"at coordinate {coord}", img)
    if len(fibers) != len(M):
        return RegularVerdict(False, len(elements),
                              f"orbit of base word has size {len(fibers)} < {len(M)}")
    if len(elements) != len(M):
        return RegularVerdict(False, len(elements),
                              "criterion held per fiber but the group is not sharply "
                              "transitive; closure was not a group?")
    return RegularVerdict(True, len(elements))


# ---------------------------------------------------------------------------
# backtracking search for isotopisms carrying src onto dst

def search_isotopisms(src: MdsCode, dst: MdsCode, pins=None,
                      budget: SearchBudget = DEFAULT_BUDGET):
    """Yield every isotopism tau with tau(src) = dst, in deterministic order.

    Slot assignment tau_i(a) = b propagates through line completion: once a
    word has a single undetermined coordinate image, the target word is forced
    (or shown absent). Pins are pre-assigned slots {(coord, sym): sym}.
    """
    if (src.q, src.n) != (dst.q, dst.n):
        raise ValueError("codes live on different point sets")
    budget.check_points(src.q, src.n)
    if len(src) != len(dst):
        return

    q, n = src.q, src.n
    words = src.words
    nwords = len(words)
    comp = dst.completion_maps()
    dst_set = dst.word_set
    slots = src.slots()

    tau = [[-1] * q for _ in range(n)]
    tinv = [[-1] * q for _ in range(n)]
    img = [[-1] * n for _ in range(nwords)]
    unk = [n] * nwords
    trail: list[tuple[int, int, int]] = []
    nodes = 0

    def assign(i0: int, a0: int, b0: int) -> bool:
        nonlocal nodes
        queue = [(i0, a0, b0)]
        while queue:
            i, a, b = queue.pop()
            cur = tau[i][a]
            if cur != -1:
                if cur != b:
                    return False
                continue
            if tinv[i][b] != -1:
                return False
            nodes += 1
            if nodes > budget.max_nodes:
                raise BudgetExceeded("search nodes", budget.max_nodes)
            tau[i][a] = b
            tinv[i][b] = a
            trail.append((i, a, b))
            pending = []
            for widx in slots.get((i, a), ()):
                img[widx][i] = b
                unk[widx] -= 1
                if unk[widx] <= 1:
                    pending.append(widx)
            for widx in pending:
                im = img[widx]
                if unk[widx] == 1:
                    j = im.index(-1)
                    val = comp[j].get(tuple(im[:j] + im[j + 1:]))
                    if val is None:
                        return False
                    queue.append((j, words[widx][j], val))
                elif tuple(im) not in dst_set:
                    return False
        return True

    def undo_to(mark: int) -> None:
        while len(trail) > mark:
            i, a, b = trail.pop()
            tau[i][a] = -1
            tinv[i][b] = -1
            for widx in slots.get((i, a), ()):
                img[widx][i] = -1
                unk[widx] += 1

    def pick_word():
        best, best_u = -1, n + 1
        for widx in range(nwords):
            u = unk[widx]
            if 0 < u < best_u:
                best, best_u = widx, u
                if u == 2:
                    break
        return best

    def dfs():
        widx = pick_word()
        if widx == -1:
            yield Isotopism(tuple(tuple(t) for t in tau))
            return
        im = img[widx]
        i = im.index(-1)
        a = words[widx][i]
        for b in range(q):
            if tinv[i][b] != -1:
                continue
            mark = len(trail)
            if assign(i, a, b):
                yield from dfs()
            undo_to(mark)

    mark0 = len(trail)
    ok = True
    for (i, a), b in (pins or {}).items():
        if not assign(i, a, b):
            ok = False
            break
    if ok:
        yield from dfs()
    undo_to(mark0)


def autotopism_search(M: MdsCode, pins=None, budget: SearchBudget = DEFAULT_BUDGET):
    """Stream of all isotopisms of M onto itself honoring the pins."""
    return search_isotopisms(M, M, pins=pins, budget=budget)


# ---------------------------------------------------------------------------
# transitivity

@dataclass
class TransitivityCertificate:
    """One symmetry per codeword, each carrying the base word to it. In
    topolinear mode the witness set must itself be a sharply transitive
    group."""

    mode: str
    base: tuple
    witnesses: dict = field(default_factory=dict)  # word -> Isotopism

    def verify(self, M: MdsCode) -> tuple[bool, str | None]:
        if tuple(self.base) not in M:
            return False, "base word not in code"
        for w in M.words:
            g = self.witnesses.get(w)
            if g is None:
                return False, f"no witness for {w}"
            if g.apply_word(self.base) != w:
                return False, f"witness for {w} misses its word"
            if not g.is_automorphism_of(M):
                return False, f"witness for {w} is not a symmetry of the code"
        if len(self.witnesses) != len(M):
            return False, "extra witnesses for words outside the code"
        if self.mode == "topolinear":
            elems = set(self.witnesses.values())
            if len(elems) != len(M):
                return False, "witness set is not sharply transitive"
            for a in elems:
                for b in elems:
                    if a.compose(b) not in elems:
                        return False, "witness set is not closed under composition"
        return True, None


@dataclass
class TransitivityResult:
    transitive: bool
    certificate: TransitivityCertificate | None = None
    failing_word: tuple | None = None
    method: str = "search"

    def __bool__(self):
        return self.transitive


def _provenance_witnesses(M: MdsCode):
    """Witness map word -> isotopism (base (0..0) to word) from the recorded
    construction, or None when no explicit family applies."""
    prov = M.provenance or {}
    kind = prov.get("construction")
    base = (0,) * M.n
    if base not in M:
        return None
    if kind == "graph" and prov.get("loop") == "cp":
        p = int(prov["p"])
        return {w: cp_regular_witness(p, w) for w in M.words}
    if kind in ("iterated", "composition", "quadratic"):
        from . import constructions

        return constructions.witnesses_from_provenance(M)
    return None


def is_isotopically_transitive(M: MdsCode, method: str = "auto",
                               budget: SearchBudget = DEFAULT_BUDGET) -> TransitivityResult:
    """Decide whether some symmetry carries the base word to every codeword.

    method "explicit" uses construction-attached witness families and verifies
    each one; "pinned" runs one pinned search per codeword; "enumerate" lists
    the full symmetry group once and reads off the orbit; "auto" prefers
    explicit witnesses and falls back to pinned search.
    """
    base = (0,) * M.n
    if base not in M:
        # transitivity is isotopy invariant; shift some word onto the base
        w0 = M.words[0]
        shift = Isotopism(tuple(
            tuple((s - w0[i]) % M.q for s in range(M.q)) for i in range(M.n)
        ))
        moved = shift.apply_code(M)
        res = is_isotopically_transitive(moved, method=method, budget=budget)
        if res.certificate is not None:
            inv = shift.inverse()
            wits = {
                inv.apply_word(w): inv.compose(g).compose(shift)
                for w, g in res.certificate.witnesses.items()
            }
            res.certificate = TransitivityCertificate(
                res.certificate.mode, inv.apply_word(res.certificate.base), wits)
        if res.failing_word is not None:
            res.failing_word = shift.inverse().apply_word(res.failing_word)
        return res

    if method in ("auto", "explicit"):
        wits = _provenance_witnesses(M)
        if wits is not None:
            for w, g in wits.items():
                if g.apply_word(base) != w or not g.is_automorphism_of(M):
                    raise AssertionError(f"explicit witness family broken at {w}")
            cert = TransitivityCertificate("isotopic", base, wits)
            return TransitivityResult(True, cert, method="explicit")
        if method == "explicit":
            raise ValueError("no explicit witness family for this provenance")

    if method == "enumerate":
        witnesses: dict = {}
        for g in autotopism_search(M, budget=budget):
            img = g.apply_word(base)
            witnesses.setdefault(img, g)
            if len(witnesses) == len(M):
                break
        if len(witnesses) == len(M):
            return TransitivityResult(
                True, TransitivityCertificate("isotopic", base, witnesses),
                method="enumerate")
        missing = next(w for w in M.words if w not in witnesses)
        return TransitivityResult(False, None, missing, method="enumerate")

    witnesses = {}
    for w in M.words:
        pins = {(i, base[i]): w[i] for i in range(M.n)}
        found = next(autotopism_search(M, pins=pins, budget=budget), None)
        if found is None:
            return TransitivityResult(False, None, w, method="pinned")
        witnesses[w] = found
    cert = TransitivityCertificate("isotopic", base, witnesses)
    return TransitivityResult(True, cert, method="pinned")


# ---------------------------------------------------------------------------
# topolinearity

@dataclass
class TopolinearResult:
    status: bool | None  # None = inconclusive within budget
    group: list | None = None
    reason: str = ""

    def __bool__(self):
        return bool(self.status)


def _provenance_generators(M: MdsCode):
    prov = M.provenance or {}
    kind = prov.get("construction")
    if kind == "graph" and prov.get("loop") == "cp":
        return cp_regular_generators(int(prov["p"]))
    if kind in ("iterated", "quadratic", "composition", "product"):
        from . import constructions

        return constructions.generators_from_provenance(M)
    return None


def _regular_subgroup_search(M: MdsCode, elements, budget: SearchBudget):
    """DFS for a sharply transitive subgroup inside a listed symmetry group.
    Prunes as soon as a closure holds two elements over one base-word image."""
    base = (0,) * M.n
    fibers: dict[tuple, list[Isotopism]] = {w: [] for w in M.words}
    for g in elements:
        fibers[g.apply_word(base)].append(g)
    if any(not fs for fs in fibers.values()):
        return None
    order = sorted(fibers, key=lambda w: len(fibers[w]))

    target = len(M)

    def close_with(current: dict, g: Isotopism):
        new = dict(current)
        queue = [g]
        while queue:
            a = queue.pop()
            img = a.apply_word(base)
            prev = new.get(img)
            if prev is not None:
                if prev != a:
                    return None
                continue
            new[img] = a
            if len(new) > target:
                return None
            for b in list(new.values()):
                for c in (a.compose(b), b.compose(a)):
                    i2 = c.apply_word(base)
                    prev2 = new.get(i2)
                    if prev2 is None:
                        queue.append(c)
                    elif prev2 != c:
                        return None
        return new

    ident = Isotopism.identity(M.q, M.n)
    start = {base: ident}

    def dfs(current: dict):
        if len(current) == target:
            return list(current.values())
        w = next(w for w in order if w not in current)
        for g in fibers[w]:
            ext = close_with(current, g)
            if ext is not None:
                out = dfs(ext)
                if out is not None:
                    return out
        return None

    return dfs(start)


def is_topolinear(M: MdsCode, budget: SearchBudget = DEFAULT_BUDGET) -> TopolinearResult:
    """Three-way verdict: True with a regular witness group, False after an
    exhaustive refusal, None when a budget stopped the deciding search."""
    gens = _provenance_generators(M)
    if gens is not None:
        group = mulclose(gens, cap=budget.max_group)
        for coord in range(M.n):
            verdict = _regular_condition_closed(M, group, coord)
            if verdict:
                return TopolinearResult(True, group,
                                        f"construction group, coordinate {coord}")

    trans = is_isotopically_transitive(M, budget=budget)
    if not trans:
        return TopolinearResult(False, None,
                                f"not isotopically transitive at {trans.failing_word}")
    try:
        group = mulclose(trans.certificate.witnesses.values(), cap=budget.max_group)
        for coord in range(M.n):
            if _regular_condition_closed(M, group, coord):
                return TopolinearResult(True, group,
                                        f"witness closure, coordinate {coord}")
    except BudgetExceeded:
        pass

    try:
        elements = list(autotopism_search(M, budget=budget))
        found = _regular_subgroup_search(M, elements, budget)
    except BudgetExceeded as exc:
        return TopolinearResult(None, None, f"inconclusive: {exc}")
    if found is not None:
        return TopolinearResult(True, found, "regular subgroup of the full group")
    return TopolinearResult(False, None,
                            "full symmetry group holds no sharply transitive subgroup")


# ---------------------------------------------------------------------------
# code equivalence

def equivalent_codes(M1: MdsCode, M2: MdsCode,
                     budget: SearchBudget = EQUIVALENCE_BUDGET):
    """Isometry carrying M1 onto M2, or None after exhausting all coordinate
    permutations and isotopism searches."""
    if (M1.q, M1.n) != (M2.q, M2.n):
        return None
    budget.check_points(M1.q, M1.n)
    if len(M1) != len(M2):
        return None
    for eps in itertools.permutations(range(M1.n)):
        permuted = parastrophe(M1, eps)
        found = next(search_isotopisms(permuted, M2, budget=budget), None)
        if found is not None:
            return Isometry(found, eps)
    return None


# ---------------------------------------------------------------------------
# subcode witnesses by component restriction

def restrict_witnesses(M: MdsCode, cert: TransitivityCertificate,
                       fixed: dict[int, int]) -> tuple[MdsCode, TransitivityCertificate]:
    """Carry a transitivity certificate down to the subcode fixing the given
    coordinates at 0: the inverse witness of an embedded word fixes 0 on every
    fixed coordinate, so its free components restrict to the subcode."""
    if any(v != 0 for v in fixed.values()):
        raise ValueError("restriction witnesses need the fixed values to be 0")
    R = subcode(M, fixed)
    free = [i for i in range(M.n) if i not in fixed]
    base = (0,) * R.n
    wits = {}
    for v in R.words:
        it = iter(v)
        embedded = tuple(0 if i in fixed else next(it) for i in range(M.n))
        g = cert.witnesses[embedded]
        h = g.inverse()  # embedded -> base of M, fixing 0 at fixed coords
        restricted = Isotopism(tuple(h.taus[i] for i in free))
        if restricted.apply_word(v) != base or not restricted.is_automorphism_of(R):
            raise AssertionError("restricted witness failed; certificate unsound?")
        wits[v] = restricted.inverse()
    return R, TransitivityCertificate("isotopic", base, wits)
