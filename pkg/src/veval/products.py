"""The Brin-Thompson group 2V on pairs of bitstrings (general n supported).

Tuples multiply coordinatewise.  Two kinds of codes generalize prefix codes:
initial-factor codes (no member an initial factor of another) and joinless
codes (no two members have a common upper bound); joinless codes are what
tables of 2V are built from, initial-factor codes appear in unique maximal
extensions.
"""

from dataclasses import dataclass
from itertools import product as iproduct

from .codes import check_bits
from .words import Gen, GenSet, GenWord, Tau, UnknownGenerator


class NotAFunction(ValueError):
    pass


class NotInjective(ValueError):
    pass


DEPTH_CAP = 6


def as_tuple(t, n: int | None = None):
    t = tuple(check_bits(s) for s in t)
    if n is not None and len(t) != n:
        raise ValueError(f"expected {n} coordinates, got {len(t)}")
    return t


def ell(t) -> int:
    """Maximal coordinate length."""
    return max((len(s) for s in t), default=0)


def tuple_concat(u, v):
    return tuple(a + b for a, b in zip(u, v))


def le_init(u, v) -> bool:
    """u is an initial factor of v: coordinatewise prefix."""
    return all(b.startswith(a) for a, b in zip(u, v))


def quotient(u, v):
    """The x with v x = u, assuming le_init(v, u)."""
    return tuple(a[len(b):] for a, b in zip(u, v))


def join(u, v):
    """Least common upper bound in the initial-factor order, or None."""
    out = []
    for a, b in zip(u, v):
        if a.startswith(b):
            out.append(a)
        elif b.startswith(a):
            out.append(b)
        else:
            return None
    return tuple(out)


def is_initial_factor_code(S) -> bool:
    return not any(u != v and le_init(u, v) for u in S for v in S)


def is_joinless(S) -> bool:
    S = list(S)
    return not any(join(S[i], S[j]) is not None
                   for i in range(len(S)) for j in range(i + 1, len(S)))


@dataclass(frozen=True)
class TupleCode:
    members: tuple
    n: int

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    @property
    def maxlen(self) -> int:
        return max((ell(t) for t in self.members), default=0)


def tuple_code(members, n: int = 2) -> TupleCode:
    members = sorted({as_tuple(t, n) for t in members})
    if not is_initial_factor_code(members):
        bad = next((u, v) for u in members for v in members
                   if u != v and le_init(u, v))
        raise ValueError(f"{bad[0]} is an initial factor of {bad[1]}")
    return TupleCode(tuple(members), n)


def unit_extensions(n: int):
    """The one-symbol generators of the product monoid (paper's A_eps)."""
    out = []
    for i in range(n):
        for a in "01":
            out.append(tuple(a if j == i else "" for j in range(n)))
    return out


def join_refine(C1: TupleCode, C2: TupleCode) -> TupleCode:
    """The joinless code generating the intersection of the two ideals."""
    out = {j for u in C1 for v in C2 if (j := join(u, v)) is not None}
    return TupleCode(tuple(sorted(out)), C1.n)


def complement_sharp(P: TupleCode) -> set:
    """One-symbol extensions of strict initial factors that avoid joining P
    (not necessarily an initial-factor code).  This construction can miss
    parts of the complement when coordinates mix unevenly, e.g. for
    {(e,0),(00,e),(10,e),(11,e)} it is empty although the (01,1)-ideal is
    disjoint from the code's ideal; complement_init closes the gap."""
    sinit = {tuple(m[i][:k[i]] for i in range(P.n))
             for m in P.members
             for k in iproduct(*[range(len(s) + 1) for s in m])}
    sinit -= set(P.members)
    return {tuple_concat(s, a) for s in sinit for a in unit_extensions(P.n)
            if all(join(tuple_concat(s, a), p) is None for p in P)}


def complement_init(P: TupleCode) -> TupleCode:
    """A complementary initial-factor code: the minimal join-free tuples
    with all coordinates of length <= maxlen(P).

    Join-freeness from P is upward closed in the initial-factor order, so
    the minimal such tuples form an antichain whose ideal covers every
    point outside the ideal of P; any deeper tuple truncates into the box
    without changing joinability."""
    if not P.members:
        return TupleCode((("",) * P.n,), P.n)
    L = P.maxlen
    if L > DEPTH_CAP:
        raise ValueError(f"depth {L} beyond the enumeration cap {DEPTH_CAP}")
    strings = [""]
    for K in range(1, L + 1):
        strings += ["".join(b) for b in iproduct("01", repeat=K)]

    def free(t):
        return all(join(t, p) is None for p in P)

    out = []
    for t in iproduct(strings, repeat=P.n):
        if not free(t):
            continue
        shorter = (tuple(s[:-1] if j == i else s for j, s in enumerate(t))
                   for i in range(P.n) if t[i])
        if all(not free(v) for v in shorter):
            out.append(t)
    return TupleCode(tuple(sorted(out)), P.n)


def is_essential(P: TupleCode) -> bool:
    """Complement-based decider: essential iff the complement is empty."""
    return P.members != () and len(complement_init(P)) == 0


def is_essential_oracle(P: TupleCode) -> bool:
    """Brute-force decider: every tuple at depth maxlen(P) is above a member."""
    L = P.maxlen
    if L > DEPTH_CAP:
        raise ValueError(f"depth {L} beyond the enumeration cap {DEPTH_CAP}")
    alphabet = ["".join(b) for b in iproduct("01", repeat=L)]
    return all(any(le_init(p, x) for p in P)
               for x in iproduct(alphabet, repeat=P.n))


@dataclass(frozen=True)
class NTable:
    pairs: tuple  # ((domain tuple, image tuple), ...) sorted
    n: int

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def maxlen(self) -> int:
        return max((ell(t) for pq in self.pairs for t in pq), default=0)

    def domain(self) -> TupleCode:
        return TupleCode(tuple(p for p, _ in self.pairs), self.n)

    def image(self) -> TupleCode:
        return TupleCode(tuple(sorted(q for _, q in self.pairs)), self.n)


def ntable(pairs, n: int = 2) -> NTable:
    pairs = sorted((as_tuple(p, n), as_tuple(q, n)) for p, q in pairs)
    if len({p for p, _ in pairs}) != len(pairs) or len({q for _, q in pairs}) != len(pairs):
        raise NotInjective("repeated domain or image tuple")
    t = NTable(tuple(pairs), n)
    t.domain(), t.image()  # raise on non-codes
    return t


def validate_2v_table(pairs, n: int = 2) -> NTable:
    """A 2V-flavor table: bijection between finite maximal joinless codes."""
    t = ntable(pairs, n)
    for side in (t.domain(), t.image()):
        if not is_joinless(side.members):
            raise ValueError(f"{side.members} is not joinless")
        if not is_essential(TupleCode(side.members, n)):
            raise ValueError(f"{side.members} is not maximal")
    return t


def table_checks(F: NTable) -> dict:
    """The five decisions for a candidate table between initial-factor codes:
    function, injective, total, surjective, and group element (all four)."""
    out = {"Q1": _consistent(F.pairs), "Q2": _consistent([(q, p) for p, q in F.pairs]),
           "Q3": is_essential(F.domain()), "Q4": is_essential(F.image())}
    out["Q5"] = all(out.values())
    return out


def _consistent(pairs) -> bool:
    for i, (p, fp) in enumerate(pairs):
        for p2, fp2 in pairs[i + 1:]:
            j = join(p, p2)
            if j is not None:
                if tuple_concat(fp, quotient(j, p)) != tuple_concat(fp2, quotient(j, p2)):
                    return False
    return True


def table_checks_oracle(F: NTable) -> dict:
    """The same five answers read off the depth-maxlen expansions."""
    def expand(pairs, L):
        if L > DEPTH_CAP:
            raise ValueError(f"depth {L} beyond the enumeration cap {DEPTH_CAP}")
        alphabet = ["".join(b) for b in iproduct("01", repeat=L)]
        rel = {}
        for x in iproduct(alphabet, repeat=F.n):
            images = {tuple_concat(q, quotient(x, p)) for p, q in pairs if le_init(p, x)}
            if images:
                rel[x] = images
        return rel

    dom_rel = expand(F.pairs, F.domain().maxlen)
    img_rel = expand([(q, p) for p, q in F.pairs], F.image().maxlen)
    total_side = ["".join(b) for b in iproduct("01", repeat=F.domain().maxlen)]
    out = {
        "Q1": all(len(v) == 1 for v in dom_rel.values()),
        "Q2": all(len(v) == 1 for v in img_rel.values()),
        "Q3": len(dom_rel) == len(total_side) ** F.n,
        "Q4": len(img_rel) == (2 ** F.image().maxlen) ** F.n,
    }
    out["Q5"] = all(out.values())
    return out


def apply_n(f: NTable, x):
    """Value(qz) for a matching pair, TooShort when x sits strictly below the
    domain, None when x is off the domain ideal entirely."""
    from .tables import NO_PREFIX, TOO_SHORT, Value

    for p, q in f.pairs:
        if le_init(p, x):
            return Value(tuple_concat(q, quotient(x, p)))
    if any(join(x, p) is not None for p, _ in f.pairs):
        return TOO_SHORT
    return NO_PREFIX


def maximal_extension_n(f: NTable) -> NTable:
    """Unique maximum extension: shrink a pair by one symbol whenever the
    sibling one-symbol extension is already forced to agree, then drop pairs
    the shrunk pair dominates; order-independence is regression-tested."""
    if not _consistent(f.pairs):
        raise NotAFunction("table is not join-consistent")
    if not _consistent([(q, p) for p, q in f.pairs]):
        raise NotInjective("inverse table is not join-consistent")
    from .tables import Value

    pairs = set(f.pairs)
    changed = True
    while changed:
        changed = False
        for p, q in sorted(pairs):
            for i in range(f.n):
                if not p[i] or not q[i]:
                    continue
                if p[i][-1] != q[i][-1]:
                    continue
                a = p[i][-1]
                other = "1" if a == "0" else "0"
                ph = tuple(s[:-1] if j == i else s for j, s in enumerate(p))
                qh = tuple(s[:-1] if j == i else s for j, s in enumerate(q))
                sib = tuple(s + other if j == i else s for j, s in enumerate(ph))
                cur = NTable(tuple(sorted(pairs)), f.n)
                want = tuple(s + other if j == i else s for j, s in enumerate(qh))
                if apply_n(cur, sib) == Value(want):
                    pairs = {(r, s) for r, s in pairs
                             if not (le_init(ph, r) and s == tuple_concat(qh, quotient(r, ph)))}
                    pairs.add((ph, qh))
                    changed = True
                    break
            if changed:
                break
    return NTable(tuple(sorted(pairs)), f.n)


def inverse_n(f: NTable) -> NTable:
    return NTable(tuple(sorted((q, p) for p, q in f.pairs)), f.n)


def compose_n(f: NTable, g: NTable) -> NTable:
    """f after g by join refinement of g's image against f's domain."""
    out = set()
    for p, q in g.pairs:
        for r, s in f.pairs:
            j = join(q, r)
            if j is not None:
                out.add((tuple_concat(p, quotient(j, q)),
                         tuple_concat(s, quotient(j, r))))
    return NTable(tuple(sorted(out)), f.n)


def is_identity_n(f: NTable) -> bool:
    return all(p == q for p, q in f.pairs)


def equals_n(f: NTable, g: NTable) -> bool:
    """End-equivalence through the depth-L action oracle."""
    L = max(f.maxlen, g.maxlen)
    if L > DEPTH_CAP:
        raise ValueError(f"depth {L} beyond the enumeration cap {DEPTH_CAP}")
    alphabet = ["".join(b) for b in iproduct("01", repeat=L)]
    for x in iproduct(alphabet, repeat=f.n):
        if apply_n(f, x) != apply_n(g, x):
            return False
    return True


def eval_oracle_n(f: NTable, x, y) -> bool:
    """Decide f(x) = y under maximal extension: every depth-maxlen
    continuation z must satisfy f(xz) = yz."""
    from .tables import Value

    L = f.maxlen
    if L > DEPTH_CAP:
        raise ValueError(f"depth {L} beyond the enumeration cap {DEPTH_CAP}")
    alphabet = ["".join(b) for b in iproduct("01", repeat=L)]
    for z in iproduct(alphabet, repeat=f.n):
        if apply_n(f, tuple_concat(x, z)) != Value(tuple_concat(y, z)):
            return False
    return True


# --- evaluation over a 2V generating set -----------------------------------

class Gen2Set:
    def __init__(self, tables: dict[str, NTable]):
        self.tables = dict(tables)
        self._inverses = {}

    @property
    def lam(self) -> int:
        """The long-input constant: maximal coordinate length over the set."""
        return max((t.maxlen for t in self.tables.values()), default=0)

    def resolve(self, tok) -> NTable:
        if isinstance(tok, Tau):
            raise UnknownGenerator("transposition tokens have no 2V tables")
        try:
            base = self.tables[tok.name]
        except KeyError:
            raise UnknownGenerator(tok.name) from None
        if not tok.inv:
            return base
        if tok.name not in self._inverses:
            self._inverses[tok.name] = inverse_n(base)
        return self._inverses[tok.name]


def sigma_element() -> NTable:
    """Moves the first symbol of coordinate 2 to the front of coordinate 1;
    satisfies the transposition conjugation identity (regression-tested)."""
    return validate_2v_table([(("", "0"), ("0", "")), (("", "1"), ("1", ""))])


def identity_n(n: int = 2) -> NTable:
    return ntable([(("",) * n, ("",) * n)], n)


def word_to_element_n(w: GenWord, G: Gen2Set) -> NTable:
    n = next(iter(G.tables.values())).n if G.tables else 2
    f = identity_n(n)
    for tok in reversed(w.tokens):
        f = compose_n(G.resolve(tok), f)
    return f


def sequential_apply_n(w: GenWord, x, G: Gen2Set):
    from .tables import Value

    s = x
    for tok in reversed(w.tokens):
        out = apply_n(G.resolve(tok), s)
        if not isinstance(out, Value):
            return None
        s = out.string
    return Value(s)


def classify_n(w: GenWord, x, G: Gen2Set):
    from .words import InputClass
    from .tables import Value

    if sequential_apply_n(w, x, G) is not None:
        return InputClass.LONG
    f = maximal_extension_n(word_to_element_n(w, G))
    out = apply_n(f, x)
    return InputClass.SHORT if isinstance(out, Value) else InputClass.TOO_SHORT


def long_input_threshold_n(w: GenWord, G: Gen2Set) -> int:
    return G.lam * len(w)


def eval2v(w: GenWord, x, y, G: Gen2Set) -> bool:
    """General 2V evaluation decision through the composed, maximally
    extended table; cross-checked against the depth oracle in tests."""
    from .tables import Value

    f = maximal_extension_n(word_to_element_n(w, G))
    return apply_n(f, x) == Value(y)


def word_problem_2v(w: GenWord, G: Gen2Set) -> bool:
    return is_identity_n(maximal_extension_n(word_to_element_n(w, G)))


# --- embedding of V (with transpositions) into 2V --------------------------

def cross_with_identity(f) -> NTable:
    """gamma x 1: act by the V table on coordinate 1, fix coordinate 2."""
    return ntable([((p, ""), (q, "")) for p, q in f.pairs], 2)


def tau12_cross_identity() -> NTable:
    pairs = []
    for b in iproduct("01", repeat=2):
        w = "".join(b)
        pairs.append(((w, ""), (w[1] + w[0], "")))
    return ntable(pairs, 2)


def embedding_genset(G: GenSet) -> Gen2Set:
    tables = {name: cross_with_identity(t) for name, t in G.tables.items()}
    tables["sig"] = sigma_element()
    tables["t12"] = tau12_cross_identity()
    return Gen2Set(tables)


def embed_v_to_2v(w: GenWord) -> GenWord:
    """Tokenwise translation: generators keep their names (now acting on
    coordinate 1), Tau(i) becomes sig^(i-1) t12 sig^-(i-1)."""
    tokens = []
    for t in w.tokens:
        if isinstance(t, Tau):
            k = t.i - 1
            tokens += [Gen("sig")] * k + [Gen("t12")] + [Gen("sig", True)] * k
        else:
            tokens.append(t)
    return GenWord(tuple(tokens))
