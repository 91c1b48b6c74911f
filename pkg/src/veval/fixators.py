"""Partial fixators, commutation tests, and the table-to-word factorization.

pFix(P) is the subgroup of V fixing the right ideal of P pointwise wherever
defined.  Membership has two deciders: a direct bounded-depth check, and the
commutation test against synthesized generators of the fixator of a
complementary code.  On top of the same machinery sits the coset-style
commutation decider for the evaluation relation g(x) = y.
"""

from dataclasses import dataclass
from itertools import product
from math import ceil, log2

from .codes import (PrefixCode, complement, complement_single, is_prefix,
                    validate_prefix_code)
from .tables import (Value, VTable, apply, compose, equals, inverse,
                     is_identity, maximal_extension, restrict_to_code,
                     validate_table)
from .words import Gen, GenSet, GenWord, word_to_element


class EmptyOrMaximalCode(ValueError):
    pass


class PrefixHolds(ValueError):
    pass


# The two standard generators of the order-preserving subgroup F.
F_GEN_A = validate_table([("00", "0"), ("01", "10"), ("1", "11")])
F_GEN_B = validate_table([("0", "0"), ("100", "10"), ("101", "110"), ("11", "111")])


def pfix_membership_direct(g: VTable, P: PrefixCode) -> bool:
    """g fixes the ideal of P pointwise, checked at depth maxlen(g)."""
    for p in P:
        for bits in product("01", repeat=g.maxlen):
            x = p + "".join(bits)
            if apply(g, x) != Value(x):
                return False
    return True


def bridge_code(k: int) -> PrefixCode:
    """The comb {0^(k-1)} + {0^j 1 : j <= k-2}, a maximal code of size k."""
    return validate_prefix_code(["0" * (k - 1)] + ["0" * j + "1" for j in range(k - 1)])


def _restrict_both_sides(f: VTable, B: PrefixCode) -> VTable:
    """Restrict f so that domain and image codes lie in the ideal of B."""
    g = restrict_to_code(f, B)
    return inverse(restrict_to_code(inverse(g), B))


@dataclass(frozen=True)
class FixatorGenerators:
    base_code: PrefixCode
    complement_code: PrefixCode
    bridge: PrefixCode
    names: tuple[str, ...]
    tables: tuple[VTable, ...]

    def factor_words(self):
        """One FactorWord per generator, product-verified elsewhere."""
        return tuple(factor_pipeline(t) for t in self.tables)


def fixator_generators(P: PrefixCode, G: GenSet) -> FixatorGenerators:
    """Generators of pFix(P): the ambient set transported by the isomorphism
    phi -> id_P + f_BQ . phi . f_BQ^-1 onto the complement's copy of V.
    Results are cached on the generating set."""
    cache = getattr(G, "_fixgen_cache", None)
    if cache is None:
        cache = {}
        G._fixgen_cache = cache
    if P.members in cache:
        return cache[P.members]
    if not P.members or P.is_maximal():
        raise EmptyOrMaximalCode("pFix generator synthesis needs a nonempty non-maximal code")
    Q = complement(P)
    B = bridge_code(len(Q))
    to_q = dict(zip(B.members, Q.members))
    id_pairs = [(p, p) for p in P]
    names, tables = [], []
    for name, gamma in G.tables.items():
        gb = _restrict_both_sides(gamma, B)
        conj = list(id_pairs)
        for s, t in gb.pairs:
            bs = next(b for b in B if s.startswith(b))
            bt = next(b for b in B if t.startswith(b))
            conj.append((to_q[bs] + s[len(bs):], to_q[bt] + t[len(bt):]))
        names.append(name)
        tables.append(validate_table(conj))
    out = FixatorGenerators(P, Q, B, tuple(names), tuple(tables))
    cache[P.members] = out
    return out


def commutation_membership(g: VTable, P: PrefixCode, G: GenSet) -> bool:
    ok, _ = commutation_membership_witness(g, P, G)
    return ok


def commutation_membership_witness(g: VTable, P: PrefixCode, G: GenSet):
    """Membership in pFix(P) by commuting with the generators of the
    complementary fixator; returns (answer, non-commuting witness name)."""
    if not P.members or P.is_maximal():
        raise EmptyOrMaximalCode("commutation test needs a nonempty non-maximal code")
    gens = fixator_generators(complement(P), G)
    for name, h in zip(gens.names, gens.tables):
        if not equals(compose(g, h), compose(h, g)):
            return False, name
    return True, None


def separating_witness(u: str, v: str) -> VTable:
    """An element fixing the u-cylinder but moving the v-cylinder; exists
    exactly when u is not a prefix of v."""
    if is_prefix(u, v):
        raise PrefixHolds(f"{u!r} <=pref {v!r}: every fixator of u fixes v")
    if not is_prefix(v, u):
        Q = complement(validate_prefix_code([u, v]))
        if not Q.members:  # {u, v} = {0, 1}
            o = "1" if u == "0" else "0"
            return validate_table([(u, u), (o + "0", o + "1"), (o + "1", o + "0")])
        q = Q.members[0]
        rest = [(z, z) for z in Q.members[1:]]
        return validate_table([(u, u), (v, q), (q, v)] + rest)
    # v <pref u: swap the sibling pair of v-children on the other side of u
    a = u[len(v)]
    o = "1" if a == "0" else "0"
    s0, s1 = v + o + "0", v + o + "1"
    Q = complement(validate_prefix_code([u, s0, s1]))
    return validate_table([(u, u), (s0, s1), (s1, s0)] + [(z, z) for z in Q])


def coset_condition(g: VTable, x: str, y: str, G: GenSet) -> bool:
    """The commutation form of the coset equality g pFix(x) = pFix(y) g:
    conjugates of the fixator generators of {x} commute with the generators
    of the complement fixator of {y}, and symmetrically.

    This holds exactly when g maps the x-cylinder onto the y-cylinder as a
    set.  That is weaker than the evaluation relation g(x) = y: an element
    can permute a cylinder without fixing its address, e.g. the swap
    {(00,01),(01,00),(1,1)} passes at x = y = 0 although it is undefined at
    0.  eval_via_commutation closes the gap by refining."""
    gi = inverse(g)
    gen_x = fixator_generators(validate_prefix_code([x]), G)
    gen_y = fixator_generators(validate_prefix_code([y]), G)
    gen_xbar = fixator_generators(complement_single(x), G)
    gen_ybar = fixator_generators(complement_single(y), G)
    for alpha in gen_x.tables:
        c = compose(g, compose(alpha, gi))
        for delta in gen_ybar.tables:
            if not equals(compose(delta, c), compose(c, delta)):
                return False
    for beta in gen_y.tables:
        c = compose(gi, compose(beta, g))
        for gamma in gen_xbar.tables:
            if not equals(compose(gamma, c), compose(c, gamma)):
                return False
    return True


def eval_via_commutation(g, x: str, y: str, G: GenSet) -> bool:
    """Decide g(x) = y purely by commutation tests: the coset condition must
    hold at (xw, yw) for a maximal code of refinements w reaching the domain
    code.  Where the table is defined the cylinder map is rigid, so cylinder
    equality there pins g(xw) = yw as strings, and agreement on a maximal
    code forces g(x) = y.  Refinement descends only through too-short
    branches (at most one branch per table entry).  Empty strings delegate
    to the identity test."""
    if isinstance(g, GenWord):
        g = word_to_element(g, G)
    if x == "" or y == "":
        return x == y == "" and is_identity(maximal_extension(g))
    g = maximal_extension(g)

    def check(u: str, v: str) -> bool:
        if not coset_condition(g, u, v, G):
            return False
        if isinstance(apply(g, u), Value):
            return True  # rigid here, and the cylinders match
        return check(u + "0", v + "0") and check(u + "1", v + "1")

    return check(x, y)


# ---------------------------------------------------------------------------
# Factorization: g = beta . pi . alpha with alpha, beta order-preserving and
# pi a permutation of a balanced code, written as pivot transpositions.

@dataclass(frozen=True)
class Factor:
    table: VTable
    token: Gen | None = None          # set for F-generator factors
    transposition: tuple | None = None  # (k, w) for pivot transpositions

    def __str__(self):
        if self.token is not None:
            return str(self.token)
        k, w = self.transposition
        return f"(0^{k}|{w})"


@dataclass(frozen=True)
class FactorWord:
    factors: tuple[Factor, ...]  # written order; rightmost applied first

    def product(self) -> VTable:
        f = validate_table([("", "")])
        for fac in reversed(self.factors):
            f = compose(fac.table, f)
        return f

    def transposition_count(self) -> int:
        return sum(1 for f in self.factors if f.transposition is not None)

    def as_genword(self) -> tuple[GenWord, GenSet]:
        """The same word over a set naming the two F generators and each
        transposition; the named set is returned alongside."""
        tables = {"fA": F_GEN_A, "fB": F_GEN_B}
        tokens = []
        for fac in self.factors:
            if fac.token is not None:
                tokens.append(fac.token)
            else:
                k, w = fac.transposition
                name = f"T{k}|{w}"
                tables[name] = fac.table
                tokens.append(Gen(name))
        return GenWord(tuple(tokens)), GenSet(tables)


def balanced_code(n: int) -> PrefixCode:
    """Maximal code of size n inside {0,1}^(k-1) + {0,1}^k, k = ceil(log2 n),
    splitting the dictionary-least leaves first (so it contains 0^k)."""
    if n == 1:
        return PrefixCode(("",))
    k = ceil(log2(n))
    base = ["".join(b) for b in product("01", repeat=k - 1)]
    split = n - len(base)
    members = [b + c for b in base[:split] for c in "01"] + base[split:]
    return validate_prefix_code(members)


def transposition_table(k: int, w: str) -> VTable:
    """The swap of the cylinders 0^k and w, identity elsewhere: pairs
    (0^k, w), (w, 0^k), the off-branch strings 0^i 1, and w's sibling fringe."""
    zeros = "0" * k
    j = len(w) - len(w.lstrip("0"))
    v = w[j + 1:]
    pairs = [(zeros, w), (w, zeros)]
    pairs += [("0" * i + "1",) * 2 for i in range(k) if i != j]
    head = w[: j + 1]
    pairs += [(head + e,) * 2 for e in complement_single(v)] if v else []
    return validate_table(pairs)


def _pivot_transpositions(perm: dict[int, int], pivot: int) -> list[int]:
    """Write perm as a product of transpositions (pivot j); returned in
    written order (rightmost applied first)."""
    seen = set()
    out = []
    for start in sorted(perm):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        if pivot in cycle:
            i = cycle.index(pivot)
            cycle = cycle[i:] + cycle[:i]
            out += [(c,) for c in cycle[:0:-1]]
        else:
            out += [(cycle[0],)] + [(c,) for c in cycle[:0:-1]] + [(cycle[0],)]
    return [j for (j,) in out]


def _rotation_steps(code: PrefixCode) -> list[int]:
    """Right-rotation spine positions turning the code's tree into the comb;
    applying the corresponding x_i generators maps the code onto the comb."""
    members = set(code.members)
    steps = []
    pos = 0
    while "1" * pos not in members:
        node = "1" * pos
        if node + "0" in members:
            pos += 1
            continue
        steps.append(pos)
        moved = set()
        for s in members:
            if s.startswith(node + "00"):
                moved.add(node + "0" + s[pos + 2:])
            elif s.startswith(node + "01"):
                moved.add(node + "10" + s[pos + 2:])
            elif s.startswith(node + "1"):
                moved.add(node + "11" + s[pos + 1:])
            else:
                moved.add(s)
        members = moved
    return steps


def _xi_tokens(i: int, inv: bool) -> list[Gen]:
    """x_0, x_1 are the two F generators; x_i = x_0^(i-1) x_1 x_0^-(i-1)
    acts like x_1 shifted i-1 steps down the right spine."""
    if i == 0:
        return [Gen("fA", inv)]
    if i == 1:
        return [Gen("fB", inv)]
    shift = i - 1
    return ([Gen("fA")] * shift + [Gen("fB", inv)] + [Gen("fA", True)] * shift)


def _xi_table(i: int) -> VTable:
    f = F_GEN_A if i == 0 else F_GEN_B
    for _ in range(max(0, i - 1)):
        f = compose(compose(F_GEN_A, f), inverse(F_GEN_A))
    return f


def _to_comb_word(code: PrefixCode) -> list[Gen]:
    """Tokens (written order) of the order-preserving element code -> comb."""
    tokens = []
    for i in reversed(_rotation_steps(code)):
        tokens += _xi_tokens(i, False)
    return tokens


def _order_preserving_factors(P: PrefixCode, Q: PrefixCode) -> list[Factor]:
    """Factors of the order-preserving bijection P -> Q over the F generators."""
    if P.members == Q.members:
        return []
    tokens = [t.inverted() for t in reversed(_to_comb_word(Q))] + _to_comb_word(P)
    base = {"fA": F_GEN_A, "fB": F_GEN_B}
    return [Factor(table=inverse(base[t.name]) if t.inv else base[t.name], token=t)
            for t in tokens]


def factor_pipeline(g: VTable) -> FactorWord:
    """Factor g as beta . pi . alpha: alpha maps the domain code onto the
    balanced code order-preservingly, pi permutes the balanced code by pivot
    transpositions, beta maps it onto the image code; multiply-out equality
    is the contract."""
    g = maximal_extension(g)
    n = g.size
    S = balanced_code(n)
    dom = [p for p, _ in g.pairs]
    img = sorted(q for _, q in g.pairs)
    rank = {q: i for i, q in enumerate(img)}
    perm = {i: rank[g.pairs[i][1]] for i in range(n)}
    k = ceil(log2(n)) if n > 1 else 0
    pi_factors = [Factor(table=transposition_table(k, S.members[j]),
                         transposition=(k, S.members[j]))
                  for j in _pivot_transpositions(perm, pivot=0)]
    alpha = _order_preserving_factors(validate_prefix_code(dom), S)
    beta = _order_preserving_factors(S, validate_prefix_code(img))
    return FactorWord(tuple(beta + pi_factors + alpha))
