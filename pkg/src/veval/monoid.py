"""Minimal Thompson-monoid support: one-pair elements, push/pop words,
composition of partial right-ideal morphisms, and the evaluation-to-word
identity.

Monoid tables drop both maximality and injectivity; equality is decided by
comparing actions at a sufficient depth.
"""

from dataclasses import dataclass
from itertools import product

from .codes import validate_prefix_code
from .tables import NO_PREFIX, TOO_SHORT, Value
from .words import Gen, GenWord, UnknownGenerator


@dataclass(frozen=True)
class MTable:
    """Pairs sorted by domain; domain strings form a prefix code, images are
    arbitrary bitstrings (repeats allowed)."""

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "_map", dict(self.pairs))
        object.__setattr__(self, "_spref",
                           {p[:i] for p, _ in self.pairs for i in range(len(p))})

    @property
    def maxlen(self) -> int:
        return max((len(s) for pq in self.pairs for s in pq), default=0)


def mtable(pairs) -> MTable:
    pairs = sorted(pairs)
    dom = validate_prefix_code(p for p, _ in pairs)
    if len(dom) != len(pairs):
        raise ValueError("repeated domain string")
    return MTable(tuple(pairs))


def bracket(v: str, u: str) -> MTable:
    """The one-pair element sending uz to vz (pop u, then push v)."""
    return mtable([(u, v)])


IDENTITY_M = bracket("", "")

MONOID_GENERATORS = {
    "push0": bracket("0", ""), "push1": bracket("1", ""),
    "pop0": bracket("", "0"), "pop1": bracket("", "1"),
}


def decompose_pushpop(v: str, u: str) -> GenWord:
    """[v <- u] over the four push/pop generators: pop u's letters from the
    first one outward, then push v's letters from the last one inward."""
    pops = [Gen("pop" + c) for c in reversed(u)]
    pushes = [Gen("push" + c) for c in v]
    return GenWord(tuple(pushes + pops))


def apply_m(f: MTable, x: str):
    m = f._map
    for i in range(len(x) + 1):
        q = m.get(x[:i])
        if q is not None:
            return Value(q + x[i:])
    return TOO_SHORT if x in f._spref else NO_PREFIX


def compose_m(f: MTable, g: MTable) -> MTable:
    """f after g by longest-match refinement; pairs whose image leaves f's
    domain ideal entirely are dropped (the composite is undefined there)."""
    out = []
    for p, q in g.pairs:
        hit = False
        for i in range(len(q) + 1):
            s = f._map.get(q[:i])
            if s is not None:
                out.append((p, s + q[i:]))
                hit = True
                break
        if not hit:
            out.extend((p + r[len(q):], s) for r, s in f.pairs if r.startswith(q))
    return mtable(out)


def word_to_mtable(w: GenWord, generators=None) -> MTable:
    gens = MONOID_GENERATORS if generators is None else generators
    f = IDENTITY_M
    for tok in reversed(w.tokens):
        if not isinstance(tok, Gen) or tok.inv:
            raise UnknownGenerator(f"monoid words take plain generator names, got {tok}")
        try:
            f = compose_m(gens[tok.name], f)
        except KeyError:
            raise UnknownGenerator(tok.name) from None
    return f


def action_equal_m(f: MTable, g: MTable, L: int) -> bool:
    """Pointwise agreement of apply_m on all of {0,1}^L."""
    for bits in product("01", repeat=L):
        x = "".join(bits)
        if apply_m(f, x) != apply_m(g, x):
            return False
    return True


def eval_reduction_check(w: GenWord, x: str, y: str, L: int | None = None) -> bool:
    """Decide E_w(x) = y through the identity  E_w . id_x = [y <- x],
    compared as actions at depth L."""
    f = word_to_mtable(w)
    lhs = compose_m(f, bracket(x, x))
    rhs = bracket(y, x)
    if L is None:
        L = max(lhs.maxlen, rhs.maxlen) + 1
    return action_equal_m(lhs, rhs, L)


def eval_direct_m(w: GenWord, x: str, y: str, L: int | None = None) -> bool:
    """Direct evaluation at depth: every continuation z has E_w(xz) = yz."""
    f = word_to_mtable(w)
    if L is None:
        L = max(f.maxlen, len(x), len(y)) + 1
    k = max(L - len(x), 0)
    for bits in product("01", repeat=k):
        z = "".join(bits)
        if apply_m(f, x + z) != Value(y + z):
            return False
    return True
