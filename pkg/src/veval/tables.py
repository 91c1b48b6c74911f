"""Table algebra for Thompson's group V.

An element is a finite bijection between two maximal prefix codes, acting on
bitstrings as a right-ideal morphism: a pair (p, q) sends every pz to qz.
Tables with non-maximal codes appear inside construction pipelines and are
tagged relaxed=True.
"""

from dataclasses import dataclass
from itertools import product

from .codes import PrefixCode, PrefixViolation, validate_prefix_code


class NotBijective(ValueError):
    pass


class NotMaximal(ValueError):
    pass


class DepthTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class Value:
    string: str


@dataclass(frozen=True)
class TooShort:
    pass


@dataclass(frozen=True)
class NoPrefix:
    pass


TOO_SHORT = TooShort()
NO_PREFIX = NoPrefix()


@dataclass(frozen=True)
class VTable:
    """Pairs sorted by domain string; construct through validate_table."""

    pairs: tuple[tuple[str, str], ...]
    relaxed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "_map", dict(self.pairs))
        object.__setattr__(self, "_spref",
                           {p[:i] for p, _ in self.pairs for i in range(len(p))})
        object.__setattr__(self, "_ext", None)

    @property
    def domain_code(self) -> PrefixCode:
        return PrefixCode(tuple(p for p, _ in self.pairs))

    @property
    def image_code(self) -> PrefixCode:
        return PrefixCode(tuple(sorted(q for _, q in self.pairs)))

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def maxlen(self) -> int:
        return max((len(s) for pq in self.pairs for s in pq), default=0)

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return inverse(self)


def validate_table(pairs, relaxed: bool = False) -> VTable:
    """Check prefix codes on both sides, bijectivity, and (V flavor) maximality."""
    pairs = sorted(pairs)
    dom = validate_prefix_code(p for p, _ in pairs)
    img = validate_prefix_code(q for _, q in pairs)
    if len(dom) != len(pairs) or len(img) != len(pairs):
        raise NotBijective("repeated domain or image string")
    if not relaxed:
        for side, code in (("domain", dom), ("image", img)):
            if not code.is_maximal():
                raise NotMaximal(f"{side} code has Kraft sum {code.kraft()} != 1")
    return VTable(tuple(pairs), relaxed)


IDENTITY = validate_table([("", "")])


def apply(f: VTable, x: str):
    """Table application: Value(qz) if some (p, q) has x = pz, else
    TooShort (x strictly below the domain code) or NoPrefix (off the ideal)."""
    m = f._map
    for i in range(len(x) + 1):
        q = m.get(x[:i])
        if q is not None:
            return Value(q + x[i:])
    return TOO_SHORT if x in f._spref else NO_PREFIX


def maximal_extension(f: VTable) -> VTable:
    """Merge sibling pairs (p0 -> q0, p1 -> q1) => (p -> q) until none apply."""
    if f._ext is not None:
        return f._ext
    m = dict(f.pairs)
    queue = [p[:-1] for p, _ in f.pairs if p]
    while queue:
        p = queue.pop()
        q0, q1 = m.get(p + "0"), m.get(p + "1")
        if (q0 is not None and q1 is not None and q0[-1:] == "0"
                and q1 == q0[:-1] + "1"):
            del m[p + "0"], m[p + "1"]
            m[p] = q0[:-1]
            if p:
                queue.append(p[:-1])
    ext = VTable(tuple(sorted(m.items())), f.relaxed)
    object.__setattr__(ext, "_ext", ext)
    object.__setattr__(f, "_ext", ext)
    return ext


def compose(f: VTable, g: VTable) -> VTable:
    """f after g: refine g's pairs on f's domain code, then extend maximally."""
    fm = f._map
    fs = f._spref
    out = []
    for p, q in g.pairs:
        for i in range(len(q) + 1):
            s = fm.get(q[:i])
            if s is not None:
                out.append((p, s + q[i:]))
                break
        else:
            if q not in fs:
                continue  # off f's ideal; only possible for relaxed tables
            for r, s in f.pairs:
                if r.startswith(q):
                    out.append((p + r[len(q):], s))
    return maximal_extension(VTable(tuple(sorted(out)), f.relaxed or g.relaxed))


def inverse(f: VTable) -> VTable:
    return VTable(tuple(sorted((q, p) for p, q in f.pairs)), f.relaxed)


def is_identity(f: VTable) -> bool:
    return all(p == q for p, q in f.pairs)


def equals(f: VTable, g: VTable) -> bool:
    """End-equivalence: identical maximal extensions."""
    return maximal_extension(f).pairs == maximal_extension(g).pairs


def action_at_depth(f: VTable, L: int) -> dict[str, str]:
    """Total mapping x -> f(x) on {0,1}^L; the brute-force oracle."""
    if L < f.domain_code.maxlen:
        raise DepthTooSmall(f"need depth >= {f.domain_code.maxlen}, got {L}")
    out = {}
    for bits in product("01", repeat=L):
        x = "".join(bits)
        out[x] = apply(f, x).string
    return out


def eval_oracle(f: VTable, x: str, y: str) -> bool:
    """Decide f(x) = y under maximal extension by enumerating all depth-maxlen
    continuations: true iff f(xz) = yz for every z with |z| = maxlen(f)."""
    L = f.maxlen
    for bits in product("01", repeat=L):
        z = "".join(bits)
        if apply(f, x + z) != Value(y + z):
            return False
    return True


def restrict_to_code(f: VTable, B: PrefixCode) -> VTable:
    """Restriction of f to the right ideal of B (relaxed result in general)."""
    bset = set(B.members)
    bpref = {b[:i] for b in B for i in range(len(b))}
    out = []
    for p, q in f.pairs:
        if any(p[:i] in bset for i in range(len(p) + 1)):
            out.append((p, q))
        elif p in bpref:
            out.extend((b, q + b[len(p):]) for b in B if b.startswith(p) and b != p)
    return VTable(tuple(sorted(out)), relaxed=True)


def transitive_element(u: str, v: str) -> VTable:
    """A table sending the u-cylinder onto the v-cylinder, of size
    1 + max(|u|, |v|): pair u -> v and match equalized complements in
    dictionary order."""
    from .codes import equalize_complements

    qu, qv = equalize_complements(u, v)
    pairs = [(u, v)] + list(zip(qu.members, qv.members))
    return validate_table(pairs)
