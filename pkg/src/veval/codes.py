"""Prefix codes over the binary alphabet: prefix order, Kraft sums, complements.

Bitstrings are plain Python strings over '0'/'1'; the empty string is the
empty word.  Dictionary order coincides with Python string order ("" < "0"
< "00" < "01" < "1"), so sorted() gives the canonical member order used
everywhere in this package.
"""

from dataclasses import dataclass
from fractions import Fraction


class PrefixViolation(ValueError):
    """Two members of a would-be prefix code are prefix-comparable."""

    def __init__(self, p, q):
        super().__init__(f"{p!r} is a prefix of {q!r}")
        self.p = p
        self.q = q


class EmptyInput(ValueError):
    pass


def check_bits(s: str) -> str:
    if s.strip("01"):
        raise ValueError(f"not a bitstring: {s!r}")
    return s


def is_prefix(u: str, v: str) -> bool:
    return v.startswith(u)


@dataclass(frozen=True)
class PrefixCode:
    """Finite prefix-incomparable set of bitstrings, members sorted."""

    members: tuple[str, ...]

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, s):
        return s in self.members

    @property
    def maxlen(self) -> int:
        return max((len(m) for m in self.members), default=0)

    def kraft(self) -> Fraction:
        L = self.maxlen
        return Fraction(sum(1 << (L - len(m)) for m in self.members), 1 << L)

    def is_maximal(self) -> bool:
        return self.kraft() == 1


def validate_prefix_code(strings) -> PrefixCode:
    """Sort, deduplicate and check pairwise prefix-incomparability."""
    members = sorted({check_bits(s) for s in strings})
    # In sorted order a violating pair is adjacent-ish: p < q and p prefix of q
    # implies every string between them also has p as a prefix, so checking
    # consecutive members suffices.
    for p, q in zip(members, members[1:]):
        if q.startswith(p):
            raise PrefixViolation(p, q)
    return PrefixCode(tuple(members))


def prefixes(s: str):
    return (s[:i] for i in range(len(s) + 1))


def complement(P: PrefixCode) -> PrefixCode:
    """A complementary prefix code: P' with P + P' maximal and ideal-disjoint.

    For nonempty non-maximal P this is { xa : x a strict prefix of a member,
    a in {0,1}, xa not a prefix of any member }; maxlen is preserved.  A
    maximal P has complement empty; the empty code gets {""}.
    """
    if not P.members:
        return PrefixCode(("",))
    pref = {x for m in P for x in prefixes(m)}
    spref = {m[:i] for m in P for i in range(len(m))}
    out = {x + a for x in spref for a in "01" if x + a not in pref}
    return PrefixCode(tuple(sorted(out)))


def complement_single(u: str) -> PrefixCode:
    """Complement of the singleton {u}: flip each position after its prefix."""
    check_bits(u)
    if not u:
        raise EmptyInput("the empty string has the empty complement")
    flip = {"0": "1", "1": "0"}
    return PrefixCode(tuple(sorted(u[:j] + flip[u[j]] for j in range(len(u)))))


def equalize_complements(u: str, v: str) -> tuple[PrefixCode, PrefixCode]:
    """Complements of {u} and {v} padded to equal size max(|u|, |v|).

    The smaller complement grows by replacing its (length, dictionary)-least
    member x with {x0, x1} until the cardinalities match; each step keeps it
    a complementary prefix code of the singleton.
    """
    qu = list(complement_single(u))
    qv = list(complement_single(v))
    for q in (qu, qv):
        while len(q) < max(len(u), len(v)):
            x = min(q, key=lambda s: (len(s), s))
            q.remove(x)
            q += [x + "0", x + "1"]
    return PrefixCode(tuple(sorted(qu))), PrefixCode(tuple(sorted(qv)))
