"""File formats: prefix codes, tables, generating sets, words, and circuits.

All formats are line-oriented text; '#' starts a comment line and 'e' denotes
the empty string.
"""

from .circuits import GATES, Circuit
from .codes import PrefixCode, validate_prefix_code
from .monoid import MTable, mtable
from .products import NTable, Gen2Set, ntable
from .tables import VTable, validate_table
from .words import GenSet, GenWord, parse_word


def _lines(text: str):
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def _bits(tok: str) -> str:
    return "" if tok == "e" else tok


def _unbits(s: str) -> str:
    return s if s else "e"


def parse_code(text: str) -> PrefixCode:
    return validate_prefix_code(_bits(line) for line in _lines(text))


def format_code(P: PrefixCode) -> str:
    return "\n".join(_unbits(m) for m in P) + "\n"


def _parse_pair_line(line: str):
    lhs, _, rhs = line.partition("->")
    if not _:
        raise ValueError(f"expected 'u -> v', got {line!r}")
    return lhs.strip(), rhs.strip()


def _parse_tuple(tok: str):
    if not (tok.startswith("(") and tok.endswith(")")):
        raise ValueError(f"expected '(u,v)', got {tok!r}")
    return tuple(_bits(part.strip()) for part in tok[1:-1].split(","))


def _format_tuple(t) -> str:
    return "(" + ",".join(_unbits(s) for s in t) + ")"


def parse_table(text: str):
    """A table file: optional headers n=1|2 and flavor=monoid|relaxed, then
    pair lines.  Returns a VTable, MTable, or NTable accordingly."""
    n, flavor = 1, "group"
    pairs = []
    for line in _lines(text):
        if line.startswith("n="):
            n = int(line[2:])
        elif line.startswith("flavor="):
            flavor = line[7:].strip()
        else:
            pairs.append(_parse_pair_line(line))
    if n == 1:
        if flavor == "monoid":
            return mtable((_bits(u), _bits(v)) for u, v in pairs)
        relaxed = flavor == "relaxed"
        return validate_table(((_bits(u), _bits(v)) for u, v in pairs), relaxed)
    return ntable(((_parse_tuple(u), _parse_tuple(v)) for u, v in pairs), n)


def format_table(t) -> str:
    if isinstance(t, NTable):
        head = f"n={t.n}\n"
        body = "\n".join(f"{_format_tuple(p)} -> {_format_tuple(q)}" for p, q in t.pairs)
    else:
        head = "n=1\n"
        if isinstance(t, MTable):
            head += "flavor=monoid\n"
        elif isinstance(t, VTable) and t.relaxed:
            head += "flavor=relaxed\n"
        body = "\n".join(f"{_unbits(p)} -> {_unbits(q)}" for p, q in t.pairs)
    return head + body + "\n"


def parse_genset(text: str) -> GenSet:
    """Named sections '[name]', each a block of pair lines; optional header
    tau=on|off enabling transposition tokens (on by default)."""
    tables, current, pairs = {}, None, []
    allow_tau = True

    def flush():
        if current is not None:
            tables[current] = validate_table(pairs)

    for line in _lines(text):
        if line.startswith("tau="):
            allow_tau = line[4:].strip() != "off"
        elif line.startswith("[") and line.endswith("]"):
            flush()
            current, pairs = line[1:-1].strip(), []
        else:
            u, v = _parse_pair_line(line)
            pairs.append((_bits(u), _bits(v)))
    flush()
    return GenSet(tables, allow_tau=allow_tau)


def format_genset(G: GenSet) -> str:
    out = [] if G.allow_tau else ["tau=off"]
    for name, t in G.tables.items():
        out.append(f"[{name}]")
        out += [f"{_unbits(p)} -> {_unbits(q)}" for p, q in t.pairs]
    return "\n".join(out) + "\n"


def parse_genset_2v(text: str) -> Gen2Set:
    tables, current, pairs = {}, None, []

    def flush():
        if current is not None:
            tables[current] = ntable(pairs, 2)

    for line in _lines(text):
        if line.startswith("n="):
            continue
        if line.startswith("[") and line.endswith("]"):
            flush()
            current, pairs = line[1:-1].strip(), []
        else:
            u, v = _parse_pair_line(line)
            pairs.append((_parse_tuple(u), _parse_tuple(v)))
    flush()
    return Gen2Set(tables)


def parse_word_file(text: str) -> GenWord:
    tokens = []
    for line in _lines(text):
        tokens += parse_word(line).tokens
    return GenWord(tuple(tokens))


def parse_circuit(text: str) -> Circuit:
    """'inputs m', then 'layer G1 G2 ...' lines, then optional 'outputs n'
    checked against the computed width."""
    m, layers, declared_out = None, [], None
    for line in _lines(text):
        parts = line.split()
        if parts[0] == "inputs":
            m = int(parts[1])
        elif parts[0] == "layer":
            for g in parts[1:]:
                if g.upper() not in GATES:
                    raise ValueError(f"unknown gate {g!r}")
            layers.append(tuple(g.upper() for g in parts[1:]))
        elif parts[0] == "outputs":
            declared_out = int(parts[1])
        else:
            raise ValueError(f"unrecognized circuit line: {line!r}")
    if m is None:
        raise ValueError("missing 'inputs m' line")
    C = Circuit(m, tuple(layers))
    if declared_out is not None and declared_out != C.output_width:
        raise ValueError(f"declared {declared_out} outputs, circuit has {C.output_width}")
    return C


def format_circuit(C: Circuit) -> str:
    lines = [f"inputs {C.input_width}"]
    lines += ["layer " + " ".join(layer) for layer in C.layers]
    lines.append(f"outputs {C.output_width}")
    return "\n".join(lines) + "\n"


def parse_tuple_code(text: str, n: int = 2):
    from .products import tuple_code

    members = []
    for line in _lines(text):
        if line.startswith("n="):
            n = int(line[2:])
            continue
        members.append(_parse_tuple(line))
    return tuple_code(members, n)


def format_tuple_code(S) -> str:
    return f"n={S.n}\n" + "\n".join(_format_tuple(t) for t in S) + "\n"
