"""Strictly layered boolean circuits and their compilation to generator words.

A circuit is evaluated layer by layer (the independent truth-table oracle)
and compiled to a word over the gate-simulation tables plus bit
transpositions.  The compiled word realizes 0x -> 0 C(x) x on every input,
with 0x a long data input, which yields the circuit-value reduction
C(x) = y  iff  word(0x) = 0 y x.
"""

from dataclasses import dataclass
from itertools import product

from .codes import validate_prefix_code
from .tables import VTable, validate_table
from .words import Gen, GenSet, GenWord, Tau, Value, sequential_apply

GATES = {
    "AND": (2, 1), "OR": (2, 1), "NOT": (1, 1),
    "FORK": (1, 2), "SWAP": (2, 2), "ID": (1, 1),
}

GATE_FUNCS = {
    "AND": lambda b: str(int(b[0] == b[1] == "1")),
    "OR": lambda b: str(int("1" in b)),
    "NOT": lambda b: "1" if b == "0" else "0",
    "FORK": lambda b: b + b,
    "SWAP": lambda b: b[1] + b[0],
    "ID": lambda b: b,
}


class WidthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Circuit:
    input_width: int
    layers: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if self.input_width < 1:
            raise ValueError("need at least one input wire")
        width = self.input_width
        for layer in self.layers:
            if not layer:
                raise ValueError("empty layer")
            consumed = sum(GATES[g][0] for g in layer)
            if consumed != width:
                raise ValueError(f"layer {layer} consumes {consumed} wires, "
                                 f"previous width is {width}")
            width = sum(GATES[g][1] for g in layer)

    @property
    def size(self) -> int:
        return sum(len(layer) for layer in self.layers)

    @property
    def layer_widths(self) -> list[int]:
        """Wire counts [|Y^0| = m, |Y^1|, ..., |Y^L| = n]."""
        widths = [self.input_width]
        for layer in self.layers:
            widths.append(sum(GATES[g][1] for g in layer))
        return widths

    @property
    def output_width(self) -> int:
        return self.layer_widths[-1]


def circuit_eval(C: Circuit, x: str) -> str:
    """Truth-table evaluation, the module's independent oracle."""
    if len(x) != C.input_width:
        raise WidthMismatch(f"expected {C.input_width} input bits, got {len(x)}")
    for layer in C.layers:
        out, pos = [], 0
        for g in layer:
            fan_in, _ = GATES[g]
            out.append(GATE_FUNCS[g](x[pos:pos + fan_in]))
            pos += fan_in
        x = "".join(out)
    return x


def simulation_gadget(f, m: int, n: int) -> VTable:
    """A table with 0x -> 0 f(x) x on all m-bit x.  The 1-cylinder is split
    into a comb matched, in dictionary order, against the complementary code
    of the image side."""
    from .codes import complement

    pairs = [("0" + x, "0" + f(x) + x)
             for x in ("".join(b) for b in product("01", repeat=m))]
    img_rest = complement(validate_prefix_code(q for _, q in pairs))
    comb = ["1" + "0" * (len(img_rest) - 1)] + \
           ["1" + "0" * j + "1" for j in range(len(img_rest) - 1)]
    pairs += list(zip(sorted(comb), img_rest.members))
    return validate_table(pairs)


_GADGETS = {}


def gate_gadget(gate: str) -> VTable:
    if gate not in _GADGETS:
        m, n = GATES[gate]
        _GADGETS[gate] = simulation_gadget(GATE_FUNCS[gate], m, n)
    return _GADGETS[gate]


def gadget_genset() -> GenSet:
    return GenSet({g: gate_gadget(g) for g in GATES})


def sigma_shift(j: int) -> GenWord:
    """Cyclic shift sending position j to the front of positions 1..j,
    as the composite of j-1 adjacent transpositions."""
    if j < 2:
        raise ValueError("shift needs a window of at least 2 positions")
    return GenWord(tuple(Tau(i) for i in range(1, j)))


def _rot_left(a: int, b: int) -> list:
    """Tokens (written order) moving position a to position b, positions
    in between shifting left; identity when the window is trivial."""
    return [Tau(i) for i in range(b - 1, a - 1, -1)]


def _rot_right(a: int, b: int) -> list:
    return [Tau(i) for i in range(a, b)]


def compile_layer(layer, in_width: int) -> GenWord:
    """Word realizing 0 Y_in -> 0 Y_out Y_in for one layer.

    Gates run left to right; before gate t the tracked region is
    0 . outputs(1..t-1) . inputs(t..) . inputs(1..t-1).  Each gate block
    rotates its input to the front, applies the gadget, parks the consumed
    input at the region's end, and slots the fresh output after the earlier
    ones.  All windows stay inside the tracked region, so deeper suffixes
    are untouched.
    """
    consumed = sum(GATES[g][0] for g in layer)
    if consumed != in_width:
        raise ValueError("layer does not consume the given width")
    blocks = []
    p = 0  # outputs produced so far
    remaining = in_width  # inputs not yet consumed (including gate t's)
    done = 0  # inputs already parked at the end
    for g in layer:
        m, n = GATES[g]
        tokens = []
        if p > 0:
            tokens += _rot_right(2, 1 + p + m) * m
        block = [Gen(g)] + tokens  # gadget applied after the rotation
        region = 1 + p + n + in_width
        if remaining - m + done > 0:
            block = _rot_left(2 + n, region) * m + block
        if p > 0:
            block = _rot_left(2, 1 + n + p) * n + block
        blocks.append(block)
        p += n
        remaining -= m
        done += m
    tokens = []
    for block in blocks:
        tokens = block + tokens  # first gate's block ends up rightmost
    return GenWord(tuple(tokens))


@dataclass(frozen=True)
class CompileReport:
    word: GenWord
    size: int
    layer_widths: tuple[int, ...]
    z_len: int


def compile_circuit(C: Circuit) -> CompileReport:
    """The full simulation word:

        pi2 . (w_{L-1} ... w_1)^-1 . pi1 . w_L w_{L-1} ... w_1

    where the layer words stack outputs in front, pi1 parks the final output
    behind everything, the inverted prefix un-computes the intermediate
    layers, and pi2 swaps the output past the input."""
    widths = C.layer_widths
    m, n = widths[0], widths[-1]
    layer_words = [compile_layer(layer, w) for layer, w in zip(C.layers, widths)]
    z_len = 1 + n + m + sum(widths[1:-1])

    forward = []
    for w in layer_words:
        forward = list(w.tokens) + forward
    prefix = []
    for w in layer_words[:-1]:
        prefix = list(w.tokens) + prefix
    undo = [t.inverted() for t in reversed(prefix)]
    pi1 = _rot_left(2, z_len) * n
    pi2 = _rot_left(2, 1 + n + m) * m
    word = GenWord(tuple(pi2 + undo + pi1 + forward))
    return CompileReport(word, word.size, tuple(widths), z_len)


def cvp_reduce(C: Circuit, x: str, y: str):
    """The reduction triple (w_C, 0x, 0yx)."""
    rep = compile_circuit(C)
    return rep.word, "0" + x, "0" + y + x


def cvp_decision(C: Circuit, x: str, y: str, G: GenSet | None = None) -> bool:
    """Decide C(x) = y through the compiled word.  Width mismatches are a
    plain no.  0x is a long input for w_C, so the sequential application
    decides the evaluation relation."""
    if len(x) != C.input_width or len(y) != C.output_width:
        return False
    word, inp, out = cvp_reduce(C, x, y)
    return sequential_apply(word, inp, G or gadget_genset()) == Value(out)
