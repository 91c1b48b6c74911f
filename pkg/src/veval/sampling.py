"""Seeded random generators for codes, tables, words, circuits, and 2V data.

Everything takes an explicit random.Random so test corpora are reproducible
from a single seed.
"""

import random

from .circuits import GATES, Circuit
from .codes import PrefixCode, validate_prefix_code
from .products import NTable, ntable
from .tables import VTable, validate_table
from .words import Gen, GenSet, GenWord, Tau


def random_code(rng: random.Random, maxlen: int, split_p: float = 0.55) -> PrefixCode:
    """A random maximal prefix code of depth <= maxlen."""
    members = []

    def grow(prefix, depth):
        if depth < maxlen and rng.random() < split_p:
            grow(prefix + "0", depth + 1)
            grow(prefix + "1", depth + 1)
        else:
            members.append(prefix)

    grow("", 0)
    return validate_prefix_code(members)


def random_code_of_size(rng: random.Random, size: int, maxlen: int) -> PrefixCode:
    """A random maximal prefix code with exactly `size` members."""
    if size > 2 ** maxlen:
        raise ValueError("size does not fit in the given depth")
    members = []

    def grow(prefix, depth, leaves):
        if leaves == 1:
            members.append(prefix)
            return
        cap = 2 ** (maxlen - depth - 1)
        left = rng.randint(max(1, leaves - cap), min(leaves - 1, cap))
        grow(prefix + "0", depth + 1, left)
        grow(prefix + "1", depth + 1, leaves - left)

    grow("", 0, size)
    return validate_prefix_code(members)


def random_nonmax_code(rng: random.Random, maxlen: int) -> PrefixCode:
    """A nonempty, non-maximal prefix code."""
    while True:
        full = random_code(rng, maxlen)
        if len(full) < 2:
            continue
        k = rng.randint(1, len(full) - 1)
        return validate_prefix_code(rng.sample(full.members, k))


def random_vtable(rng: random.Random, maxlen: int) -> VTable:
    dom = random_code(rng, maxlen)
    img = random_code_of_size(rng, len(dom), maxlen)
    images = list(img.members)
    rng.shuffle(images)
    return validate_table(zip(dom.members, images))


def random_word(rng: random.Random, G: GenSet, length: int,
                tau_max: int = 0) -> GenWord:
    names = G.names()
    tokens = []
    for _ in range(length):
        if tau_max and rng.random() < 0.3:
            tokens.append(Tau(rng.randint(1, tau_max)))
        else:
            tokens.append(Gen(rng.choice(names), inv=rng.random() < 0.5))
    return GenWord(tuple(tokens))


def random_circuit(rng: random.Random, max_inputs: int = 6, max_layers: int = 4,
                   max_size: int = 12, max_outputs: int = 8) -> Circuit:
    """A random strictly layered circuit within the given bounds."""
    while True:
        m = rng.randint(1, max_inputs)
        layers = []
        width, total = m, 0
        for _ in range(rng.randint(1, max_layers)):
            layer, need = [], width
            while need:
                g = rng.choice([g for g in GATES if GATES[g][0] <= need])
                layer.append(g)
                need -= GATES[g][0]
            layers.append(tuple(layer))
            width = sum(GATES[g][1] for g in layer)
            total += len(layer)
            if total > max_size or width > max_outputs:
                break
        else:
            if total <= max_size and width <= max_outputs:
                return Circuit(m, tuple(layers))


def random_tuple(rng: random.Random, maxlen: int, n: int = 2):
    return tuple("".join(rng.choice("01") for _ in range(rng.randint(0, maxlen)))
                 for _ in range(n))


def random_if_code(rng: random.Random, maxlen: int, max_members: int = 3,
                   n: int = 2):
    """A random initial-factor code built greedily."""
    members = []
    for _ in range(20):
        t = random_tuple(rng, maxlen, n)
        from .products import le_init

        if all(not le_init(t, m) and not le_init(m, t) for m in members):
            members.append(t)
            if len(members) >= max_members:
                break
    return ntable([(m, m) for m in members], n).domain() if members else None


def random_joinless_code(rng: random.Random, maxlen: int, n: int = 2):
    """A random finite maximal joinless code, grown by splitting."""
    from .products import tuple_code

    members = [("",) * n]
    for _ in range(rng.randint(0, 4)):
        t = members.pop(rng.randrange(len(members)))
        i = rng.randrange(n)
        if len(t[i]) >= maxlen:
            members.append(t)
            continue
        for a in "01":
            members.append(tuple(s + a if j == i else s for j, s in enumerate(t)))
    return tuple_code(members, n)


def random_2v_table(rng: random.Random, maxlen: int, n: int = 2) -> NTable:
    from .products import validate_2v_table

    while True:
        dom = random_joinless_code(rng, maxlen, n)
        img = random_joinless_code(rng, maxlen, n)
        if len(dom) == len(img):
            images = list(img.members)
            rng.shuffle(images)
            return validate_2v_table(zip(dom.members, images), n)
