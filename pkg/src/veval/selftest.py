"""The acceptance suite: ten property-based criteria anchored on the worked
examples and constructions, each with its stated scale and tolerance.

Every criterion returns a CriterionResult; run() executes them in order and
prints one pass/fail line each.  All randomness flows from a single seed.
"""

import random
import time
from dataclasses import dataclass
from itertools import product

from . import circuits, fixators, monoid, products, recognizer
from .codes import complement, complement_single, validate_prefix_code, PrefixCode
from .sampling import (random_2v_table, random_circuit, random_code,
                       random_if_code, random_nonmax_code, random_vtable,
                       random_word)
from .tables import Value, apply, eval_oracle, validate_table
from .words import (Gen, GenSet, GenWord, InputClass, classify_input,
                    default_genset, evaluate, evaluate_universal,
                    long_input_threshold, sequential_apply, word_to_element)

DEFAULT_SEED = 20250810


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{self.number:2d}] {mark}  {self.name}  ({self.seconds:.1f}s)  {self.detail}"


def _bitstrings(maxlen):
    out = [""]
    for L in range(1, maxlen + 1):
        out += ["".join(b) for b in product("01", repeat=L)]
    return out


def _all_words(G, maxlen_w):
    tokens = [Gen(n, i) for n in G.names() for i in (False, True)]
    words = [GenWord(())]
    frontier = [()]
    for _ in range(maxlen_w):
        frontier = [t + (tok,) for t in frontier for tok in tokens]
        words += [GenWord(t) for t in frontier]
    return words


def criterion_1(seed):
    """Worked-example fidelity: the unique maximal extension of the crossing
    table over pairs, and of both its one-sided extensions."""
    t0 = time.time()
    F = products.ntable([
        (("0", "0"), ("0", "0")), (("1", "0"), ("1", "0")),
        (("0", "1"), ("0", "1")), (("1", "10"), ("1", "11")),
        (("1", "11"), ("1", "10"))])
    F1 = products.ntable([
        (("", "0"), ("", "0")), (("0", "1"), ("0", "1")),
        (("1", "10"), ("1", "11")), (("1", "11"), ("1", "10"))])
    F2 = products.ntable([
        (("0", ""), ("0", "")), (("1", "0"), ("1", "0")),
        (("1", "10"), ("1", "11")), (("1", "11"), ("1", "10"))])
    F12 = products.ntable([
        (("", "0"), ("", "0")), (("0", ""), ("0", "")),
        (("1", "10"), ("1", "11")), (("1", "11"), ("1", "10"))])
    ok = all(products.maximal_extension_n(t).pairs == F12.pairs for t in (F, F1, F2))
    return CriterionResult(1, "worked-example extension", ok,
                           "F, F1, F2 all extend to F12" if ok else "extension mismatch",
                           time.time() - t0)


def criterion_2(seed):
    """Three-decider agreement for V evaluation."""
    t0 = time.time()
    G = default_genset()
    xs = _bitstrings(2)
    checked = bad = 0
    for w in _all_words(G, 3):
        table = word_to_element(w, G)
        for x in xs:
            for y in xs:
                a = apply(table, x) == Value(y)
                b = evaluate_universal(w, x, y, G)
                c = fixators.eval_via_commutation(table, x, y, G)
                checked += 1
                if not (a == b == c):
                    bad += 1
    rng = random.Random(seed)
    deep = _bitstrings(5)
    for k in range(10_000):
        w = random_word(rng, G, rng.randint(1, 6))
        x = rng.choice(deep)
        out = sequential_apply(w, x, G)
        y = out.string if out is not None and rng.random() < 0.5 else rng.choice(deep)
        a = evaluate(w, x, y, G)
        b = evaluate_universal(w, x, y, G)
        checked += 1
        if a != b:
            bad += 1
        if k < 500:
            if a != fixators.eval_via_commutation(word_to_element(w, G), x, y, G):
                bad += 1
    return CriterionResult(2, "three-decider agreement", bad == 0,
                           f"{checked} instances, {bad} disagreements",
                           time.time() - t0)


def criterion_3(seed):
    """Long-input semantics: threshold soundness, sequential agreement on
    long inputs, and the short-input witness."""
    t0 = time.time()
    G = default_genset()
    rng = random.Random(seed)
    bad = 0
    for _ in range(10_000):
        w = random_word(rng, G, rng.randint(0, 5), tau_max=3)
        bound = long_input_threshold(w, G)
        n = rng.choice([bound, bound + rng.randint(0, 3), rng.randint(0, max(bound, 1))])
        x = "".join(rng.choice("01") for _ in range(n))
        cls = classify_input(w, x, G)
        if len(x) >= bound and cls is not InputClass.LONG:
            bad += 1
        out = sequential_apply(w, x, G)
        if (out is not None) != (cls is InputClass.LONG):
            bad += 1
        if cls is InputClass.LONG:
            y = out.string
            if not evaluate(w, x, y, G) or evaluate(w, x, y + "0", G):
                bad += 1
    a = Gen("a")
    witness = GenWord((Gen("a", True), a))
    if classify_input(witness, "", G) is not InputClass.SHORT:
        bad += 1
    return CriterionResult(3, "long-input semantics", bad == 0,
                           f"10000 instances + short witness, {bad} violations",
                           time.time() - t0)


def criterion_4(seed):
    """Recognizer against the sequential oracle, both directions, plus the
    step-count bound."""
    t0 = time.time()
    G = default_genset()
    xs = _bitstrings(4)
    bad = runs = 0
    ratio = 0.0
    words = [w for w in _all_words(G, 3) if len(w) >= 1]
    for w in words:
        for x in xs:
            out = sequential_apply(w, x, G)
            for y in xs:
                stream = recognizer.stream_for(w, x, y)
                res = recognizer.recognize_LV(stream, G)
                expect = out == Value(y)
                runs += 1
                if res.accepted != expect:
                    bad += 1
                ratio = max(ratio, res.steps / (len(stream) + res.pushed + 1))
                rres = recognizer.recognize_LV_rev(list(reversed(stream)), G)
                if rres.accepted != expect:
                    bad += 1
    return CriterionResult(4, "recognizer equivalence", bad == 0,
                           f"{runs} streams each way, {bad} disagreements, "
                           f"step ratio <= {ratio:.2f}", time.time() - t0)


def _all_codes(maxlen):
    """Every prefix code (antichain) over depth <= maxlen, including empty."""
    def at(prefix, depth):
        # all antichains within the subtree at `prefix`
        if depth == 0:
            return [[], [prefix]]
        subs = at(prefix + "0", depth - 1)
        out = [[prefix]]
        for left in subs:
            for right in at(prefix + "1", depth - 1):
                out.append(left + right)
        return out
    return at("", maxlen)


def criterion_5(seed):
    """Complement constructions, exhaustively to depth 4.

    Maxlen preservation is asserted as maxlen(P') <= maxlen(P): that is what
    the one-symbol-extension formula guarantees (P = {00, 01} yields
    P' = {1}, so equality fails); see the notes on the construction."""
    t0 = time.time()
    bad = count = 0
    for members in _all_codes(4):
        P = PrefixCode(tuple(sorted(members)))
        Q = complement(P)
        union = validate_prefix_code(P.members + Q.members)
        count += 1
        if union.kraft() != 1 or set(P) & set(Q):
            bad += 1
        if P.members and not P.is_maximal() and (not Q.members or Q.maxlen > P.maxlen):
            bad += 1
    singles = 0
    for u in _bitstrings(8):
        if u:
            singles += 1
            if len(complement_single(u)) != len(u):
                bad += 1
    return CriterionResult(5, "complement constructions", bad == 0,
                           f"{count} codes + {singles} singletons, {bad} failures",
                           time.time() - t0)


def criterion_6(seed):
    """Both commutation tests against their direct deciders."""
    t0 = time.time()
    G = default_genset()
    rng = random.Random(seed)
    bad = memb = 0
    small_tables = _all_tables_maxlen2()
    small_codes = [validate_prefix_code(m) for m in _all_codes(2)
                   if m and not PrefixCode(tuple(sorted(m))).is_maximal()]
    for g in small_tables:
        for P in small_codes:
            memb += 1
            if fixators.commutation_membership(g, P, G) != \
                    fixators.pfix_membership_direct(g, P):
                bad += 1
    for _ in range(500):
        g = random_vtable(rng, 4)
        P = random_nonmax_code(rng, 4)
        memb += 1
        if fixators.commutation_membership(g, P, G) != \
                fixators.pfix_membership_direct(g, P):
            bad += 1
    evals = 0
    deep = [s for s in _bitstrings(3) if s]
    for _ in range(500):
        g = random_vtable(rng, 3)
        x, y = rng.choice(deep), rng.choice(deep)
        if rng.random() < 0.5:
            out = apply(g, x)
            if isinstance(out, Value):
                y = out.string
        evals += 1
        if fixators.eval_via_commutation(g, x, y, G) != eval_oracle(g, x, y):
            bad += 1
    return CriterionResult(6, "commutation tests", bad == 0,
                           f"{memb} membership + {evals} evaluation checks, "
                           f"{bad} disagreements", time.time() - t0)


def _all_tables_maxlen2():
    from itertools import permutations

    codes = [tuple(sorted(m)) for m in _all_codes(2)
             if m and PrefixCode(tuple(sorted(m))).is_maximal()]
    tables = []
    for dom in codes:
        for img in codes:
            if len(dom) == len(img):
                for perm in permutations(img):
                    tables.append(validate_table(zip(dom, perm)))
    return tables


def criterion_7(seed):
    """Circuit compiler: simulation soundness, reduction correctness over all
    outputs, and the cubic size bound."""
    t0 = time.time()
    rng = random.Random(seed)
    gg = circuits.gadget_genset()
    bad = 0
    worst = 0.0
    for _ in range(200):
        C = random_circuit(rng)
        rep = circuits.compile_circuit(C)
        worst = max(worst, rep.size / C.size ** 3)
        n = C.output_width
        ys = ["".join(b) for b in product("01", repeat=n)]
        for bits in product("01", repeat=C.input_width):
            x = "".join(bits)
            val = circuits.circuit_eval(C, x)
            out = sequential_apply(rep.word, "0" + x, gg)
            if out != Value("0" + val + x):
                bad += 1
            for y in ys:
                if (out == Value("0" + y + x)) != (val == y):
                    bad += 1
        x = "".join(rng.choice("01") for _ in range(C.input_width))
        y = circuits.circuit_eval(C, x)
        if not circuits.cvp_decision(C, x, y, gg):
            bad += 1
        if n >= 1 and circuits.cvp_decision(C, x, _flip(y), gg):
            bad += 1
        if circuits.cvp_decision(C, x + "0", y, gg):
            bad += 1
    ok = bad == 0 and worst > 0
    return CriterionResult(7, "circuit compiler", ok,
                           f"200 circuits, {bad} failures, fitted size "
                           f"constant c = {worst:.3f} (size <= c*|C|^3)",
                           time.time() - t0)


def _flip(y):
    return ("1" if y[0] == "0" else "0") + y[1:]


def criterion_8(seed):
    """The 2V suite: joins, essentiality deciders, table decisions, and the
    embedding equivalence."""
    t0 = time.time()
    rng = random.Random(seed)
    bad = 0
    short = [""] + ["".join(b) for L in (1, 2) for b in product("01", repeat=L)]
    pairs = [(a, b) for a in short for b in short]
    for u in pairs:
        for v in pairs:
            j = products.join(u, v)
            comparable = all(a.startswith(b) or b.startswith(a)
                             for a, b in zip(u, v))
            if (j is not None) != comparable:
                bad += 1
    checked = 0
    for members in _small_if_codes(short):
        P = products.TupleCode(tuple(sorted(members)), 2)
        checked += 1
        if products.is_essential(P) != products.is_essential_oracle(P):
            bad += 1
    for _ in range(500):
        P = random_if_code(rng, 3, max_members=4)
        if P is None:
            continue
        checked += 1
        if products.is_essential(P) != products.is_essential_oracle(P):
            bad += 1
    for _ in range(200):
        F = random_2v_table(rng, 2)
        if products.table_checks(F) != products.table_checks_oracle(F):
            bad += 1
    G = default_genset()
    G2 = products.embedding_genset(G)
    emb = 0
    for _ in range(200):
        w = random_word(rng, G, rng.randint(0, 3), tau_max=3)
        W = products.embed_v_to_2v(w)
        x = rng.choice(short)
        y = rng.choice(short)
        if rng.random() < 0.5:
            out = sequential_apply(w, x, G)
            if out is not None:
                y = out.string
        emb += 1
        if evaluate(w, x, y, G) != products.eval2v(W, (x, ""), (y, ""), G2):
            bad += 1
    return CriterionResult(8, "2V suite", bad == 0,
                           f"joins exhaustive, {checked} essentiality checks, "
                           f"200 tables, {emb} embeddings, {bad} failures",
                           time.time() - t0)


def _small_if_codes(short):
    singles = [(a, b) for a in short for b in short]
    out = [[t] for t in singles]
    for i, t in enumerate(singles):
        for j in range(i + 1, len(singles)):
            u = singles[j]
            if not products.le_init(t, u) and not products.le_init(u, t):
                out.append([t, u])
    rng = random.Random(99)
    for _ in range(4000):
        trio = rng.sample(singles, 3)
        if products.is_initial_factor_code(trio):
            out.append(trio)
    return out


def criterion_9(seed):
    """Factorization round trip with the transposition bound."""
    t0 = time.time()
    rng = random.Random(seed)
    bad = 0
    from .tables import equals

    for _ in range(500):
        g = random_vtable(rng, 4)
        fw = fixators.factor_pipeline(g)
        if not equals(fw.product(), g):
            bad += 1
        if fw.transposition_count() > 3 * g.size:
            bad += 1
    return CriterionResult(9, "factorization round-trip", bad == 0,
                           f"500 tables, {bad} failures", time.time() - t0)


def criterion_10(seed):
    """Monoid identities: push/pop decompositions and the evaluation-to-word
    reduction."""
    t0 = time.time()
    rng = random.Random(seed)
    bad = 0
    strs = _bitstrings(3)
    for u in strs:
        for v in strs:
            w = monoid.decompose_pushpop(v, u)
            lhs = monoid.word_to_mtable(w)
            if not monoid.action_equal_m(lhs, monoid.bracket(v, u),
                                         len(u) + len(v) + 1):
                bad += 1
    names = list(monoid.MONOID_GENERATORS)
    for _ in range(500):
        w = GenWord(tuple(Gen(rng.choice(names))
                          for _ in range(rng.randint(0, 4))))
        x, y = rng.choice(strs), rng.choice(strs)
        if rng.random() < 0.5:
            out = monoid.apply_m(monoid.word_to_mtable(w), x)
            if isinstance(out, Value):
                y = out.string
        L = 8
        if monoid.eval_reduction_check(w, x, y, L) != monoid.eval_direct_m(w, x, y, L):
            bad += 1
    return CriterionResult(10, "monoid identities", bad == 0,
                           f"decompositions exhaustive to length 3 + 500 words, "
                           f"{bad} failures", time.time() - t0)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def run(seed: int = DEFAULT_SEED, numbers=None, out=print):
    results = []
    for i, crit in enumerate(CRITERIA, start=1):
        if numbers and i not in numbers:
            continue
        res = crit(seed)
        results.append(res)
        out(res.line())
    return results
