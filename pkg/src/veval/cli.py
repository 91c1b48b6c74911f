"""Command-line front end.

Exit codes: 0 for yes/success, 1 for no, 2 for malformed input.  Decision
subcommands print yes/no; --format json switches to a machine-readable
report.  Randomized runs take --seed.
"""

import argparse
import json
import sys

from . import circuits, fileio, fixators, monoid, products, recognizer, selftest
from .codes import complement, complement_single
from .tables import Value
from .words import (GenSet, classify_input, default_genset, evaluate,
                    evaluate_universal, parse_word, sequential_apply,
                    word_problem, word_problem_via_eval)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_genset(args) -> GenSet:
    if getattr(args, "genset", None):
        return fileio.parse_genset(_read(args.genset))
    return default_genset()


def _word(args):
    if getattr(args, "word_file", None):
        return fileio.parse_word_file(_read(args.word_file))
    return parse_word(args.word)


def _report(args, decision, **extra):
    if args.format == "json":
        print(json.dumps({"decision": decision, **extra}))
    else:
        print("yes" if decision else "no")
        for key, val in extra.items():
            print(f"  {key}: {val}")
    return 0 if decision else 1


def _add_word_args(p, genset=True):
    p.add_argument("--word", help="whitespace-separated tokens, applied right to left")
    p.add_argument("--word-file", help="file of tokens ('-' for stdin)")
    if genset:
        p.add_argument("--genset", help="generating-set file (defaults to the built-in pair)")
    p.add_argument("--format", choices=["text", "json"], default="text")


def cmd_eval(args):
    G = _load_genset(args)
    w = _word(args)
    results = {}
    deciders = args.decider or ["table"]
    if args.cross_check or deciders == ["all"]:
        deciders = ["table", "universal", "commutation"]
    for d in deciders:
        if d == "table":
            results[d] = evaluate(w, args.x, args.y, G)
        elif d == "universal":
            results[d] = evaluate_universal(w, args.x, args.y, G)
        else:
            results[d] = fixators.eval_via_commutation(w, args.x, args.y, G)
    if len(set(results.values())) > 1:
        print(f"decider disagreement: {results}", file=sys.stderr)
        return 2
    return _report(args, next(iter(results.values())), deciders=",".join(results))


def cmd_eval_long(args):
    G = _load_genset(args)
    out = sequential_apply(_word(args), args.x, G)
    return _report(args, out == Value(args.y))


def cmd_classify(args):
    G = _load_genset(args)
    cls = classify_input(_word(args), args.x, G)
    if args.format == "json":
        print(json.dumps({"class": cls.value}))
    else:
        print(cls.value)
    return 0


def cmd_wp(args):
    G = _load_genset(args)
    return _report(args, word_problem(_word(args), G))


def cmd_wp_via_eval(args):
    G = _load_genset(args)
    return _report(args, word_problem_via_eval(_word(args), args.depth, G))


def cmd_recognize(args):
    G = _load_genset(args)
    tokens = _read(args.stream).split()
    try:
        res = (recognizer.recognize_LV_rev if args.rev else recognizer.recognize_LV)(tokens, G)
    except recognizer.FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps({"accepted": res.accepted, "steps": res.steps,
                          "pushed": res.pushed}))
    else:
        print("accept" if res.accepted else "reject")
    return 0 if res.accepted else 1


def cmd_complement(args):
    if args.single is not None:
        out = complement_single(args.single)
    else:
        out = complement(fileio.parse_code(_read(args.code)))
    sys.stdout.write(fileio.format_code(out))
    return 0


def cmd_fixgen(args):
    G = _load_genset(args)
    P = fileio.parse_code(_read(args.code))
    gens = fixators.fixator_generators(P, G)
    for name, table, fword in zip(gens.names, gens.tables, gens.factor_words()):
        print(f"# generator from [{name}]")
        sys.stdout.write(fileio.format_table(table))
        word, _ = fword.as_genword()
        print(f"# word: {word}")
    return 0


def cmd_commtest(args):
    G = _load_genset(args)
    g = fileio.parse_table(_read(args.g))
    P = fileio.parse_code(_read(args.code))
    ok, witness = fixators.commutation_membership_witness(g, P, G)
    return _report(args, ok, **({} if ok else {"witness": witness}))


def cmd_eval_comm(args):
    G = _load_genset(args)
    g = fileio.parse_table(_read(args.g))
    return _report(args, fixators.eval_via_commutation(g, args.x, args.y, G))


def cmd_compile_circuit(args):
    C = fileio.parse_circuit(_read(args.circuit))
    rep = circuits.compile_circuit(C)
    if args.format == "json":
        print(json.dumps({"size": rep.size, "z_len": rep.z_len,
                          "layer_widths": list(rep.layer_widths),
                          "tokens": [str(t) for t in rep.word.tokens]}))
    else:
        print(f"# size {rep.size}, |Z| = {rep.z_len}, widths {list(rep.layer_widths)}")
        print(rep.word)
    return 0


def cmd_cvp(args):
    C = fileio.parse_circuit(_read(args.circuit))
    return _report(args, circuits.cvp_decision(C, args.x, args.y))


def cmd_check2v(args):
    F = fileio.parse_table(_read(args.table))
    if not isinstance(F, products.NTable):
        print("expected an n=2 table file", file=sys.stderr)
        return 2
    answers = products.table_checks(F)
    if args.format == "json":
        print(json.dumps(answers))
    else:
        for q, v in answers.items():
            print(f"{q}={str(v).lower()}")
        if not answers["Q1"]:
            pairs = F.pairs
            for i, (p, fp) in enumerate(pairs):
                for p2, fp2 in pairs[i + 1:]:
                    j = products.join(p, p2)
                    if j is not None and products.tuple_concat(
                            fp, products.quotient(j, p)) != products.tuple_concat(
                            fp2, products.quotient(j, p2)):
                        print(f"  witness: {p} and {p2} disagree at {j}")
                        break
    return 0 if answers["Q5"] else 1


def cmd_extend2v(args):
    F = fileio.parse_table(_read(args.table))
    sys.stdout.write(fileio.format_table(products.maximal_extension_n(F)))
    return 0


def cmd_complement2v(args):
    P = fileio.parse_tuple_code(_read(args.code))
    sys.stdout.write(fileio.format_tuple_code(products.complement_init(P)))
    return 0


def cmd_eval2v(args):
    G2 = fileio.parse_genset_2v(_read(args.genset))
    w = parse_word(args.word)
    x = fileio._parse_tuple(args.x)
    y = fileio._parse_tuple(args.y)
    return _report(args, products.eval2v(w, x, y, G2))


def cmd_embed(args):
    w = _word(args)
    W = products.embed_v_to_2v(w)
    print(W)
    return 0


def cmd_monoid_check(args):
    w = _word(args)
    ok = monoid.eval_reduction_check(w, args.x, args.y, args.depth)
    return _report(args, ok)


def cmd_selftest(args):
    results = selftest.run(seed=args.seed,
                           numbers=set(args.only) if args.only else None)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(json.dumps([r.__dict__ for r in results]))
    print("selftest:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="veval", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("eval", help="decide E_w(x) = y")
    _add_word_args(p)
    p.add_argument("--x", required=True, default="")
    p.add_argument("--y", required=True, default="")
    p.add_argument("--decider", action="append", default=None,
                   choices=["table", "universal", "commutation", "all"])
    p.add_argument("--cross-check", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("eval-long", help="decide the sequential (long-input) relation")
    _add_word_args(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_eval_long)

    p = sub.add_parser("classify", help="long / short / too-short input class")
    _add_word_args(p)
    p.add_argument("--x", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("wp", help="word problem")
    _add_word_args(p)
    p.set_defaults(func=cmd_wp)

    p = sub.add_parser("wp-via-eval", help="word problem through fixed-length evaluation")
    _add_word_args(p)
    p.add_argument("--depth", type=int, default=0)
    p.set_defaults(func=cmd_wp_via_eval)

    p = sub.add_parser("recognize", help="run the stack recognizer on a token stream")
    p.add_argument("stream", help="stream file ('-' for stdin)")
    p.add_argument("--rev", action="store_true")
    p.add_argument("--genset")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("complement", help="complementary prefix code")
    p.add_argument("--code", help="prefix-code file")
    p.add_argument("--single", help="single bitstring")
    p.set_defaults(func=cmd_complement)

    p = sub.add_parser("fixgen", help="generators of the partial fixator of a code")
    p.add_argument("--code", required=True)
    p.add_argument("--genset")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_fixgen)

    p = sub.add_parser("commtest", help="membership in a partial fixator by commutation")
    p.add_argument("--g", required=True, help="table file")
    p.add_argument("--code", required=True)
    p.add_argument("--genset")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_commtest)

    p = sub.add_parser("eval-comm", help="decide g(x) = y by commutation tests")
    p.add_argument("--g", required=True, help="table file")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--genset")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_eval_comm)

    p = sub.add_parser("compile-circuit", help="compile a circuit to a generator word")
    p.add_argument("circuit")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_compile_circuit)

    p = sub.add_parser("cvp", help="circuit-value decision through the compiled word")
    p.add_argument("circuit")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_cvp)

    p = sub.add_parser("check2v", help="the five table decisions for a pair table")
    p.add_argument("table")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check2v)

    p = sub.add_parser("extend2v", help="unique maximal extension of a pair table")
    p.add_argument("table")
    p.set_defaults(func=cmd_extend2v)

    p = sub.add_parser("complement2v", help="complementary initial-factor code")
    p.add_argument("code")
    p.set_defaults(func=cmd_complement2v)

    p = sub.add_parser("eval2v", help="2V evaluation decision")
    p.add_argument("--genset", required=True, help="2V generating-set file")
    p.add_argument("--word", required=True)
    p.add_argument("--x", required=True, help="tuple like (01,e)")
    p.add_argument("--y", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_eval2v)

    p = sub.add_parser("embed", help="translate a word with transpositions into 2V tokens")
    _add_word_args(p, genset=False)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("monoid-check", help="monoid evaluation through the word identity")
    _add_word_args(p, genset=False)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--depth", type=int, default=None)
    p.set_defaults(func=cmd_monoid_check)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--seed", type=int, default=selftest.DEFAULT_SEED)
    p.add_argument("--only", type=int, action="append")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
