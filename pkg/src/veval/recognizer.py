"""One-pass stack recognizer for the long-input evaluation relation of V.

A stream is a token sequence: bits of x reversed, then at least one generator
name, then bits of y.  The machine pushes x reversed, replaces a matched
domain prefix by its image for each generator (rejecting exactly the
non-long inputs), and finally cancels the stack against y.  Generator tokens
arrive in the order they are applied.  The reverse recognizer accepts the
tokenwise reversal of the forward stream, using inverse tables.
"""

from dataclasses import dataclass, field

from .words import Gen, GenSet, GenWord, UnknownGenerator


class FormatError(ValueError):
    pass


@dataclass
class RunResult:
    accepted: bool
    steps: int = 0
    pushed: int = 0
    trace: list = field(default_factory=list)


def stream_for(w: GenWord, x: str, y: str) -> list[str]:
    """Forward stream: x reversed, then w's tokens in application order, then y."""
    return list(reversed(x)) + [str(t) for t in reversed(w.tokens)] + list(y)


def _parse_gen_token(tok: str):
    if tok.endswith("^-1"):
        return Gen(tok[:-3], inv=True)
    return Gen(tok)


def recognize(stream, G: GenSet, reverse: bool = False, trace: bool = False) -> RunResult:
    """Run the stack machine on a token stream; reverse uses inverse tables."""
    res = RunResult(accepted=False)
    stack: list[str] = []
    phase = 1  # 1: leading bits, 2: generators, 3: trailing bits
    rejected = False

    def note(op, cursor):
        if trace:
            res.trace.append((op, cursor))

    for cursor, tok in enumerate(stream):
        res.steps += 1
        note(tok, cursor)
        if tok in ("0", "1"):
            if phase == 2:
                phase = 3
            if rejected:
                continue
            if phase == 1:
                stack.append(tok)
                res.pushed += 1
            else:
                res.steps += 1
                if not stack or stack.pop() != tok:
                    rejected = True
        else:
            if phase == 3:
                raise FormatError("generator token after the trailing bit block")
            phase = 2
            gen = _parse_gen_token(tok)
            try:
                table = G.resolve(gen.inverted() if reverse else gen)
            except UnknownGenerator:
                raise FormatError(f"unknown stream token {tok!r}") from None
            if rejected:
                continue
            m = table._map
            spref = table._spref
            cur = ""
            while cur not in m:
                res.steps += 1
                if cur not in spref or not stack:
                    rejected = True  # mismatch or underflow: not a long input
                    break
                cur += stack.pop()
            else:
                image = m[cur]
                stack.extend(reversed(image))
                res.pushed += len(image)
                res.steps += len(image)
    if phase == 1:
        raise FormatError("stream contains no generator token")
    res.accepted = not rejected and not stack
    return res


def recognize_LV(stream, G: GenSet, trace: bool = False) -> RunResult:
    return recognize(stream, G, reverse=False, trace=trace)


def recognize_LV_rev(stream, G: GenSet, trace: bool = False) -> RunResult:
    return recognize(stream, G, reverse=True, trace=trace)
