#!/usr/bin/env python3
"""Writes the lambda corpus: NAME.lam, NAME.json and, for accepted text,
NAME.canon.lam. Rejected text gets a .json containing null.

Expected ASTs come from this script's own term model and recognizer, not from
the C++ engines.

    tools/gen_corpus.py tests/corpus
"""

import json
import random
import string
import sys
from pathlib import Path

LAMBDA = "λ"
SEED = 20261018


def is_ident(s):
    return (len(s) > 0 and s[0] in string.ascii_letters
            and all(c in string.ascii_letters + string.digits for c in s))


def show(t):
    kind = t[0]
    if kind == "Var":
        return t[1]
    if kind == "Abs":
        return LAMBDA + t[1] + "." + show(t[2])
    return "(" + show(t[1]) + " " + show(t[2]) + ")"


def to_json(t):
    kind = t[0]
    if kind == "Var":
        obj = {"Var": t[1]}
    elif kind == "Abs":
        obj = {"Abs": [t[1], to_json(t[2])]}
    else:
        obj = {"App": [to_json(t[1]), to_json(t[2])]}
    return obj


class Reject(Exception):
    pass


def recognize(s):
    """Recursive descent over the surface grammar; None when s is rejected."""
    pos = 0

    def ident():
        nonlocal pos
        start = pos
        if pos < len(s) and s[pos] in string.ascii_letters:
            pos += 1
            while pos < len(s) and s[pos] in string.ascii_letters + string.digits:
                pos += 1
            return s[start:pos]
        raise Reject

    def expect(c):
        nonlocal pos
        if pos < len(s) and s[pos] == c:
            pos += 1
        else:
            raise Reject

    def term():
        nonlocal pos
        if pos < len(s) and s[pos] == LAMBDA:
            pos += 1
            x = ident()
            expect(".")
            return ("Abs", x, term())
        if pos < len(s) and s[pos] == "(":
            pos += 1
            f = term()
            expect(" ")
            a = term()
            expect(")")
            return ("App", f, a)
        return ("Var", ident())

    try:
        t = term()
    except Reject:
        return None
    return t if pos == len(s) else None


def random_ident(rng):
    first = rng.choice(string.ascii_letters)
    rest = "".join(rng.choice(string.ascii_letters + string.digits)
                   for _ in range(rng.choice([0, 0, 0, 1, 2, 4])))
    return first + rest


def random_term(rng, depth):
    r = rng.random()
    if depth == 0 or r < 0.3:
        return ("Var", random_ident(rng))
    if r < 0.6:
        return ("Abs", random_ident(rng), random_term(rng, depth - 1))
    return ("App", random_term(rng, depth - 1), random_term(rng, depth - 1))


HAND_POSITIVE = {
    "self_apply": "λx.(x x)",
    "var_single": "x",
    "var_long": "abc123XYZ",
    "identity": "λx.x",
    "const": "λx.λy.x",
    "app_vars": "(f a)",
    "app_left_nested": "((f a) b)",
    "app_right_nested": "(f (g a))",
    "omega": "(λx.(x x) λx.(x x))",
    "church_two": "λf.λx.(f (f x))",
    "s_combinator": "λx.λy.λz.((x z) (y z))",
    "binder_digits": "λx1.x1",
    "shadow": "λx.λx.x",
    "app_abs_arg": "(f λx.x)",
    "abs_app_body_then_arg": "(λx.x y)",
}

HAND_NEGATIVE = {
    "empty": "",
    "open_paren": "(x",
    "double_open": "((",
    "close_only": ")",
    "unit_parens": "()",
    "single_parens": "(x)",
    "three_apps": "(x y z)",
    "double_space": "(x  y)",
    "leading_space": " x",
    "trailing_space": "x ",
    "space_in_parens": "( x y)",
    "tab_separator": "(x\ty)",
    "backslash": "\\x.x",
    "lambda_no_binder": "λ.x",
    "lambda_space": "λ x.x",
    "lambda_no_dot": "λx x",
    "lambda_no_body": "λx.",
    "digit_start": "1x",
    "underscore": "a_b",
    "non_ascii_ident": "é",
    "extra_close": "λx.(x x))",
    "two_vars": "x y",
    "dot_only": ".",
    "binder_is_term": "λ(x y).x",
    "inner_newline": "(x\ny)",
    "greek_ident": "α",
}


def mutate(rng, s):
    i = rng.randrange(len(s) + 1)
    op = rng.choice(["drop", "insert", "swap"])
    if op == "drop" and s:
        i = min(i, len(s) - 1)
        return s[:i] + s[i + 1:]
    if op == "swap" and len(s) > 1:
        i = min(i, len(s) - 2)
        return s[:i] + s[i + 1] + s[i] + s[i + 2:]
    return s[:i] + rng.choice(["(", ")", " ", ".", LAMBDA, "_"]) + s[i:]


def write_case(out, name, text, term):
    (out / f"{name}.lam").write_text(text + "\n", encoding="utf-8")
    if term is None:
        (out / f"{name}.json").write_text("null\n", encoding="utf-8")
        return
    encoded = json.dumps(to_json(term), separators=(",", ":"), ensure_ascii=False)
    (out / f"{name}.json").write_text(encoded + "\n", encoding="utf-8")
    (out / f"{name}.canon.lam").write_text(show(term) + "\n", encoding="utf-8")


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/corpus")
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)

    for name, text in HAND_POSITIVE.items():
        t = recognize(text)
        assert t is not None and show(t) == text, name
        write_case(out, f"pos_{name}", text, t)
    for name, text in HAND_NEGATIVE.items():
        assert recognize(text) is None, name
        write_case(out, f"neg_{name}", text, None)

    seen = set(HAND_POSITIVE.values())
    n = 0
    while n < 50:
        t = random_term(rng, rng.randint(1, 5))
        text = show(t)
        if text in seen:
            continue
        seen.add(text)
        assert recognize(text) == t
        write_case(out, f"pos_gen{n:03d}", text, t)
        n += 1

    n = 0
    while n < 25:
        base = show(random_term(rng, rng.randint(1, 4)))
        text = mutate(rng, base)
        if text in seen or recognize(text) is not None:
            continue
        seen.add(text)
        write_case(out, f"neg_gen{n:03d}", text, None)
        n += 1


if __name__ == "__main__":
    main()
