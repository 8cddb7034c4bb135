"""Command-line front end: analyze, transform, generate, enumerate, verify.

Words are positional arguments; an argument of the form ``@path`` is
replaced by the words in that file, one per line.  Exit status is 0 on
success, 1 when a verified claim is refuted or errors, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import ast
import json
import sys
from collections.abc import Mapping

from . import factors, lyndon, palindromes, repetitions, transforms, words
from .errors import BadFilterExpression, LengthCapExceeded, ParseError, UnknownClaim, UnknownProperty, WordError
from .infinite import InfiniteWordSpec, overlap_free_dyck_generate, prefix
from .words import Word, all_words, parse_word

LIST_CAP = 26
EXPENSIVE_CAP = 22


# --- properties -------------------------------------------------------------------------

# name -> (function of a Word, cheap?)
PROPERTIES = {
    "length": (len, True),
    "sigma": (lambda u: u.sigma, True),
    "palindrome": (palindromes.is_palindrome, True),
    "antipalindrome": (palindromes.is_antipalindrome, True),
    "primitive": (words.is_primitive, True),
    "asymmetric": (words.is_asymmetric, True),
    "lyndon": (lyndon.is_lyndon, True),
    "dyck": (words.is_dyck, True),
    "tangram": (words.is_tangram, True),
    "abelian_square": (words.is_abelian_square, True),
    "min_period": (words.min_period, True),
    "exponent": (words.exponent, True),
    "palindromic_length": (palindromes.palindromic_length, True),
    "palindrome_count": (palindromes.palindrome_count, True),
    "palindromic_factors": (palindromes.palindromic_factors, True),
    "rich": (palindromes.is_rich, True),
    "weakly_rich": (palindromes.is_weakly_rich, True),
    "circularly_rich": (palindromes.is_circularly_rich, True),
    "two_palindrome_product": (palindromes.is_two_palindrome_product, True),
    "minimal_palindromic": (palindromes.is_minimal_palindromic, True),
    "abelian_unbordered": (palindromes.is_abelian_unbordered, True),
    "square_free": (lambda u: not repetitions.contains_square(u), True),
    "overlap_free": (repetitions.is_overlap_free, True),
    "cube_free": (repetitions.is_cube_free, True),
    "max_exponent": (repetitions.max_exponent, True),
    "runs": (lambda u: [r.to_json() for r in repetitions.runs(u)], True),
    "runs_count": (lambda u: len(repetitions.runs(u)), True),
    "sum_of_exponents": (repetitions.sum_of_exponents, True),
    "primitive_rooted_squares": (repetitions.distinct_primitive_rooted_squares, True),
    "antisquare": (repetitions.is_antisquare, True),
    "minimal_antisquare": (repetitions.is_minimal_antisquare, True),
    "balanced": (lyndon.is_balanced, True),
    "christoffel": (lyndon.is_christoffel, True),
    "minimal_unbalanced": (lyndon.is_minimal_unbalanced, True),
    "ghs_debruijn": (lyndon.is_generalized_debruijn_ghs, True),
    "factor_count": (factors.factor_count, True),
    "bispecial": (lambda u: factors.special_factors(u).bispecial, True),
    "highly_bispecial": (factors.is_highly_bispecial, True),
    "minimal_forbidden_words": (factors.minimal_forbidden_words, True),
    "mirror": (words.mirror, True),
    "complement": (words.complement, True),
    "derivative": (transforms.derivative, True),
    "pansiot": (transforms.pansiot, True),
    "tau": (lambda u: transforms.apply_morphism(transforms.TAU, u), True),
    "bwt": (transforms.bwt, True),
    "standard_permutation": (transforms.standard_permutation, True),
    "bwt_image": (transforms.is_bwt_image, True),
    "rotation_of_own_bwt": (transforms.is_rotation_of_own_bwt, True),
    "two_lyndon_factorizations": (lyndon.two_lyndon_factorizations, True),
    "right_lyndon_tree": (lyndon.right_lyndon_tree, True),
    "restivo_salemi": (lambda u: [list(d) for d in repetitions.restivo_salemi_decompose(u)], True),
    "shuffle_square": (words.is_shuffle_square, False),
    "reverse_shuffle_square": (words.is_reverse_shuffle_square, False),
    "smallest_attractor": (lambda u: factors.smallest_attractor(u)._asdict(), False),
    "minimal_pal_specification": (lambda u: palindromes.minimal_pal_specification(u)._asdict(), False),
}


def cheap_properties() -> list[str]:
    return [name for name, (_, cheap) in PROPERTIES.items() if cheap]


def property_value(name: str, u: Word):
    """Value of one property, or None where it is undefined for ``u``."""
    try:
        fn, _ = PROPERTIES[name]
    except KeyError:
        raise UnknownProperty(name) from None
    try:
        return fn(u)
    except WordError:
        return None


def analyze(u: Word, props: list[str] | None = None) -> dict:
    names = props or cheap_properties()
    for name in names:
        if name not in PROPERTIES:
            raise UnknownProperty(f"unknown property {name!r}; see 'wordlab analyze --list'")
    from .claims.core import normalize

    return {"word": str(u), **{name: normalize(property_value(name, u)) for name in names}}


# --- filter expressions -----------------------------------------------------------------

_ALLOWED = (
    ast.Expression, ast.BoolOp, ast.And, ast.Or, ast.UnaryOp, ast.Not, ast.USub, ast.UAdd,
    ast.Compare, ast.Eq, ast.NotEq, ast.Lt, ast.LtE, ast.Gt, ast.GtE, ast.In, ast.NotIn,
    ast.BinOp, ast.Add, ast.Sub, ast.Mult, ast.FloorDiv, ast.Mod, ast.Name, ast.Load, ast.Constant,
)


class _Lazy(Mapping):
    """Name lookup for a filter: properties computed on first use."""

    def __init__(self, u: Word):
        self.u = u
        self.cache = {"word": str(u)}

    def __getitem__(self, name):
        if name not in self.cache:
            self.cache[name] = property_value(name, self.u)
        return self.cache[name]

    def __iter__(self):
        return iter(self.cache)

    def __len__(self):
        return len(self.cache)


def compile_filter(text: str):
    """Check a filter such as ``"rich and not palindrome"``; returns (code, names used)."""
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise BadFilterExpression(f"cannot parse filter {text!r}: {exc.msg}") from None
    names = set()
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED):
            raise BadFilterExpression(f"{type(node).__name__} is not allowed in a filter")
        if isinstance(node, ast.Name):
            if node.id != "word" and node.id not in PROPERTIES:
                raise BadFilterExpression(f"unknown name {node.id!r} in filter")
            names.add(node.id)
        if isinstance(node, ast.Constant) and not isinstance(node.value, (int, str)):
            raise BadFilterExpression(f"constant {node.value!r} is not allowed in a filter")
    return compile(tree, "<filter>", "eval"), names


def enumerate_words(n: int, filter_text: str | None = None, sigma: int = 2):
    if n < 0:
        raise ParseError("length must be non-negative")
    code, names = compile_filter(filter_text) if filter_text else (None, set())
    if n > LIST_CAP:
        raise LengthCapExceeded(f"enumeration is capped at length {LIST_CAP}")
    if n > EXPENSIVE_CAP and any(not PROPERTIES[x][1] for x in names if x != "word"):
        raise LengthCapExceeded(f"expensive filters are capped at length {EXPENSIVE_CAP}")
    for s in all_words(n, sigma):
        u = Word(s, sigma)
        if code is None:
            yield u
            continue
        try:
            keep = eval(code, {"__builtins__": {}}, _Lazy(u))
        except TypeError as exc:  # e.g. comparing an undefined (None) value
            raise BadFilterExpression(f"filter failed on {s!r}: {exc}") from None
        if keep:
            yield u


# --- input and output -------------------------------------------------------------------


def read_words(args: list[str]) -> list[Word]:
    out = []
    for arg in args:
        if arg.startswith("@"):
            try:
                with open(arg[1:], encoding="utf-8") as fh:
                    lines = [line.strip() for line in fh]
            except OSError as exc:
                raise ParseError(f"cannot read {arg[1:]}: {exc.strerror}") from None
            out.extend(parse_word(line) for line in lines if line and not line.startswith("#"))
        else:
            out.append(parse_word(arg))
    return out


def _show(value) -> str:
    if isinstance(value, str):
        return value if value else "ε"
    return json.dumps(value, ensure_ascii=False)


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _aligned(rows) -> None:
    rows = list(rows)
    width = max((len(k) for k, _ in rows), default=0)
    for key, value in rows:
        print(f"{key.ljust(width)}  {value}")


# --- commands ---------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    if args.list:
        _aligned((name, "cheap" if cheap else "expensive") for name, (_, cheap) in PROPERTIES.items())
        return 0
    props = [p.strip() for p in args.props.split(",") if p.strip()] if args.props else None
    targets = read_words(args.words) if args.words else [Word("")]
    reports = [analyze(u, props) for u in targets]
    if args.json:
        _emit_json(reports[0] if len(reports) == 1 else reports)
        return 0
    for i, report in enumerate(reports):
        if i:
            print()
        _aligned((k, _show(v)) for k, v in report.items())
    return 0


TRANSFORMS = {
    "mirror": words.mirror,
    "complement": words.complement,
    "derivative": transforms.derivative,
    "pansiot": transforms.pansiot,
    "bwt": transforms.bwt,
    "inverse-bwt": transforms.inverse_bwt,
    "standard-permutation": lambda u: list(transforms.standard_permutation(u)),
    "tau": lambda u: transforms.apply_morphism(transforms.TAU, u),
}


def cmd_transform(args) -> int:
    if args.op == "morphism":
        if not args.morphism:
            raise ParseError("transform morphism needs --morphism, e.g. 0:01,1:10")
        m = transforms.NAMED_MORPHISMS.get(args.morphism) or transforms.Morphism.parse(args.morphism)
        fn = m
    else:
        fn = TRANSFORMS[args.op]
    results = [(str(u), fn(u)) for u in read_words(args.words)]
    if args.json:
        rows = [{"word": u, "result": r if isinstance(r, list) else str(r)} for u, r in results]
        _emit_json(rows[0] if len(rows) == 1 else rows)
    else:
        for _, r in results:
            print(_show(r if isinstance(r, list) else str(r)))
    return 0


def cmd_generate(args) -> int:
    kind, n = args.kind, args.n
    if kind == "debruijn-fm":
        out = [lyndon.debruijn_fm(n)]
    elif kind == "debruijn-au":
        out = [lyndon.generalized_debruijn_au(n)]
    elif kind == "pre-antipalindromes":
        out = sorted(transforms.generate_pre_antipalindromes(n))
    elif kind == "overlap-free-dyck":
        out = sorted(overlap_free_dyck_generate(n), key=lambda u: (len(u), u))
    elif kind == "lyndon":
        out = sorted(lyndon.lyndon_words(n, args.sigma), key=lambda u: (len(u), u))
    else:  # fixed-point
        if not args.spec:
            raise ParseError("generate fixed-point needs --spec, e.g. named:thue_morse")
        out = [prefix(InfiniteWordSpec.parse(args.spec), n)]
    out = [str(u) for u in out]
    if args.json:
        _emit_json(out)
    else:
        for u in out:
            print(_show(u))
    return 0


def cmd_enumerate(args) -> int:
    found = enumerate_words(args.n, args.filter, args.sigma)
    if args.emit == "count":
        count = sum(1 for _ in found)
        print(json.dumps({"n": args.n, "count": count}) if args.json else count)
        return 0
    listed = [str(u) for u in found]
    if args.json:
        _emit_json(listed)
    else:
        for u in listed:
            print(_show(u))
    return 0


def cmd_verify(args) -> int:
    from .claims import REGISTRY, claim_ids, run_all, run_claim

    if args.list:
        for i in claim_ids(args.tag):
            r = REGISTRY[i]
            print(f"{i}  [{r.provenance}, {r.cost}]  {r.statement}")
        return 0
    if args.all or args.tag:
        reports = run_all(args.tag, args.budget, args.jobs)
    elif args.ids:
        for i in args.ids:
            if i not in REGISTRY:
                raise UnknownClaim(i)
        reports = [run_claim(i, args.budget) for i in sorted(set(args.ids))]
    else:
        raise ParseError("give claim ids, --all or --tag")
    bad = [r for r in reports if r.status in ("refuted", "error")]
    if args.json:
        _emit_json([r.to_json(args.timings) for r in reports])
    else:
        width = max((len(r.id) for r in reports), default=0)
        for r in reports:
            line = f"{r.id.ljust(width)}  {r.status:<20}  {r.bound}"
            if args.timings and r.elapsed_ms is not None:
                line += f"  ({r.elapsed_ms:.0f} ms)"
            print(line)
            if args.ids and not (args.all or args.tag):
                print(f"{'':{width}}  observed: {_show(r.observed)}")
            if r.status == "refuted":
                print(f"{'':{width}}  counterexample: {_show(r.counterexample)}")
            elif r.status == "error":
                print(f"{'':{width}}  {r.detail}")
        counts = {s: sum(r.status == s for r in reports) for s in ("verified", "refuted", "unverified-at-budget", "error")}
        print(", ".join(f"{v} {k}" for k, v in counts.items()))
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wordlab", description="Combinatorics on finite words.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report properties of words")
    a.add_argument("words", nargs="*", help="words or @file (default: the empty word)")
    a.add_argument("--props", help="comma-separated property names (default: every cheap one)")
    a.add_argument("--list", action="store_true", help="list property names")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("transform", help="apply a named transform")
    t.add_argument("op", choices=sorted(TRANSFORMS) + ["morphism"])
    t.add_argument("words", nargs="+")
    t.add_argument("--morphism", help="e.g. 0:01,1:10 or a named morphism")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_transform)

    g = sub.add_parser("generate", help="build special words")
    g.add_argument(
        "kind", choices=["debruijn-fm", "debruijn-au", "pre-antipalindromes", "fixed-point", "overlap-free-dyck", "lyndon"]
    )
    g.add_argument("n", type=int, help="order, length or length bound")
    g.add_argument("--spec", help="infinite word for fixed-point, e.g. named:fibonacci or morphic:0:01,1:10@0")
    g.add_argument("--sigma", type=int, default=2)
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("enumerate", help="list or count the words of length n passing a filter")
    e.add_argument("n", type=int)
    e.add_argument("--filter", help='boolean expression over property names, e.g. "rich and not palindrome"')
    e.add_argument("--emit", choices=["count", "list"], default="list")
    e.add_argument("--sigma", type=int, default=2)
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run registered claims")
    v.add_argument("ids", nargs="*")
    v.add_argument("--all", action="store_true")
    v.add_argument("--tag")
    v.add_argument("--list", action="store_true", help="list claims instead of running them")
    v.add_argument("--budget", type=float, help="budget multiplier (default: WORDLAB_BUDGET or 1)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timings", action="store_true", help="include elapsed times (output then varies)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnknownClaim as exc:
        print(f"wordlab: UnknownClaim: {exc.args[0]}", file=sys.stderr)
        return 2
    except WordError as exc:
        print(f"wordlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
