"""Time the compiled kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--n 12] [--repeat 3] [--claims]

Each kernel is run over every binary word of length n (the inner loop of the
enumerative claims) and over one long Thue-Morse prefix.  Results are checked
for agreement before timing is reported.
"""

import argparse
import itertools
import os
import subprocess
import sys
import time

from wordlab import kernels
from wordlab.infinite import thue_morse

CASES = [
    ("palindromic_length", lambda k, u: k.palindromic_length(u)),
    ("palindrome_count", lambda k, u: k.palindrome_count(u)),
    ("distinct_factor_count", lambda k, u: k.distinct_factor_count(u)),
    ("runs", lambda k, u: k.runs(u)),
    ("suffix_exceeds 7/3", lambda k, u: k.suffix_exceeds(u, 7, 3, True)),
]


def best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=12, help="word length for the exhaustive sweep")
    ap.add_argument("--long", type=int, default=400, help="length of the Thue-Morse prefix")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--claims", action="store_true", help="also time a full `wordlab verify --all` per backend")
    args = ap.parse_args(argv)

    impls = kernels.backends()
    if "cython" not in impls:
        print("compiled kernels not built; only the Python timings are shown")
    words = ["".join(t) for t in itertools.product("01", repeat=args.n)]
    tm = thue_morse(args.long)

    names = sorted(impls)
    print(f"{'kernel':24} {'input':>14} " + " ".join(f"{n:>10}" for n in names) + ("   speedup" if len(names) > 1 else ""))
    for label, call in CASES:
        for input_name, data in ((f"all 2^{args.n}", words), (f"TM[:{args.long}]", [tm])):
            timings, results = {}, {}
            for name in names:
                k = impls[name]
                timings[name], results[name] = best_of(args.repeat, lambda: [call(k, u) for u in data])
            if len(set(map(repr, results.values()))) != 1:
                raise SystemExit(f"backends disagree on {label}")
            row = f"{label:24} {input_name:>14} " + " ".join(f"{timings[n] * 1000:9.1f}ms" for n in names)
            if len(names) > 1:
                row += f"  {timings['python'] / timings['cython']:7.1f}x"
            print(row)

    if args.claims:
        claims_end_to_end(names)


def claims_end_to_end(names):
    # a fresh interpreter per backend, since the choice is made at import time
    outputs = {}
    for name in names:
        env = dict(os.environ, WORDLAB_PURE="1" if name == "python" else "")
        t = time.perf_counter()
        proc = subprocess.run([sys.executable, "-m", "wordlab.cli", "verify", "--all"], env=env, capture_output=True, text=True)
        outputs[name] = proc.stdout
        print(f"verify --all with {name:7} {time.perf_counter() - t:6.1f}s  {proc.stdout.strip().splitlines()[-1]}")
    if len(set(outputs.values())) > 1:
        print("warning: the claim reports differ between backends")


if __name__ == "__main__":
    main()
