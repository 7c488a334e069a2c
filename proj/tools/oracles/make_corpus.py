"""Regenerates tests/fixtures/regression_corpus.json.

Everything here is computed with Python's fractions module and mpmath,
without reference to the C++ sources.
"""

import itertools
import json
import math
from fractions import Fraction as F
from pathlib import Path

import mpmath

mpmath.mp.dps = 60


def frac(x):
    return f"{x.numerator}/{x.denominator}"


def cantor(x):
    # ternary digits by long division, stopping at a 1 or a repeated remainder
    if x == 1:
        return F(1)
    num, den = x.numerator, x.denominator
    bits, seen, pos = [], {}, 0
    rem = num
    while True:
        if rem == 0:
            break
        if rem in seen:
            start = seen[rem]
            pre, cyc = bits[:start], bits[start:]
            val = F(0)
            for i, b in enumerate(pre):
                val += F(b, 2 ** (i + 1))
            cyc_val = F(int("".join(map(str, cyc)), 2), 2 ** len(cyc) - 1)
            return val + cyc_val / 2 ** len(pre)
        seen[rem] = pos
        rem *= 3
        digit, rem = divmod(rem, den)
        if digit == 1:
            bits.append(1)
            break
        bits.append(digit // 2)
        pos += 1
    return sum((F(b, 2 ** (i + 1)) for i, b in enumerate(bits)), F(0))


def riesz_nagy(a, x):
    lo, hi, vlo, vhi = F(0), F(1), F(0), F(1)
    while True:
        if x == lo:
            return vlo
        if x == hi:
            return vhi
        mid = (lo + hi) / 2
        vmid = vlo + a * (vhi - vlo)
        if x < mid:
            hi, vhi = mid, vmid
        else:
            lo, vlo = mid, vmid


def rn_length(a, d):
    a = mpmath.mpf(a.numerator) / a.denominator
    b = 1 - a
    total = mpmath.mpf(0)
    for k in range(d + 1):
        total += mpmath.binomial(d, k) * mpmath.sqrt(mpmath.mpf(4) ** (-d) + (a ** (d - k) * b**k) ** 2)
    return total


def cantor_length(m):
    r = mpmath.mpf(2) / 3
    return 1 - r**m + mpmath.sqrt(1 + r ** (2 * m))


def merged_measure(ivs):
    ivs = sorted(ivs)
    total, cur = F(0), None
    for lo, hi in ivs:
        if cur and lo <= cur[1]:
            cur[1] = max(cur[1], hi)
        else:
            if cur:
                total += cur[1] - cur[0]
            cur = [lo, hi]
    if cur:
        total += cur[1] - cur[0]
    return total


def greedy_cover(comps, delta):
    comps = sorted(comps)
    t, total = comps[0][0], F(0)
    while True:
        end = t + delta
        top = max([min(h, end) for lo, h in comps if lo <= end and h >= t] + [t])
        total += top - t
        nxt = None
        for lo, h in comps:
            if lo <= end < h:
                nxt = end
                break
            if lo > end:
                nxt = lo
                break
        if nxt is None:
            return total
        t = nxt


def box_counts(a, depth, ms):
    vals = [riesz_nagy(a, F(k, 2**depth)) for k in range(2**depth + 1)]
    out = []
    for m in ms:
        boxes = set()
        for k, y in enumerate(vals):
            bx = min(k * 2**m // 2**depth, 2**m - 1)
            by = min(math.floor(y * 2**m), 2**m - 1)
            boxes.add((bx, by))
        out.append(len(boxes))
    xs = list(ms)
    ys = [math.log2(c) for c in out]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
    return out, slope


def max_family(n):
    subsets = list(range(1, 2**n))
    best = 0
    # exhaustive clique search in the "meet in exactly one element" graph
    def grow(chosen, start):
        nonlocal best
        best = max(best, len(chosen))
        for i in range(start, len(subsets)):
            s = subsets[i]
            if all(bin(s & c).count("1") == 1 for c in chosen):
                grow(chosen + [s], i + 1)

    grow([], 0)
    return best


def main():
    corpus = {"schema_version": 1, "cases": {}}
    cases = corpus["cases"]

    cases["cantor_values"] = {
        "source": "fractions: ternary long division",
        "items": [
            {"x": frac(x), "value": frac(cantor(x))}
            for x in [F(0), F(1), F(1, 3), F(2, 3), F(1, 4), F(3, 4), F(1, 9), F(2, 7), F(5, 13), F(1, 10), F(7, 8)]
        ],
    }
    cases["riesz_nagy_values"] = {
        "source": "fractions: interval bisection",
        "items": [
            {"a": frac(a), "x": frac(x), "value": frac(riesz_nagy(a, x))}
            for a in [F(1, 4), F(1, 3), F(2, 3)]
            for x in [F(0), F(1), F(1, 2), F(3, 4), F(3, 8), F(5, 16), F(11, 32), F(255, 256)]
        ],
    }
    cases["riesz_nagy_polyline"] = {
        "source": "mpmath: binomial-weighted chord sum, 60 digits",
        "items": [
            {"a": frac(a), "depth": d, "value": mpmath.nstr(rn_length(a, d), 40)}
            for a in [F(1, 4), F(1, 3), F(3, 4)]
            for d in [0, 1, 2, 5, 10, 16, 32, 35, 40, 64]
        ],
    }
    d_star = next(d for d in range(65) if rn_length(F(1, 4), d) >= mpmath.mpf("1.9"))
    cases["riesz_nagy_threshold"] = {
        "source": "mpmath: first depth with length >= 1.9",
        "a": "1/4",
        "threshold": "19/10",
        "depth": d_star,
        "length_before": mpmath.nstr(rn_length(F(1, 4), d_star - 1), 30),
        "length_at": mpmath.nstr(rn_length(F(1, 4), d_star), 30),
    }
    cases["cantor_polyline"] = {
        "source": "mpmath: flat gaps plus equal bridge chords",
        "items": [{"depth": m, "value": mpmath.nstr(cantor_length(m), 40)} for m in range(0, 11)],
    }

    def dy(k, d):
        return F(k, 2**d)

    image_items = []
    for a in [F(1, 4), F(1, 3)]:
        for comps in [[(F(0), F(1, 2))], [(F(1, 4), F(3, 4))], [(F(0), F(1, 8)), (F(1, 2), F(5, 8))]]:
            image_items.append(
                {
                    "fn": {"kind": "riesz_nagy", "a": frac(a)},
                    "set": [[frac(lo), frac(hi)] for lo, hi in comps],
                    "value": frac(sum(riesz_nagy(a, hi) - riesz_nagy(a, lo) for lo, hi in comps)),
                }
            )
    for comps in [[(F(1, 3), F(2, 3))], [(F(0), F(1, 3))], [(F(0), F(1, 9)), (F(2, 9), F(1, 3))], [(F(1, 9), F(7, 9))]]:
        image_items.append(
            {
                "fn": {"kind": "cantor"},
                "set": [[frac(lo), frac(hi)] for lo, hi in comps],
                "value": frac(merged_measure([(cantor(lo), cantor(hi)) for lo, hi in comps])),
            }
        )
    cases["image_measure"] = {"source": "fractions: endpoint differences", "items": image_items}

    level2 = [(F(0), F(1, 9)), (F(2, 9), F(1, 3)), (F(2, 3), F(7, 9)), (F(8, 9), F(1))]
    cover_items = []
    for comps, delta in [
        ([(F(0), F(1))], F(1, 4)),
        ([(F(0), F(0)), (F(1), F(1))], F(1, 4)),
        (level2, F(1, 9)),
        (level2, F(1, 3)),
        ([(F(0), F(1, 5)), (F(4, 5), F(1))], F(1, 2)),
        ([(F(0), F(1, 3)), (F(1, 2), F(7, 10))], F(1, 7)),
    ]:
        cover_items.append(
            {"set": [[frac(lo), frac(hi)] for lo, hi in comps], "delta": frac(delta), "value": frac(greedy_cover(comps, delta))}
        )
    cases["greedy_cover_sum"] = {"source": "fractions: left-to-right sweep", "items": cover_items}

    counts, slope = box_counts(F(1, 4), 12, range(4, 11))
    cases["box_count"] = {
        "source": "fractions: grid cells hit by the depth-12 sample",
        "a": "1/4",
        "sample_depth": 12,
        "m": list(range(4, 11)),
        "counts": counts,
        "slope": slope,
    }
    cases["family_max"] = {
        "source": "python: exhaustive clique search",
        "items": [{"n": n, "max_size": max_family(n)} for n in range(2, 6)],
    }
    corpus_path = Path(__file__).resolve().parents[2] / "tests" / "fixtures" / "regression_corpus.json"
    corpus_path.write_text(json.dumps(corpus, indent=2) + "\n")


if __name__ == "__main__":
    main()
