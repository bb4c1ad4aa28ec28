"""Brute-force reference computations, independent of the package."""

from functools import lru_cache
from itertools import product


@lru_cache(maxsize=None)
def partitions(n, largest=None):
    """All partitions of n as weakly increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append(rest + (first,))
    return tuple(out)


def strict(p):
    return len(set(p)) == len(p)


def gap_at_least(p, d):
    return all(b - a >= d for a, b in zip(p, p[1:]))


def count(n, pred):
    return sum(1 for p in partitions(n) if pred(p))


def poly_product_coeffs(factors, order):
    """Expand a product of (1 - q^e) / (1 + q^e) style factors given as dicts."""
    out = [0] * (order + 1)
    out[0] = 1
    for f in factors:
        new = [0] * (order + 1)
        for i, c in enumerate(out):
            if c:
                for e, fc in f.items():
                    if i + e <= order:
                        new[i + e] += c * fc
        out = new
    return out


def euler_product(order):
    """Coefficients of (q;q)_inf by direct multiplication."""
    return poly_product_coeffs([{0: 1, k: -1} for k in range(1, order + 1)], order)


def strict_by_length(n):
    """{length: number of strict partitions of n with that many parts}."""
    out = {}
    for p in partitions(n):
        if strict(p):
            out[len(p)] = out.get(len(p), 0) + 1
    return out


def labelings(parts, alphabet):
    return product(alphabet, repeat=len(parts))
