"""
Closed-form cardinalities of the maximal classes and the center dimension.

All arithmetic is exact (Python integers); no floats anywhere.
"""

from __future__ import annotations

from math import factorial

from .compositions import (
    Composition, enumerate_maximal, hook_kind, is_maximal, partitions,
    split_even_odd,
)

__all__ = [
    "size_sigma_n", "size_sigma_odd_hook", "size_sigma_formula", "dim_center",
]


def size_sigma_n(n: int) -> int:
    """Cardinality of the class of full n-cycles: 1 for n <= 2, then
    2 * 3^floor((n-3)/2).

    >>> [size_sigma_n(n) for n in range(1, 7)]
    [1, 1, 2, 2, 6, 6]
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 2:
        return 1
    return 2 * 3 ** ((n - 3) // 2)


def size_sigma_odd_hook(alpha: Composition) -> int:
    """Cardinality of the class of an odd hook (k, 1^{n-k}): 1 for k = 1,
    else 2 * (n - k + 1) * 3^((k-3)/2).

    >>> size_sigma_odd_hook((3, 1, 1))
    6
    """
    if hook_kind(alpha) != "odd_hook":
        raise ValueError(f"not an odd hook: {alpha}")
    k = alpha[0]
    n = sum(alpha)
    if k == 1:
        return 1
    return 2 * (n - k + 1) * 3 ** ((k - 3) // 2)


def size_sigma_formula(alpha: Composition) -> int:
    """Cardinality of the class of a maximal composition whose odd parts
    form a hook.

    Writing P for the set of even parts >= 4, p = |P| and
    q = -2p + (sum of P)/2, the even prefix contributes 2^p * 3^q; an odd
    hook tail (r, 1^...) with r >= 3 contributes the extra factor
    (n' - r + 1) * 2 * 3^((r-3)/2) folded in as p' = p + 1,
    q' = q + (r-3)/2.

    >>> size_sigma_formula((2, 4, 3, 1, 1))
    12
    >>> size_sigma_formula((2, 8, 4, 5, 1, 1, 1))
    864
    """
    if not is_maximal(alpha):
        raise ValueError(f"not a maximal composition: {alpha}")
    evens, odds, _ = split_even_odd(alpha)
    if odds and hook_kind(odds) == "not_hook":
        raise ValueError(f"odd parts of {alpha} do not form a hook: {odds}")
    big = [a for a in evens if a >= 4]
    p = len(big)
    q = -2 * p + sum(big) // 2
    if not odds or odds[0] == 1:
        return 2 ** p * 3 ** q
    r = odds[0]
    nprime = sum(odds)
    return (nprime - r + 1) * 2 ** (p + 1) * 3 ** (q + (r - 3) // 2)


def dim_center(n: int) -> int:
    """Dimension of the center of the degree-n 0-Hecke algebra.

    Computed as the sum over partitions of n of n_lambda! / m_lambda, where
    n_lambda counts the even parts of lambda and m_lambda is the product of
    the factorials of the even-part multiplicities.  The sum counts the
    maximal compositions of n, and that equality is asserted on every call.

    >>> [dim_center(n) for n in range(8)]
    [1, 1, 2, 3, 5, 7, 12, 16]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    for lam in partitions(n):
        mult: dict[int, int] = {}
        for part in lam:
            if part % 2 == 0:
                mult[part] = mult.get(part, 0) + 1
        n_even = sum(mult.values())
        m = 1
        for c in mult.values():
            m *= factorial(c)
        total += factorial(n_even) // m
    by_enum = len(enumerate_maximal(n))
    if total != by_enum:
        raise RuntimeError(
            f"dimension mismatch at n={n}: partition sum {total} != "
            f"{by_enum} maximal compositions"
        )
    return total
