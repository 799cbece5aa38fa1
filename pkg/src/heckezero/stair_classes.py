"""
Constructive descriptions of the maximal cyclic-shift classes.

The canonical representative of the class labelled by a composition alpha
is its *stair form*: split the interleaved sequence 1, n, 2, n-1, ... into
consecutive blocks of sizes alpha_1, alpha_2, ... and read each block as a
cycle.

Membership in a labelled class is decided by three invariants (cycle type,
length, even-size orbits).  For a one-part label the class is exactly the
set of full cycles that are *oscillating* with *connected intervals*, and
it grows degree by degree through an insertion bijection; hook labels are
reached from there by two explicit bijections.

>>> cycle_string(stair_form((4, 2)))
'(1,6,2,5)(3,4)'
>>> sorted(cycle_class(4)) == sorted([from_cycles(4, [(1, 4, 2, 3)]),
...                                   from_cycles(4, [(1, 3, 2, 4)])])
True
"""

from __future__ import annotations

from functools import lru_cache

from .compositions import (
    Composition, check_composition, hook_kind, is_maximal, sort_to_partition,
    split_even_odd,
)
from .permutations import (
    Cycle, Perm, all_perms, cycle_string, cycle_type, cycles, even_orbits,
    from_cycles, identity, inverse, length,
)

__all__ = [
    "stair_sequence", "stair_form", "stair_is_max", "member_sigma_alpha",
    "standardize_cycle", "is_oscillating_cycle", "has_connected_intervals_cycle",
    "is_oscillating", "has_connected_intervals", "hook_properties",
    "cycle_insert", "cycle_delete", "lift_cycle_class", "lower_cycle_class",
    "cycle_class", "odd_hook_embed", "even_hook_lift", "sigma_class",
    "FILTER_SOFT_LIMIT",
]

#: Largest degree at which the generic filter fallback runs without force.
FILTER_SOFT_LIMIT = 9


def stair_sequence(n: int) -> tuple[int, ...]:
    """The interleaved sequence x with x_{2i-1} = i and x_{2i} = n-i+1.

    >>> stair_sequence(6)
    (1, 6, 2, 5, 3, 4)
    >>> stair_sequence(5)
    (1, 5, 2, 4, 3)
    """
    return tuple((r + 1) // 2 if r % 2 else n - r // 2 + 1 for r in range(1, n + 1))


def stair_form(alpha: Composition) -> Perm:
    """The stair-form permutation of the composition `alpha`.

    >>> cycle_string(stair_form((4, 2)))
    '(1,6,2,5)(3,4)'
    >>> stair_form((1, 1, 1))
    (1, 2, 3)
    """
    check_composition(alpha)
    n = sum(alpha)
    seq = stair_sequence(n)
    cycs = []
    start = 0
    for part in alpha:
        cycs.append(seq[start:start + part])
        start += part
    return from_cycles(n, cycs)


def stair_is_max(alpha: Composition) -> bool:
    """Whether the stair form of `alpha` has maximal length in its conjugacy
    class; this holds exactly for the maximal compositions."""
    return is_maximal(alpha)


def member_sigma_alpha(p: Perm, alpha: Composition) -> bool:
    """Membership of `p` in the class labelled by the maximal composition
    `alpha`, decided by three invariants of the stair form: equal cycle
    type, equal length, equal even-size orbit partition.

    >>> member_sigma_alpha(stair_form((4, 2)), (4, 2))
    True
    """
    if not is_maximal(alpha):
        raise ValueError(f"not a maximal composition: {alpha}")
    if len(p) != sum(alpha):
        raise ValueError(f"degree mismatch: |{alpha}| != {len(p)}")
    sf = stair_form(alpha)
    return (
        cycle_type(p) == sort_to_partition(alpha)
        and length(p) == length(sf)
        and even_orbits(p) == even_orbits(sf)
    )


def standardize_cycle(c: Cycle) -> Cycle:
    """Replace each entry of the cycle by its rank among the entries,
    yielding a full cycle on 1..k written with 1 first.

    >>> standardize_cycle((3, 11, 4, 10, 5))
    (1, 5, 2, 4, 3)
    """
    if not c:
        raise ValueError("empty cycle")
    rank = {v: r + 1 for r, v in enumerate(sorted(c))}
    std = tuple(rank[v] for v in c)
    at = std.index(1)
    return std[at:] + std[:at]


def _check_full_cycle(c: Cycle) -> int:
    k = len(c)
    if sorted(c) != list(range(1, k + 1)):
        raise ValueError(f"not a full cycle on 1..{k}: {c}")
    return k


def is_oscillating_cycle(c: Cycle) -> bool:
    """Whether the full cycle `c` on 1..k is oscillating.

    For even k the entries alternate (cyclically) between the lower half
    1..k/2 and the upper half; for odd k the same must hold after removing
    the middle entry (k+1)/2.  Cycles of length at most 2 qualify.

    >>> is_oscillating_cycle((1, 5, 2, 4, 3))
    True
    >>> is_oscillating_cycle((1, 5, 2, 6, 3, 4))
    True
    """
    k = _check_full_cycle(c)
    if k <= 2:
        return True
    if k % 2 == 0:
        half = k // 2
        seq = c
    else:
        half = (k - 1) // 2
        mid = (k + 1) // 2
        seq = tuple(v for v in c if v != mid)
    low = [v <= half for v in seq]
    return all(low[r] != low[r - 1] for r in range(len(seq)))


def has_connected_intervals_cycle(c: Cycle) -> bool:
    """Whether every centered interval [i, k-i+1] occurs as a contiguous
    arc of the full cycle `c` on 1..k.

    >>> has_connected_intervals_cycle((1, 6, 2, 5, 3, 4))
    True
    >>> has_connected_intervals_cycle((1, 5, 2, 6, 3, 4))
    False
    """
    k = _check_full_cycle(c)
    pos = {v: r for r, v in enumerate(c)}
    for i in range(2, k // 2 + 1):
        idxs = sorted(pos[v] for v in range(i, k - i + 2))
        gaps = sum(1 for a, b in zip(idxs, idxs[1:]) if b - a > 1)
        if idxs[0] + k - idxs[-1] > 1:
            gaps += 1
        if gaps > 1:
            return False
    return True


def is_oscillating(p: Perm) -> bool:
    """Whether the standardization of every cycle of `p` is oscillating."""
    return all(
        is_oscillating_cycle(standardize_cycle(c))
        for c in cycles(p) if len(c) > 2
    )


def has_connected_intervals(p: Perm) -> bool:
    """Whether the standardization of every cycle of `p` has connected
    intervals."""
    return all(
        has_connected_intervals_cycle(standardize_cycle(c))
        for c in cycles(p) if len(c) > 2
    )


def hook_properties(p: Perm, alpha: Composition) -> bool:
    """The three hook properties of `p` for a hook shape alpha = (k, 1, ...):
    oscillating, connected intervals, and (for k > 1) the long cycle of `p`
    contains both i and n-i+1 for every i up to m, where m = (k-1)/2 for
    odd k and k/2 for even k.

    >>> hook_properties(from_cycles(5, [(1, 5, 3)]), (3, 1, 1))
    True
    >>> hook_properties(from_cycles(5, [(2, 5, 3)]), (3, 1, 1))
    False
    """
    if hook_kind(alpha) == "not_hook":
        raise ValueError(f"not a hook: {alpha}")
    if cycle_type(p) != sort_to_partition(alpha):
        raise ValueError(f"cycle type of {p} does not match {alpha}")
    k = alpha[0]
    if not (is_oscillating(p) and has_connected_intervals(p)):
        return False
    if k > 1:
        n = len(p)
        m = (k - 1) // 2 if k % 2 else k // 2
        support = next(set(c) for c in cycles(p) if len(c) == k)
        for i in range(1, m + 1):
            if i not in support or n - i + 1 not in support:
                return False
    return True


def _cycle_from_one(p: Perm) -> Cycle:
    """The full cycle `p` written starting at entry 1."""
    n = len(p)
    if cycle_type(p) != (n,) and n > 0:
        raise ValueError(f"not a full cycle: {p}")
    out = [1]
    v = p[0]
    while v != 1:
        out.append(v)
        v = p[v - 1]
    return tuple(out)


def cycle_insert(k: int, pos: int, sigma: Perm) -> Perm:
    """Insert the value k into the full cycle `sigma`, written starting at 1,
    behind its pos-th entry; entries >= k shift up by one.

    >>> cycle_string(cycle_insert(3, 1, from_cycles(3, [(1, 2, 3)])))
    '(1,3,2,4)'
    """
    n = len(sigma)
    if not 2 <= k <= n + 1:
        raise ValueError(f"insertion value {k} out of range 2..{n + 1}")
    if not 1 <= pos <= n:
        raise ValueError(f"insertion position {pos} out of range 1..{n}")
    c = _cycle_from_one(sigma)
    shifted = [v + 1 if v >= k else v for v in c]
    new = shifted[:pos] + [k] + shifted[pos:]
    return from_cycles(n + 1, [tuple(new)])


def cycle_delete(k: int, sigma: Perm) -> Perm:
    """Remove the value k from the full cycle `sigma`; entries > k shift
    down by one.  Inverse to `cycle_insert`: deleting k after inserting it
    recovers the original cycle.

    >>> cycle_string(cycle_delete(3, from_cycles(5, [(1, 3, 4, 2, 5)])))
    '(1,3,2,4)'
    """
    n = len(sigma)
    if not 2 <= k <= n:
        raise ValueError(f"deletion value {k} out of range 2..{n}")
    c = _cycle_from_one(sigma)
    new = [v - 1 if v > k else v for v in c if v != k]
    return from_cycles(n - 1, [tuple(new)])


def _is_cycle_class_member(sigma: Perm) -> bool:
    n = len(sigma)
    if n == 0 or cycle_type(sigma) != (n,):
        return False
    c = _cycle_from_one(sigma)
    return is_oscillating_cycle(c) and has_connected_intervals_cycle(c)


def lift_cycle_class(n: int, sigma: Perm, q: int | None = None) -> Perm:
    """The degree-raising bijection from the one-part class of degree n-1
    onto the one-part class of degree n (n >= 4).

    For even n the middle value m = n/2 + 1 is inserted at the position
    determined by `sigma` and no branch choice exists (`q` must be None).
    For odd n the value m = (n+1)/2 is inserted just left of, between, or
    just right of the pair {m-1, m}, selected by q in {0, 1, 2}.

    >>> cycle_string(lift_cycle_class(4, from_cycles(3, [(1, 3, 2)])))
    '(1,4,2,3)'
    >>> cycle_string(lift_cycle_class(5, from_cycles(4, [(1, 4, 2, 3)]), 1))
    '(1,5,2,3,4)'
    """
    if n < 4:
        raise ValueError("degree-raising map needs n >= 4")
    if len(sigma) != n - 1:
        raise ValueError(f"expected a permutation of degree {n - 1}")
    if not _is_cycle_class_member(sigma):
        raise ValueError(f"{sigma} is not in the one-part class of degree {n - 1}")
    c = _cycle_from_one(sigma)
    if n % 2 == 0:
        if q is not None:
            raise ValueError("q applies only to odd target degrees")
        m = n // 2 + 1
        half = n // 2
        target = min(inverse(sigma)[half - 1], half)
        pos = c.index(target) + 1
        return cycle_insert(m, pos, sigma)
    if q not in (0, 1, 2):
        raise ValueError("odd target degree needs q in {0, 1, 2}")
    m = (n + 1) // 2
    pos = next(
        r for r in range(1, n - 2)
        if c[r - 1] not in (m - 1, m) and c[r] in (m - 1, m)
    )
    return cycle_insert(m, pos + q, sigma)


def lower_cycle_class(sigma: Perm) -> tuple[Perm, int | None]:
    """Inverse of `lift_cycle_class`: drop the middle value from a one-part
    class member of degree n >= 4, recovering the branch index for odd n.

    >>> lower_cycle_class(from_cycles(5, [(1, 5, 2, 3, 4)]))[1]
    1
    """
    n = len(sigma)
    if n < 4:
        raise ValueError("degree-lowering map needs n >= 4")
    if not _is_cycle_class_member(sigma):
        raise ValueError(f"{sigma} is not in the one-part class of degree {n}")
    if n % 2 == 0:
        return cycle_delete(n // 2 + 1, sigma), None
    m = (n + 1) // 2
    c = _cycle_from_one(sigma)
    idxs = sorted(c.index(v) for v in (m - 1, m, m + 1))
    if idxs[2] - idxs[0] != 2:
        raise ValueError(f"{sigma} is not in the one-part class of degree {n}")
    q = c.index(m) - idxs[0]
    return cycle_delete(m, sigma), q


@lru_cache(maxsize=None)
def cycle_class(n: int) -> frozenset[Perm]:
    """The maximal class of full n-cycles, generated degree by degree.

    Starts from the explicit classes at n <= 3 and applies the insertion
    bijection: each even step preserves the count, each odd step triples it.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return frozenset([()])
    if n == 1:
        return frozenset([identity(1)])
    if n == 2:
        return frozenset([(2, 1)])
    if n == 3:
        return frozenset([from_cycles(3, [(1, 3, 2)]), from_cycles(3, [(1, 2, 3)])])
    prev = cycle_class(n - 1)
    if n % 2 == 0:
        return frozenset(lift_cycle_class(n, s) for s in prev)
    return frozenset(lift_cycle_class(n, s, q) for s in prev for q in (0, 1, 2))


def odd_hook_embed(tau: Perm, j: int, alpha: Composition) -> Perm:
    """Embed a full k-cycle class member into the odd-hook class of shape
    alpha = (k, 1, ..., 1): the long cycle of the result is supported on
    {1..m} | {j} | {n-m+1..n} with m = (k-1)/2, arranged so that its
    standardization is `tau`; all other points are fixed.

    >>> cycle_string(odd_hook_embed(from_cycles(3, [(1, 3, 2)]), 4, (3, 1, 1)),
    ...              include_trivial=False)
    '(1,5,4)'
    """
    if hook_kind(alpha) != "odd_hook" or alpha[0] < 3:
        raise ValueError(f"not an odd hook with long part >= 3: {alpha}")
    k = alpha[0]
    n = sum(alpha)
    m = (k - 1) // 2
    if not m + 1 <= j <= n - m:
        raise ValueError(f"free point {j} out of range {m + 1}..{n - m}")
    if tau not in cycle_class(k):
        raise ValueError(f"{tau} is not in the one-part class of degree {k}")
    support = list(range(1, m + 1)) + [j] + list(range(n - m + 1, n + 1))
    c = _cycle_from_one(tau)
    return from_cycles(n, [tuple(support[t - 1] for t in c)])


def even_hook_lift(tau: Perm, alpha: Composition) -> Perm:
    """Embed a full l-cycle class member into the even-hook class of shape
    alpha = (l, 1, ..., 1): the product of `tau` with the identity on the
    remaining points under the interleaving product.

    >>> cycle_string(even_hook_lift(from_cycles(4, [(1, 4, 2, 3)]), (4, 1, 1)),
    ...              include_trivial=False)
    '(1,6,2,5)'
    """
    if hook_kind(alpha) != "even_hook":
        raise ValueError(f"not an even hook: {alpha}")
    l = alpha[0]
    if tau not in cycle_class(l):
        raise ValueError(f"{tau} is not in the one-part class of degree {l}")
    from .inductive_product import iprod

    return iprod(tau, identity(sum(alpha) - l))


def sigma_class(alpha: Composition, force: bool = False):
    """The full class labelled by the maximal composition `alpha`, as an
    EquivClass.

    Strategy: one-part labels come from the insertion recursion, hooks from
    the two hook bijections, labels whose odd parts form a hook from the
    interleaving-product assembly, and anything else from filtering the
    permutations of matching cycle type through `member_sigma_alpha` (soft
    degree limit, lifted by `force=True`).
    """
    from .cyclic_shift import make_equiv_class
    from .inductive_product import generate_hookish

    if not is_maximal(alpha):
        raise ValueError(f"not a maximal composition: {alpha}")
    n = sum(alpha)
    if n == 0 or all(a == 1 for a in alpha):
        return make_equiv_class([identity(n)], alpha=alpha)
    if len(alpha) == 1:
        return make_equiv_class(cycle_class(n), alpha=alpha)
    kind = hook_kind(alpha)
    if kind == "odd_hook":
        k = alpha[0]
        m = (k - 1) // 2
        elems = {
            odd_hook_embed(tau, j, alpha)
            for tau in cycle_class(k) for j in range(m + 1, n - m + 1)
        }
        return make_equiv_class(elems, alpha=alpha)
    if kind == "even_hook":
        elems = {even_hook_lift(tau, alpha) for tau in cycle_class(alpha[0])}
        return make_equiv_class(elems, alpha=alpha)
    _, odds, _ = split_even_odd(alpha)
    if not odds or hook_kind(odds) != "not_hook":
        return generate_hookish(alpha)
    if n > FILTER_SOFT_LIMIT and not force:
        raise ValueError(
            f"filter fallback for {alpha} needs scanning S_{n}, beyond the "
            f"soft limit {FILTER_SOFT_LIMIT}; pass force=True to override"
        )
    target = sort_to_partition(alpha)
    elems = {
        p for p in all_perms(n)
        if cycle_type(p) == target and member_sigma_alpha(p, alpha)
    }
    return make_equiv_class(elems, alpha=alpha)
