"""
Sparse arithmetic in the 0-Hecke algebra of S_n on its natural basis.

An element is a finite integer combination of basis vectors T_w indexed by
permutations.  The generators satisfy T_i^2 = -T_i together with the braid
relations, so multiplication by a generator either climbs the Bruhat order
or flips a sign:

    T_i * T_w = T_{s_i w}   if length(s_i w) > length(w)
              = -T_w        otherwise.

The center has a basis of indicator sums over Bruhat order ideals
generated by the maximal cyclic-shift classes; `verify_center_basis`
checks centrality, linear independence and the dimension count.

Integer coefficients suffice throughout: all structure constants are
integral, so any field case follows by extension of scalars.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .compositions import Composition, enumerate_maximal, is_maximal
from .counting import dim_center
from .permutations import Perm, all_perms, identity, length
from .stair_classes import sigma_class

__all__ = [
    "HeckeElement", "hecke_element", "t_basis", "t_one",
    "left_mul_gen", "right_mul_gen", "mul", "reduced_word",
    "order_ideal", "t_leq_sigma", "is_central",
    "integer_matrix_rank", "CenterBasisReport", "verify_center_basis",
]


@dataclass(frozen=True, eq=False)
class HeckeElement:
    """A sparse integer combination of basis vectors T_w of fixed degree.

    `terms` maps permutations to nonzero coefficients.  Treated as
    immutable; all operations return fresh elements.
    """

    n: int
    terms: Mapping[Perm, int]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeckeElement)
            and self.n == other.n
            and dict(self.terms) == dict(other.terms)
        )

    def coefficient(self, w: Perm) -> int:
        return self.terms.get(w, 0)

    def support_size(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        items = ", ".join(
            f"{w}: {c}" for w, c in sorted(self.terms.items())
        )
        return f"HeckeElement(n={self.n}, {{{items}}})"


def hecke_element(n: int, terms: Mapping[Perm, int]) -> HeckeElement:
    """Build an element, dropping zero coefficients and checking degrees."""
    clean = {}
    for w, c in terms.items():
        if len(w) != n:
            raise ValueError(f"term {w} has degree {len(w)}, expected {n}")
        if c:
            clean[w] = c
    return HeckeElement(n, clean)


def t_basis(n: int, w: Perm) -> HeckeElement:
    """The basis vector T_w."""
    if len(w) != n:
        raise ValueError(f"degree mismatch: {len(w)} != {n}")
    return HeckeElement(n, {w: 1})


def t_one(n: int) -> HeckeElement:
    """The identity T_id."""
    return HeckeElement(n, {identity(n): 1})


def _check_gen(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for degree {n}")


def left_mul_gen(i: int, x: HeckeElement) -> HeckeElement:
    """T_{s_i} * x, extended linearly over the terms of x."""
    _check_gen(i, x.n)
    acc: dict[Perm, int] = {}
    for w, c in x.terms.items():
        lw = length(w)
        sw = list(w)
        for t, v in enumerate(sw):
            if v == i:
                sw[t] = i + 1
            elif v == i + 1:
                sw[t] = i
        swt = tuple(sw)
        if length(swt) > lw:
            acc[swt] = acc.get(swt, 0) + c
        else:
            acc[w] = acc.get(w, 0) - c
    return hecke_element(x.n, acc)


def right_mul_gen(i: int, x: HeckeElement) -> HeckeElement:
    """x * T_{s_i}, the mirror rule via right descents."""
    _check_gen(i, x.n)
    acc: dict[Perm, int] = {}
    for w, c in x.terms.items():
        if w[i - 1] < w[i]:
            ws = w[: i - 1] + (w[i], w[i - 1]) + w[i + 1:]
            acc[ws] = acc.get(ws, 0) + c
        else:
            acc[w] = acc.get(w, 0) - c
    return hecke_element(x.n, acc)


def reduced_word(w: Perm) -> tuple[int, ...]:
    """A reduced word for `w`, produced by repeatedly stripping the smallest
    right descent.  Any reduced word gives the same T_w, so the choice is
    only for determinism.

    >>> reduced_word((3, 2, 1))
    (1, 2, 1)
    """
    word: list[int] = []
    cur = list(w)
    n = len(cur)
    while True:
        i = next((j for j in range(1, n) if cur[j - 1] > cur[j]), None)
        if i is None:
            break
        word.append(i)
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    return tuple(reversed(word))


def mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """The product a * b.

    Each basis term T_w of `a` acts on `b` through a reduced word of w,
    one generator at a time.
    """
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} != {b.n}")
    acc: dict[Perm, int] = {}
    for w, c in a.terms.items():
        y = b
        for i in reversed(reduced_word(w)):
            y = left_mul_gen(i, y)
        for v, d in y.terms.items():
            acc[v] = acc.get(v, 0) + c * d
    return hecke_element(a.n, acc)


def order_ideal(sigma) -> frozenset[Perm]:
    """The downward Bruhat closure of a set of permutations.

    Accepts an EquivClass or any iterable of permutations.  Walks down
    cover chains: right-multiplying by a transposition that undoes an
    inversion lowers the length, and every element below is reached by
    such steps.

    >>> sorted(order_ideal([(2, 3, 1)]))
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1)]
    """
    elements: Iterable[Perm] = getattr(sigma, "elements", sigma)
    seen: set[Perm] = set(elements)
    stack = list(seen)
    while stack:
        w = stack.pop()
        n = len(w)
        for i in range(n - 1):
            for j in range(i + 1, n):
                if w[i] > w[j]:
                    v = list(w)
                    v[i], v[j] = v[j], v[i]
                    vt = tuple(v)
                    if vt not in seen:
                        seen.add(vt)
                        stack.append(vt)
    return frozenset(seen)


def t_leq_sigma(alpha: Composition, n: int, force: bool = False) -> HeckeElement:
    """The central element of the class labelled by `alpha`: the indicator
    sum of T_x over the Bruhat order ideal generated by the class.

    >>> t_leq_sigma((1, 1, 1), 3) == t_one(3)
    True
    """
    if not is_maximal(alpha):
        raise ValueError(f"not a maximal composition: {alpha}")
    if sum(alpha) != n:
        raise ValueError(f"|{alpha}| != {n}")
    ideal = order_ideal(sigma_class(alpha, force=force))
    return HeckeElement(n, {w: 1 for w in ideal})


def is_central(x: HeckeElement) -> bool:
    """Whether x commutes with every generator (hence with the algebra)."""
    return all(
        left_mul_gen(i, x) == right_mul_gen(i, x) for i in range(1, x.n)
    )


def integer_matrix_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Exact: all intermediate entries are integers, no floating point.

    >>> integer_matrix_rank([[2, 4], [1, 2], [0, 1]])
    2
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        piv = next((r for r in range(row, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        lead = a[row][col]
        for r in range(row + 1, nrows):
            f = a[r][col]
            for c in range(col + 1, ncols):
                a[r][c] = (a[r][c] * lead - f * a[row][c]) // prev
            a[r][col] = 0
        prev = lead
        row += 1
        rank += 1
    return rank


@dataclass(frozen=True)
class CenterBasisReport:
    """Outcome of the center-basis verification at one degree."""

    n: int
    alphas: tuple[Composition, ...]
    central: tuple[bool, ...]
    rank: int
    dim: int
    failures: tuple[str, ...] = field(default=())

    @property
    def all_central(self) -> bool:
        return all(self.central)

    @property
    def independent(self) -> bool:
        return self.rank == len(self.alphas)

    @property
    def size_matches(self) -> bool:
        return len(self.alphas) == self.dim

    @property
    def ok(self) -> bool:
        return self.all_central and self.independent and self.size_matches


def verify_center_basis(n: int, force: bool = False) -> CenterBasisReport:
    """Check that the ideal sums over all labelled classes of S_n are
    central, linearly independent, and as many as the center dimension.

    Returns a report rather than raising, so callers can surface every
    failing assertion at once.
    """
    alphas = tuple(enumerate_maximal(n))
    elements = [t_leq_sigma(alpha, n, force=force) for alpha in alphas]
    central = tuple(is_central(x) for x in elements)

    index = {w: r for r, w in enumerate(all_perms(n))}
    rows = []
    for x in elements:
        row = [0] * len(index)
        for w, c in x.terms.items():
            row[index[w]] = c
        rows.append(row)
    rank = integer_matrix_rank(rows) if rows else 0
    dim = dim_center(n)

    failures = []
    for alpha, good in zip(alphas, central):
        if not good:
            failures.append(f"element of {alpha} is not central")
    if rank != len(alphas):
        failures.append(f"rank {rank} < family size {len(alphas)}")
    if len(alphas) != dim:
        failures.append(f"family size {len(alphas)} != center dimension {dim}")
    return CenterBasisReport(n, alphas, central, rank, dim, tuple(failures))
