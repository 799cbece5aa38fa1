#!/usr/bin/env python3
"""
The twisted relation and minimal-length representatives.

Besides plain conjugation steps, the machinery runs with a twist: the
step w -> s_i w s_{n-i} pairs each generator with its mirror image.
Multiplying by the longest element w0 exchanges the two worlds: it sends
the maximal-length classes of the plain relation onto the minimal-length
classes of the twisted one, so the stair forms times w0 are a complete
system of representatives of the twisted-minimal stratum.
"""

from heckezero import (
    compose, cycle_string, equiv_classes, length, longest_element,
    min_representatives, stair_form,
)

n = 4
w0 = longest_element(n)
print(f"w0 of S_{n}: {cycle_string(w0)}\n")

print("twisted-minimal classes of S_4:")
for cls in equiv_classes(n, "nu", "min"):
    members = ", ".join(
        cycle_string(v, include_trivial=False) or "()"
        for v in cls.sorted_elements())
    print(f"  length {cls.common_length}: {{{members}}}")

# One representative per maximal composition, each in its own class.
# The call verifies distinctness and completeness before returning.
print("\nstair form * w0 representatives:")
for alpha, rep in min_representatives(n).items():
    sf = stair_form(alpha)
    print(f"  {alpha!s:14} {cycle_string(sf, include_trivial=False) or '()':16}"
          f" * w0 = {cycle_string(rep, include_trivial=False) or '()':14}"
          f" length {length(rep)}")

# Lengths complement: length(sf * w0) = length(w0) - length(sf).
top = length(w0)
assert all(
    length(compose(stair_form(a), w0)) == top - length(stair_form(a))
    for a in min_representatives(n)
)
print(f"\nlengths complement to {top} = length(w0), as they must")
