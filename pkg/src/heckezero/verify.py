"""
Cross-checks of the constructive machinery against brute force.

Each suite returns a JSON-friendly dict with an "ok" flag and enough
detail to locate a failure.  These back the `verify` CLI subcommand and
mirror what the test suite pins at fixed degrees.
"""

from __future__ import annotations

from .compositions import enumerate_maximal, hook_kind, sort_to_partition
from .counting import dim_center, size_sigma_formula
from .cyclic_shift import label_max_classes
from .hecke import verify_center_basis
from .inductive_product import class_product, iprod, iprod_length_law
from .permutations import (
    all_perms, conj_w0, cycle_type, even_orbits, length,
)
from .stair_classes import (
    hook_properties, member_sigma_alpha, sigma_class, stair_form,
)

__all__ = ["SUITES", "suite_classes", "suite_hooks", "suite_iprod",
           "suite_center", "run_suites"]


def suite_classes(n: int, force: bool = False) -> dict:
    """Labelled brute-force classes vs. the membership predicate and the
    constructive generator, plus the dimension count and stability under
    conjugation by the longest element."""
    labelled = label_max_classes(n, force=force)
    alphas = enumerate_maximal(n)

    # one pass: bucket all of S_n by the three membership invariants
    buckets: dict[tuple, set] = {}
    for p in all_perms(n):
        key = (cycle_type(p), length(p), even_orbits(p))
        buckets.setdefault(key, set()).add(p)

    checks = []
    ok = True
    for alpha in alphas:
        brute = labelled[alpha].elements
        sf = stair_form(alpha)
        key = (cycle_type(sf), length(sf), even_orbits(sf))
        predicate = frozenset(buckets.get(key, ()))
        # spot-check the bucketing against the public predicate
        for p in list(predicate)[:20]:
            assert member_sigma_alpha(p, alpha)
        nu_stable = all(conj_w0(w) in brute for w in brute)
        try:
            constructed = sigma_class(alpha, force=force).elements
        except ValueError:
            constructed = None
        good = (
            predicate == brute
            and nu_stable
            and (constructed is None or constructed == brute)
        )
        ok = ok and good
        checks.append({
            "alpha": list(alpha),
            "size": len(brute),
            "predicate_matches": predicate == brute,
            "constructive_matches": None if constructed is None
            else constructed == brute,
            "nu_stable": nu_stable,
            "ok": good,
        })
    dim = dim_center(n)
    dim_ok = dim == len(labelled)
    return {
        "suite": "classes",
        "n": n,
        "class_count": len(labelled),
        "dim_center": dim,
        "dim_matches": dim_ok,
        "checks": checks,
        "ok": ok and dim_ok,
    }


def suite_hooks(n: int, force: bool = False) -> dict:
    """Hook-property filtering vs. brute force for every hook shape of n."""
    labelled = label_max_classes(n, force=force)
    checks = []
    ok = True
    for alpha in enumerate_maximal(n):
        if hook_kind(alpha) == "not_hook":
            continue
        brute = labelled[alpha].elements
        target = sort_to_partition(alpha)
        filtered = frozenset(
            p for p in all_perms(n)
            if cycle_type(p) == target and hook_properties(p, alpha)
        )
        good = filtered == brute
        ok = ok and good
        checks.append({
            "alpha": list(alpha),
            "kind": hook_kind(alpha),
            "size": len(brute),
            "ok": good,
        })
    return {"suite": "hooks", "n": n, "checks": checks, "ok": ok}


def suite_iprod(n: int, force: bool = False) -> dict:
    """Product decomposition of even-first labels and the length law."""
    labelled = label_max_classes(n, force=force)
    checks = []
    ok = True
    for alpha in enumerate_maximal(n):
        if len(alpha) < 2 or alpha[0] % 2 == 1:
            continue
        brute = labelled[alpha].elements
        product = class_product(alpha, force=force).elements
        good = product == brute
        ok = ok and good
        checks.append({"alpha": list(alpha), "size": len(brute), "ok": good})
        if hook_kind(alpha[1:]) != "not_hook" or not alpha[1:]:
            formula = size_sigma_formula(alpha)
            good = formula == len(brute)
            ok = ok and good
            checks.append({
                "alpha": list(alpha), "formula": formula, "ok": good,
            })
    law_ok = True
    for n1 in range(1, n):
        n2 = n - n1
        full_cycles = [
            p for p in all_perms(n1) if cycle_type(p) == (n1,)
        ]
        for s1 in full_cycles:
            for s2 in all_perms(n2):
                if iprod_length_law(s1, s2) != length(iprod(s1, s2)):
                    law_ok = False
    ok = ok and law_ok
    return {
        "suite": "iprod", "n": n, "length_law_ok": law_ok,
        "checks": checks, "ok": ok,
    }


def suite_center(n: int, force: bool = False) -> dict:
    """Centrality, independence and dimension of the ideal-sum family."""
    report = verify_center_basis(n, force=force)
    return {
        "suite": "center",
        "n": n,
        "family_size": len(report.alphas),
        "dim_center": report.dim,
        "all_central": report.all_central,
        "independent": report.independent,
        "failures": list(report.failures),
        "ok": report.ok,
    }


SUITES = {
    "classes": suite_classes,
    "hooks": suite_hooks,
    "iprod": suite_iprod,
    "center": suite_center,
}


def run_suites(n: int, which: str = "all", force: bool = False) -> dict:
    """Run one suite or all of them at degree n."""
    if which == "all":
        names = list(SUITES)
    elif which in SUITES:
        names = [which]
    else:
        raise ValueError(f"unknown suite {which!r}; expected all or one of "
                         f"{sorted(SUITES)}")
    results = {name: SUITES[name](n, force=force) for name in names}
    return {
        "n": n,
        "suites": results,
        "ok": all(r["ok"] for r in results.values()),
    }
