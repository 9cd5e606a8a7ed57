#!/usr/bin/env python3
"""Tour of the local cohomology tables: supports in orbit closures,
iterated groups, and the character identities behind them."""

from binarycubics import catalog, characters as ch

# ----------------------------------------------------------------------
# The orbit stratification of the space of binary cubics: the origin,
# the cone over the twisted cubic, the discriminant hypersurface, and
# the dense orbit of squarefree cubics.

print("orbit data (dimension, component group, local systems):")
for orbit in catalog.ORBITS:
    print(f"  {orbit.name}: dim {orbit.dim}, representative {orbit.representative}, "
          f"component group {orbit.component_group}, {orbit.local_systems} local system(s)")

# ----------------------------------------------------------------------
# Local cohomology of the coordinate ring with support in each closure.

print("\nH^k of S with support in orbit closures (all other degrees vanish):")
for support, k in (("O3bar", 1), ("O2bar", 2), ("O0", 4)):
    factors = catalog.local_cohomology("S", support, k)
    flag = " (non-split extension)" if catalog.local_cohomology_is_extension("S", support, k) else ""
    print(f"  H^{k}_{support}(S) = {' + '.join(factors)}{flag}")

# Iterated groups follow by composing rows whenever the inner result is
# a single module:
print("\niterated examples:")
print("  H^2_O0(H^2_O2bar(S)) =", catalog.local_cohomology("D0", "O0", 2))
print("  H^1_O2bar(S_Delta/S) =", catalog.local_cohomology("SdeltaModS", "O2bar", 1))

# ----------------------------------------------------------------------
# Local cohomology of the simples.  Full-support modules that equal
# their own localization have none at all; queries with support at
# least the module's own support return the module in degree zero.

print("\nselected rows for the simples:")
for name, support, k in (("P", "O2bar", 1), ("P", "O0", 1), ("P", "O0", 3),
                         ("Q0", "O3bar", 1), ("Q0", "O2bar", 2),
                         ("G1", "O3bar", 1), ("D0", "O0", 2)):
    print(f"  H^{k}_{support}({name}) =", " + ".join(catalog.local_cohomology(name, support, k)) or "0")

print("\nfull-support examples with vanishing local cohomology:")
for name in ("G2", "G3", "Q1"):
    rows = [k for support in catalog.SUPPORT_CLOSURES
            for k in range(6) if catalog.local_cohomology(name, support, k)]
    print(f"  {name}: {'nothing' if not rows else rows}")

print("\ndegree-zero rule when the support is not smaller:",
      catalog.local_cohomology("E", "O2bar", 0))

# ----------------------------------------------------------------------
# The row H^1_O3bar(G1) = D1 is a character-level identity: G1
# localizes to the length-two module F1, so the quotient has the
# character [F1] - [G1].  Replay it exactly on a box.

g1, d1 = catalog.character_of("G1"), catalog.character_of("D1")
difference = ch.localize(g1) - g1
witness = ch.first_disagreement(difference, d1, -15, 15)
print("\n[localize(G1)] - [G1] = [D1] on [-15, 15]:",
      "exact agreement" if witness is None else f"differs at {witness}")
