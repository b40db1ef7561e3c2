"""Walk through the Π-property on the symmetric group of degree 4.

S4 has chief series 1 < V4 < A4 < S4.  For each subgroup H we look at the
chief pairs where H fails, then ask the two weaker questions: does H have a
Π-normal witness, and does it have a 2-nilpotent supplement?
"""
from pinilot import named
from pinilot.lattice import all_subgroups, chief_series
from pinilot.pi import has_p_nilpotent_supplement, is_pi_normal, pi_property_failures


def show(G, H):
    el = G.elements
    return "<" + ", ".join(el[g].cycle_string(one_indexed=True) for g in H.gens) + ">"


G = named.symmetric(4)
print("chief series orders:", [N.order for N in chief_series(G)])
print()

# one representative per conjugacy class is enough: every predicate here is conjugation invariant
for cls in all_subgroups(G).conjugacy_classes():
    H = cls[0]
    fails = pi_property_failures(G, H)
    verdict = "has the Π-property" if not fails else "fails"
    print(f"|H| = {H.order:2d}  {show(G, H):28s} {len(cls)} conjugate(s), {verdict}")
    for f in fails:
        print(f"    at ({f.pair.lower.order}, {f.pair.upper.order}): normalizer index "
              f"{f.normalizer_index}, offending primes {sorted(f.offending_primes)}")
    normal, w = is_pi_normal(G, H)
    if fails:
        print(f"    Π-normal: {normal}" + (f" (T of order {w.T.order}, I of order {w.I.order})" if normal else ""))
        print(f"    2-nilpotent supplement: {has_p_nilpotent_supplement(G, H, 2)[0]}")
