"""Two groups that show where the p-nilpotency criteria stop applying.

A5 x C5 at p = 5: every order-5 subgroup except the central C5 has a
5-nilpotent supplement, and the central one is normal.  The criterion still
does not apply, because the normalizer of a Sylow 5-subgroup is not
5-nilpotent, and the p-supersolubility variant is out of scope because A5
is not 5-soluble.

(C5 x C5) ⋊ C3 at p = 5: the Sylow 5-subgroup P has order 25, so its only
subgroups of index p^2 and of order p^2 are 1 and P, both normal.  Since
gcd(75, 4) = 1 but gcd(75, 24) = 3, the corollary variants that only ask
for (|G|, p - 1) = 1 accept this group, and it is not 5-nilpotent.
"""
from math import gcd

from pinilot import named
from pinilot.harness import check_corollary, check_remark_psupersoluble, check_theorem_a
from pinilot.invariants import is_p_nilpotent, is_p_soluble, sylow_subgroup
from pinilot.lattice import subgroups_of_order
from pinilot.pi import has_p_nilpotent_supplement, is_pi_normal
from pinilot.structure import is_normal

G = named.a5_times_c5()
print(f"{G.name}: order {G.order}")
five = subgroups_of_order(G.whole, 5)
bare = [H for H in five if not has_p_nilpotent_supplement(G, H, 5)[0]]
print(f"  order-5 subgroups: {len(five)}; without a 5-nilpotent supplement: {len(bare)}")
Z = bare[0]
print(f"  that subgroup is normal: {is_normal(G, Z)}, Π-normal: {is_pi_normal(G, Z)[0]}")
print(f"  5-soluble: {is_p_soluble(G, 5)}, 5-nilpotent: {is_p_nilpotent(G, 5)}")
rec = check_theorem_a(G, 5, G.whole, 1)
print(f"  theorem-A at m = 1: {rec.status}, clause {rec.witness['clause']!r}")
rec = check_remark_psupersoluble(G, 5, G.whole, 1)
print(f"  p-supersoluble variant: {rec.status} ({rec.reason})")
print()

G = named.c5c5_rtimes_c3()
P = sylow_subgroup(G, 5)
print(f"{G.name}: order {G.order}, |P| = {P.order}, 5-nilpotent: {is_p_nilpotent(G, 5)}")
for order in (1, 25):
    subs = subgroups_of_order(P, order)
    print(f"  subgroups of P of order {order}: {len(subs)}, normal in G: {all(is_normal(G, H) for H in subs)}")
print(f"  gcd(|G|, p - 1) = {gcd(G.order, 4)}, gcd(|G|, p^2 - 1) = {gcd(G.order, 24)}")
for cid in ("B-2-maximal-weak", "B-2-minimal-weak", "B-2-maximal", "B-2-minimal"):
    print(f"  {cid:18s} {check_corollary(G, cid, 5).status}")
