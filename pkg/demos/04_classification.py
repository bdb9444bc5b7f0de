"""Inequivalent codes, automorphism groups and the mass formula.

Codes that differ by a coordinate permutation (and per-coordinate scaling
for q = 3) are lumped together.  Summing |G|/|Aut| over the classes with
a given hull dimension has to give back the labeled count.
"""
from hullcensus.equivalence import all_classes, classify, conjecture_check, mass_formula_check

every = classify(4, 2, 2)
for r in every.records:
    print(r.canonical_generator.to_rows(), "hull", r.hull_dim, "d", r.min_d, "dual d", r.dual_d,
          "|Aut|", r.aut_order, ",".join(r.flags))

good = classify(6, 3, 2, min_d=2, min_dd=2).census
print("\n[6,3]_2 with d, dual d >= 2:", good.totals())
good = classify(6, 3, 3, min_d=2, min_dd=2).census
print("[6,3]_3 with d, dual d >= 2:", good.totals())

recs = all_classes(8, 4, 2)
print(f"\n[8,4]_2: {len(recs)} classes")
for l in range(5):
    m = mass_formula_check(recs, 8, 4, l, 2)
    print(f"  l={l}: sum |G|/|Aut| = {m.labeled_total}, formula {m.formula_total}")

for args in [(4, 2, 2), (6, 3, 2), (8, 4, 2), (6, 3, 3)]:
    rep = conjecture_check(*args)
    print("class counts by hull", args, rep.counts, "chain holds" if rep.holds else "chain fails")
