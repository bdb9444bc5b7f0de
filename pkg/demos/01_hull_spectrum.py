"""How many [n, k]_q codes have a hull of each dimension?

Three independent formulas give the same answer, and small cases can be
checked against an exhaustive enumeration of every subspace.
"""
from hullcensus import gaussian_binomial, spectrum
from hullcensus.brute_oracle import brute_spectrum

# Ternary codes of length 8 and dimension 4
s = spectrum(8, 4, 3, method="sendrier")
for l, count in enumerate(s.counts):
    print(f"hull dim {l}: {count:>12,}")
print("total", s.total, "=", gaussian_binomial(8, 4, 3))

# the product formula and the dedicated LCD formula agree
assert spectrum(8, 4, 3, "product").counts == s.counts
assert spectrum(8, 4, 3, "lcd_closed").counts == s.counts

# most codes are LCD, and the counts fall quickly with the hull dimension
share = s.counts[0] / s.total
print(f"LCD share: {share:.1%}")

# brute force for a size that runs in a couple of seconds
small = brute_spectrum(7, 3, 2)
print("[7,3]_2 by enumeration:", small.counts)
print("[7,3]_2 by formula:    ", spectrum(7, 3, 2).counts)
