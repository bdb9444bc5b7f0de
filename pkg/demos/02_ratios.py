"""Consecutive hull counts shrink by at least a factor q^(l+1) - 1.

The ratio A(l)/A(l+1) has an exact closed form alpha * (q^(l+1) - 1).
For odd q and even n with k - l odd the factor alpha can drop to 1/2,
which only happens at the very top (k = n/2, l = k - 1).
"""
from hullcensus.ratio_lab import display_ratio, predicted_mu, ratio_report, verify_main_theorem

for n, k, q in [(9, 4, 3), (10, 5, 2), (8, 4, 3)]:
    print(f"[{n},{k}]_{q}")
    for l in range(k):
        r = ratio_report(n, k, l, q)
        p = predicted_mu(n, k, l, q)
        flag = "  (tight)" if r.tight else ""
        print(f"  l={l}: ratio {display_ratio(r.ratio):>8}  alpha {str(r.alpha):>8}"
              f"  mu {r.mu:>3}  predicted {p.kind} {p.value}{flag}")

reports, violations, excluded = verify_main_theorem([2, 3, 4, 5, 7], 12)
print(f"\nchecked {len(reports)} tuples, {len(violations)} violations")
print("excluded (no self-dual codes at the top):", excluded)
