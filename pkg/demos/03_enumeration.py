"""Exhaustive enumeration by reduced row echelon form, with shards and a checkpoint.

Every subspace has one RREF generator, so walking the pivot sets and the
free cells visits each code once.  A shard is one pivot set, which makes
the work easy to split, resume and merge.
"""
import tempfile
from pathlib import Path

from hullcensus.brute_oracle import (EnumerationTask, brute_filtered_count, brute_spectrum,
                                     pivot_sets)
from hullcensus.hull_census import spectrum

n, k, q = 6, 3, 3
shards = len(pivot_sets(n, k))
print(f"[{n},{k}]_{q}: {shards} shards")

with tempfile.TemporaryDirectory() as d:
    ck = Path(d) / "run.json"
    # do the first half, then pretend the process died and resume
    brute_spectrum(n, k, q, shards=range(shards // 2), checkpoint=ck)
    full = brute_spectrum(n, k, q, checkpoint=ck)
print("enumerated:", full.counts)
print("formula:   ", spectrum(n, k, q).counts)

# labeled codes with no weight-1 words on either side
tally = brute_filtered_count(EnumerationTask(2, 6, 3, min_d=2, min_dd=2))
for (hull, flags), count in sorted(tally.items()):
    print(f"hull {hull} {','.join(flags) or '-':8s} {count}")
