"""
Brute-force verification
========================

The oracle rebuilds each root system along a second route (root strings,
a symmetrized form, permutations of the root set) and checks the main
implementation against it.
"""

import time

from radonflag import build_root_system, verify_all

#%%
# All suites on the default small types, with fewer random weights.
for name in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]:
    start = time.perf_counter()
    results = verify_all(build_root_system(name), seed=0, n_weights=20)
    status = "ok" if all(r.passed for r in results) else "FAILED"
    total = sum(r.instances_checked for r in results)
    print(f"{name}: {status}, {total} checks in {time.perf_counter() - start:.1f} s")

#%%
# F4 and E6 are opt-in: raise the cap explicitly (this takes a while).
# verify_all(build_root_system("F4"), cap=2_000, suites=["lengths"])
