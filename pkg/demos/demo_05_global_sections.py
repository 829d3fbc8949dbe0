"""
Checking the global-sections hypotheses
=======================================

The report walks the factorization of w, records lam_i = v^-1 * lam_{i-1}
and eta_i = v^-1 lam_{i-1}, and tests eta_i for antidominance on the Levi
of each step, a sufficient condition for irreducibility of the generalized
Verma module.
"""

import json

from radonflag import Weight, build_root_system, check_main_theorem2, element_from_word
from radonflag import serialize
from radonflag.cli import dumps

A2 = build_root_system("A2")
w = element_from_word(A2, [1, 2])

#%%
# The worked example: regular, one step, eta_1 = omega_2 antidominant.
rep = check_main_theorem2(Weight([-1, 0]), w, {2}, {1})
print(dumps(serialize.report_to_json(rep)))

#%%
# Three other outcomes.
for lam in ([1, 0], [-4, 0]):
    r = check_main_theorem2(Weight(lam), w, {2}, {1})
    print(lam, r.verdict.value, [c.irreducibility.value for c in r.chain])
print("w = s1:", check_main_theorem2(Weight([-1, 0]), element_from_word(A2, [1]), {2}, {1}).verdict.value)

#%%
# The same report from the command line.
request = {"command": "check-theorem2", "root_system": {"series": "A", "rank": 2},
           "arguments": {"I": [2], "J": [1], "w": [1, 2], "lambda": ["-1", "0"]}}
print("echo '" + json.dumps(request) + "' | radonflag --format text")
from radonflag.cli import run
print(run(serialize.request_from_json(request), "text")[0])
