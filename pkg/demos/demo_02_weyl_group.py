"""
Weyl group elements and the rho-shifted action
==============================================

Elements are kept in a canonical matrix form, so two words for the same
element compare equal.  Lengths are inversion counts.
"""

from radonflag import (Weight, act, build_root_system, element_from_word, enumerate_group,
                       longest_element, star_act)

A2 = build_root_system("A2")

#%%
# Braid relation and canonical words.
w = element_from_word(A2, [2, 1, 2])
print(w, "length", w.length, "equals s1 s2 s1:", w == element_from_word(A2, [1, 2, 1]))

#%%
# The linear action and the star action ``w * lam = w(lam - rho) + rho``.
s1 = element_from_word(A2, [1])
print("s1 omega_1   =", act(s1, Weight([1, 0])))
s2s1 = element_from_word(A2, [2, 1])
print("s2s1 * (-1,0) =", star_act(s2s1, Weight([-1, 0])))

#%%
# Group orders and longest elements of parabolic subgroups.
for name in ["A3", "B3", "G2"]:
    rs = build_root_system(name)
    W = enumerate_group(rs)
    print(f"|W({name})| = {len(W)}, l(w0) = {longest_element(rs, rs.indices).length}, "
          f"l(w0 of {{1,2}}) = {longest_element(rs, {1, 2}).length}")

#%%
# Length distribution (the Poincare polynomial coefficients) of W(B3).
from collections import Counter
print(sorted(Counter(u.length for u in enumerate_group(build_root_system("B3"))).items()))
