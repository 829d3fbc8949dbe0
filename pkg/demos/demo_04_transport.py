"""
Moving TDO parameters
=====================

A Radon transform along the orbit of w, twisted by a character mu of P_I,
moves the parameter lam on G/P_I to w^-1 * lam + w^-1 mu on G/P_J.
"""

from radonflag import (Weight, annihilator_label, annihilator_partner, build_root_system,
                       check_equivalence, det_twist, element_from_word, inverse_label,
                       mu_for_untwisted, rho_nil, transport)

A2 = build_root_system("A2")
w = element_from_word(A2, [1, 2])
lam = Weight([-1, 0])

#%%
# Untwisted transport of lam = (-1, 0) from G/P_{2} to G/P_{1}.
print(transport(lam, w, Weight.zero(2), {2}, {1}))

#%%
# The twist mu = rho - w rho undoes the rho shift; in particular 0 goes to 0.
mu = mu_for_untwisted(w)
print("mu =", mu, "= -det_twist:", mu == -det_twist(w, {2}, {1}))
print(transport(Weight.zero(2), w, mu, {2}, {1}))

#%%
# The kernel of psi^lam is the annihilator of a generalized Verma module
# with highest weight lam - 2 rho_{n_I}.  Moving along w gives the same
# ideal described from the J side, which is exactly the transported label.
hw = annihilator_label(lam, {2}, A2).highest_weight
partner = annihilator_partner(hw, w, {2}, {1})
target = transport(lam, w, Weight.zero(2), {2}, {1}).param
print(hw, "->", partner, "| transported label:", target - 2 * rho_nil(A2, {1}))

#%%
# The inverse transform R^{w^-1, -w^-1 mu}_! brings the label back.
spec = check_equivalence(lam, w, Weight([-3, 0]), {2}, {1})
print(spec.target, "inverse w:", spec.inverse_w, "inverse mu:", spec.inverse_mu)
print("round trip:", inverse_label(spec) == spec.source)
