"""
Root systems from Cartan matrices
=================================

Build a root system, list its positive roots with their coroots, and look
at the half-sums rho_K that show up throughout the parameter bookkeeping.
"""

from radonflag import build_root_system, cartan_matrix, pair, rho_nil, rho_of

#%%
# The Cartan matrix uses Bourbaki labels and ``C[i][j] = <alpha_j, coroot_i>``.
# In B3 the short simple root is alpha_3, so row 3 carries the -2.
print(cartan_matrix("B", 3))

#%%
# Roots are integer vectors in the basis of simple roots; coroots are in
# the basis of simple coroots.
rs = build_root_system("B3")
for beta in rs.positive_roots:
    print(f"{beta}  coroot {rs.coroot(beta)}")

#%%
# Weights are exact rationals in fundamental-weight coordinates, so rho is
# the all-ones vector and rho_K for a Levi subset K is usually fractional.
A2 = build_root_system("A2")
print("rho      ", A2.rho)
print("rho_{2}  ", rho_of(A2, {2}))
print("rho_n{2} ", rho_nil(A2, {2}))
print("<rho, (a1+a2)^> =", pair(A2, A2.rho, (1, 1)))

#%%
# Every finite type is available; the exceptional ones build in milliseconds.
for name in ["A4", "D5", "F4", "E6", "E7", "E8"]:
    print(name, len(build_root_system(name).positive_roots), "positive roots")
