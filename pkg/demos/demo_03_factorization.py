"""
Condition (*) and Brink-Howlett factorizations
==============================================

An element w with wJ = I factors as a length-additive product of the
parabolic elements v[alpha, K] = w0(K + alpha) w0(K).
"""

from radonflag import (all_factorizations, bh_factorize, build_root_system, condition_star,
                       condition_star_triples, element_from_word, fiber_dimension, v_elem)

A3 = build_root_system("A3")

#%%
# s2 s1 s3 s2 carries alpha_3 to alpha_1.
w = element_from_word(A3, [2, 1, 3, 2])
print("wJ = I for I={1}, J={3}:", condition_star(w, {1}, {3}))
print("fibre dimension", fiber_dimension(w, {1}, {3}))

#%%
# The canonical factorization peels factors from the right, smallest alpha first.
for step in bh_factorize(w, {1}, {3}):
    print(f"v[alpha_{step.alpha}, {sorted(step.inner)}] = {list(step.factor.word)}")

#%%
# Other factorizations may exist; all of them are length additive.
for steps in all_factorizations(w, {1}, {3}):
    print([(s.alpha, sorted(s.inner)) for s in steps])

#%%
# The v elements of B2: v[2, {1}] is w0 s1, of length 3, and fixes alpha_1.
B2 = build_root_system("B2")
v = v_elem(B2, 2, {1})
print(v, v.length, "alpha_1 ->", f"alpha_{v.simple_image(1)}")

#%%
# How many triples (w, I, J) satisfy condition (*) in each small type?
for name in ["A2", "A3", "B2", "B3", "C3", "G2"]:
    rs = build_root_system(name)
    print(name, sum(1 for _ in condition_star_triples(rs)))
