"""NSym ribbons against QSym fundamentals: the 0-Hecke tower.

Simples are one-dimensional and the projective indexed by a composition has
dimension equal to the number of permutations with that descent composition.
"""

# %%
from collections import Counter
from itertools import permutations

from hopftower.combinat import descent_composition, render, COMPOSITION
from hopftower.construct import graph_pair
from hopftower.instances import canonical_alpha_beta, get_instance
from hopftower.tower import algebra_dimension, tower_from_graph_pair

nq = get_instance("nsym-qsym")
N = 4
g, gp = graph_pair(nq, *canonical_alpha_beta(nq), N)
t = tower_from_graph_pair(g, gp, N)

# %% dimS and dimP at rank N, next to a brute-force descent count.
brute = Counter(descent_composition(w) for w in permutations(range(1, N + 1)))
for alpha, (s, p) in zip(g.vertices[N], t.ranks[N]):
    print(f"{render(alpha, COMPOSITION):>10}  dimS={s}  dimP={p}  descents={brute[alpha]}")

# %% The algebra dimensions are n!.
print([algebra_dimension(t, n) for n in range(N + 1)])

# %% Gamma' is a tree: every vertex above the root has exactly one parent.
print([m.sum(axis=0).tolist() for m in gp.matrices])
