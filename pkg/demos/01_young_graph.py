"""Young's lattice from multiplication by s_1.

Run as a script; each cell prints something worth looking at.
"""

# %%
from math import factorial

from hopftower.construct import graph_pair
from hopftower.dgg import check_duality, fomin_check, path_counts
from hopftower.instances import canonical_alpha_beta, get_instance

sym = get_instance("sym")
alpha, beta = canonical_alpha_beta(sym)
print("alpha =", alpha, " beta =", beta)

# %% Multiplying by s_1 adds a box, so Gamma(beta) is Young's lattice.
N = 5
g, gp = graph_pair(sym, alpha, beta, N)
for n in range(N):
    for i, name in enumerate(g.names[n]):
        ups = [g.names[n + 1][j] for j in g.matrices[n][i].nonzero()[0]]
        print(f"{name:>12} -> {' '.join(ups)}")

# %% Sym is self-dual, so the two graphs coincide.
print("Gamma == Gamma':", g == gp)
print("differential coefficient:", check_duality(g, gp, N).r)

# %% Path counts are standard tableaux counts and their squares sum to n!.
f = path_counts(g, N)
print({g.names[N][i]: f[N][v] for i, v in enumerate(g.vertices[N])})
for row in fomin_check(g, gp, N).rows:
    print(row["n"], row["sum_ff"], factorial(row["n"]))
