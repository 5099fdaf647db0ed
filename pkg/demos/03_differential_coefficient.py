"""Weights on the degree-one elements scale the differential coefficient.

alpha = a p_1 and beta = b s_1 give dual graded graphs with r = <alpha, beta> = ab,
on either side of the product.
"""

# %%
from itertools import product

from hopftower.construct import Hand, differential_coefficient, graph_pair
from hopftower.dgg import check_duality, fomin_check
from hopftower.instances import canonical_alpha_beta, get_instance

N = 5
for key in ("sym", "nsym-qsym"):
    h = get_instance(key)
    for (a, b), hand in product(product([1, 2, 3], repeat=2), Hand):
        alpha, beta = canonical_alpha_beta(h, [(a, b)])
        g, gp = graph_pair(h, alpha, beta, N, hand)
        r = check_duality(g, gp, N).r
        print(f"{key:>10} a={a} b={b} {hand.value:>5}: r={r}  <alpha,beta>={differential_coefficient(h, alpha, beta)}")

# %% Fomin's count for a doubled Young lattice: 2^n n!.
sym = get_instance("sym")
g, gp = graph_pair(sym, *canonical_alpha_beta(sym, [(1, 2)]), N)
print([row["sum_ff"] for row in fomin_check(g, gp, N).rows])
