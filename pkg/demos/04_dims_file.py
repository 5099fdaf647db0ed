"""Dimension tables written to disk and checked back.

The same JSON format is accepted by ``hopftower dims --dims-file``.
"""

# %%
import tempfile
from pathlib import Path

from hopftower.cli import main
from hopftower.construct import graph_pair
from hopftower.instances import canonical_alpha_beta, get_instance
from hopftower.tower import TowerDims, tower_from_graph_pair, verify_dimension_theorem

sym = get_instance("sym")
g, gp = graph_pair(sym, *canonical_alpha_beta(sym), 3)
t = tower_from_graph_pair(g, gp, 3)
print(t.to_json())

# %% A consistent table passes.
print(verify_dimension_theorem(t, 3).passed)

# %% Bump one projective dimension and the rank where it lives fails.
ranks = [list(r) for r in t.ranks]
ranks[2][0] = (1, 3)
broken = TowerDims(tuple(tuple(r) for r in ranks))
for row in verify_dimension_theorem(broken, 3).rows:
    print(row)

# %% Through the command line.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "broken.json"
    path.write_text(broken.to_json())
    print("exit code:", main(["dims", "--dims-file", str(path)]))
