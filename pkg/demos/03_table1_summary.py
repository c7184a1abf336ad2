# %% [markdown]
# # MNIST 100-per-class comparison
#
# Reads (or trains) the 4-variant x 3-set matrix and prints per-set and mean
# test errors next to the published reference numbers.  With cached runs in
# ``results/table1_pc100`` this finishes instantly; from scratch it takes
# roughly 6 minutes per run on one CPU core.

# %%
import logging

from semnoise.config import default_data_dir
from semnoise.table1 import acceptance_matrix, table1

logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
result = table1(acceptance_matrix(default_data_dir(), "results/table1_pc100"))
print(result.to_csv())

# %%
for v in result.matrix.variants:
    sets = [result.errors[(v.value, 100, s)] for s in result.matrix.sets]
    print(f"{v.value:15s} mean {result.mean(v.value, 100):5.2f}  spread {max(sets) - min(sets):4.2f}")
