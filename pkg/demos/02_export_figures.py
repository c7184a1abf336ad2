# %% [markdown]
# # Latent CSV and reconstruction grids
#
# Uses a finished run (by default the first class-conditional run of the
# Table 1 matrix, otherwise a short fresh run) to write
#
# * ``latents_train.csv``: id, label and the 128 latent units for the 50k pool,
#   ready for t-SNE or UMAP in any external tool;
# * two PGM grids with the originals on top and five decodings of perturbed
#   latents below, one per perturbation mode.

# %%
from pathlib import Path

import numpy as np

from semnoise.checkpoint import load_checkpoint
from semnoise.config import RunConfig, default_data_dir
from semnoise.data import load_split
from semnoise.export import export_latents, export_recon_grid
from semnoise.harness import train
from semnoise.model import Variant

run = Path("results/table1_pc100/perturb-cc_pc100_set1")
if not (run / "best.ckpt").exists():
    run = Path("runs/demo_export")
    train(RunConfig(variant=Variant.PERTURB_CLASS_COND, per_class=10, epochs=20, out_dir=str(run)))
ckpt = load_checkpoint(run / "best.ckpt")
split = load_split(default_data_dir())

# %%
out = Path("runs/demo_export")
out.mkdir(parents=True, exist_ok=True)
n = export_latents(ckpt, split.train_images, split.train_labels, out / "latents_train.csv")
print(f"{n} latent rows written")

# %% [markdown]
# One original per class, then five perturbed decodings per mode, for a
# side-by-side look at what each kind of latent noise does to the image.

# %%
picks = np.array([np.flatnonzero(split.test_labels == c)[0] for c in range(10)])
for mode in ("class_conditional", "random"):
    grid = export_recon_grid(ckpt, split.test_images[picks], mode, 5, out / f"grid_{mode}.pgm", std=0.2)
    print(mode, grid.shape, "->", out / f"grid_{mode}.pgm")
