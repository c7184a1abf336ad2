# %% [markdown]
# # Random versus class-conditional latent noise
#
# Trains a network briefly on 100 MNIST digits, then perturbs the latent
# vectors two ways at equal std and measures where the noise lands.
#
# Class-conditional noise is decoded from the logits through the tied top
# layer, so all of it lies in the 10-dimensional span the classifier reads.
# Random noise spreads over all 128 units and mostly misses that span.  The
# upshot, visible below, is that the class-conditional kind moves decisions
# *more* per unit std: it is targeted at class-relevant directions rather
# than being a gentler perturbation.

# %%
import numpy as np

from semnoise.config import RunConfig
from semnoise.harness import prepare_data, train
from semnoise.model import Variant, decoder_g2, encode
from semnoise.perturbation import PerturbMode, PerturbSpec, minmax_inject, perturb_class_conditional, perturb_random
from semnoise.rng import Rng

# %% [markdown]
# The injection itself: rescale the vector to [0, 1] by its own min and max,
# add the noise, scale back.

# %%
print(minmax_inject(np.array([0.0, 2.0, 4.0]), np.array([0.1, -0.1, 0.0])))

# %%
cfg = RunConfig(variant=Variant.PERTURB_CLASS_COND, per_class=10, epochs=30, out_dir="runs/demo_latent_noise")
data = prepare_data(cfg)
report = train(cfg, data=data)
params = report.best_params
print(f"test error after {cfg.epochs} epochs on {len(data.train_y)} images: {report.test_err:.2f}%")

# %%
z, y = encode(params, data.val_x[:2000])
clean = y.argmax(1)
w = params["fc2.w"]
b = params["fc2.b"]
q, _ = np.linalg.qr(w)  # orthonormal basis of the classifier's input span


def in_span(e):
    return np.sum((e @ q) ** 2) / np.sum(e ** 2)


for std in (0.1, 0.2, 0.5, 1.0):
    zr = perturb_random(z, Rng(0), PerturbSpec(std, PerturbMode.RANDOM_ON_Z))
    zc, _ = perturb_class_conditional(z, y, decoder_g2(params), Rng(0), PerturbSpec(std))
    keep_r = np.mean((zr @ w + b).argmax(1) == clean)
    keep_c = np.mean((zc @ w + b).argmax(1) == clean)
    print(f"std {std:4.1f}: energy in classifier span  random {in_span(zr - z):.2f}  cc {in_span(zc - z):.2f}"
          f"   decision kept  random {100 * keep_r:5.1f}%  cc {100 * keep_c:5.1f}%")
