# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Features, masks and the forward process
#
# A walk from a synthetic utterance to the corrupted spectrogram that the
# denoiser learns to undo. Figures go to `demos/out/`.

# %%
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from mdd.diffusion import composite_target, forward_sample, make_schedule
from mdd.features import FeatureStats, extract, invert
from mdd.masking import apply_mask, sample_mask
from mdd.synth import make_speakers, session_variant, synthesize

out = Path("out")
out.mkdir(exist_ok=True)
rng = np.random.default_rng(0)

# %% [markdown]
# One utterance from a synthetic speaker. The transcript decides the phones.

# %%
spk = make_speakers(4, rng)[1]
wave = synthesize(["sa", "hiro", "fe"], session_variant(spk, rng), 1.0, rng)
mel = extract(wave)
mel.shape  # (80 Mel bins, 98 frames)

# %%
stats = FeatureStats.from_features([mel.values])
x0 = stats.normalize(mel.values)
x0.min(), x0.max()

# %% [markdown]
# Patch masks: 16x16 patches, masked count = round(ratio * n_patches).

# %%
fig, axes = plt.subplots(1, 3, figsize=(11, 3))
for ax, ratio in zip(axes, (0.1, 0.5, 1.0)):
    pattern = sample_mask(x0.shape, ratio, seed=3)
    ax.imshow(apply_mask(x0, pattern), origin="lower", aspect="auto", cmap="magma")
    ax.set_title(f"ratio {ratio}: {pattern.n_masked_patches}/{pattern.n_patches} patches")
fig.tight_layout()
fig.savefig(out / "masks.png", dpi=100)

# %% [markdown]
# The composite target N = x_m + sigma * eps is the endpoint of the forward
# process, so even at t = T the unmasked content survives under the noise.

# %%
sched = make_schedule()
pattern = sample_mask(x0.shape, 0.1, seed=3)
n_target = composite_target(x0, pattern, sigma=0.1, seed=4).values
fig, axes = plt.subplots(1, 4, figsize=(14, 3))
for ax, t in zip(axes, (1, 100, 400, 1000)):
    ax.imshow(forward_sample(x0, n_target, t, sched), origin="lower", aspect="auto", cmap="magma")
    ax.set_title(f"t = {t}, abar = {sched.alpha_bar_t(t):.3g}")
fig.tight_layout()
fig.savefig(out / "forward.png", dpi=100)

# %%
print("correlation of x_T with x_0:",
      np.corrcoef(forward_sample(x0, n_target, 1000, sched).ravel(), x0.ravel())[0, 1].round(3))

# %% [markdown]
# Back to audio with the phase-reconstruction stand-in for a vocoder.

# %%
audio = invert(mel, iterations=32)
again = extract(audio)
err = np.linalg.norm(again.values - mel.values) / np.linalg.norm(mel.values)
print(f"relative log-Mel error after inversion: {err:.3f}")
