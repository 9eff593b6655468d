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
# # A toy verifier and a PGD impersonation attack
#
# Generates a small corpus, trains the verifier, then pushes a few nontarget
# trials toward acceptance with l2 PGD.

# %%
import tempfile
from pathlib import Path

import numpy as np

from mdd.asv import AsvScorer, embed, load_features, score, train_asv
from mdd.attacks import AttackConfig, attack_trials
from mdd.corpus import Label, build_trials, load_corpus, split_by_speaker
from mdd.detector import eer
from mdd.synth import generate_corpus

root = Path(tempfile.mkdtemp()) / "corpus"
generate_corpus(root, n_speakers=10, n_utterances=16, seed=1)
manifest = load_corpus(root, root / "transcripts.tsv")
train_ids, held_ids = split_by_speaker(manifest, 10)
feats = load_features(manifest, [u.id for u in manifest.utterances])
len(train_ids), len(held_ids)

# %%
result = train_asv(manifest, feats, epochs=20, seed=0, utterance_ids=train_ids)
model = result.model
print("train accuracy", result.train_accuracy)

# %%
trials = build_trials(manifest, 40, 40, seed=2, utterance_ids=held_ids)
emb = {i: embed(model, feats[i]) for i in held_ids}
tar = [score(emb[t.enroll_id], emb[t.test_id]) for t in trials if t.label is Label.TARGET]
non = [score(emb[t.enroll_id], emb[t.test_id]) for t in trials if t.label is Label.NONTARGET]
print(f"clean EER {eer(tar, non):.1f}%  mean target {np.mean(tar):.3f}  mean nontarget {np.mean(non):.3f}")

# %% [markdown]
# The attack maximises the cosine score against the enrolment embedding,
# within an l2 ball of radius 0.02 * ||x||.

# %%
nontarget = [t for t in trials if t.label is Label.NONTARGET]
run = attack_trials(lambda t: AsvScorer(model, emb[t.enroll_id]), manifest, nontarget,
                    AttackConfig(iterations=50))
adv = [ex.achieved_score for ex in run.examples]
print(f"attacked EER {eer(tar, adv):.1f}%  mean adversarial score {np.mean(adv):.3f}")

# %%
ex = run.examples[0]
print(f"epsilon {ex.epsilon:.4f}  used {ex.perturbation_norm:.4f}  "
      f"score {ex.initial_score:.3f} -> {ex.achieved_score:.3f}")
ex.trace[:5], ex.trace[-1]
