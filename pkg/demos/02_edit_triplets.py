# %% [markdown]
# # From raw clips to (input, desired, instruction) triplets
#
# The data pipeline end to end: train the frame classifier, extract tight
# target events from candidate clips, then mix edit triplets at exact
# target-to-background ratios. Runs in about a minute on CPU.

# %%
from pathlib import Path

import numpy as np

from soundscene.classifier import ClassVocabulary, default_vocabulary, frame_posteriors, train_classifier
from soundscene.events import extract_target_events
from soundscene.procedural import make_classifier_examples, make_target_candidate
from soundscene.synthesis import (
    make_toy_pools, measured_tbr_db, sample_edin_example, sample_enhance_example, write_dataset,
)
from soundscene.audio import write_wav

OUT = Path("demo_out")
OUT.mkdir(exist_ok=True)

# %% [markdown]
# ## The frame classifier
# A small softmax network over log-mel context windows at 10 Hz. Nine labels:
# eight event classes plus an explicit background class.

# %%
vocab = ClassVocabulary(tuple(default_vocabulary()))
classifier = train_classifier(make_classifier_examples(30, seed=7), vocab, seed=11)
test = make_classifier_examples(6, seed=99)
correct = total = 0
for label, w in test:
    pred = np.argmax(frame_posteriors(classifier, w).probs, axis=1)
    correct += np.sum(pred == vocab.index(label))
    total += pred.size
print(f"held-out frame accuracy: {correct / total:.3f}")

# %% [markdown]
# ## Extracting target events
# Hysteresis on the class posterior track finds compact segments; the energy
# envelope against the clip's noise floor tightens onset and offset.

# %%
rng = np.random.default_rng(3)
candidate, true_span = make_target_candidate("up-chirp", 2.0, rng)
events = extract_target_events(candidate, "up-chirp", classifier, "demo-src")
print(f"true span {true_span[0]:.2f}-{true_span[1]:.2f}s")
for ev in events:
    s = ev.span_in_source
    print(f"extracted {s.t0_s:.2f}-{s.t1_s:.2f}s ({ev.waveform.duration_s:.2f}s)")

# %% [markdown]
# ## Pools and EDIN triplets
# Each training example draws two edits uniformly from
# {enhance, delete, insert, no-op}; targets land at exact TBRs with the input
# level roved +/-3 dB.

# %%
backgrounds, targets = make_toy_pools(30, 4, classifier, seed=5, namespace="demo")
print(f"{len(backgrounds)} backgrounds, {len(targets)} extracted targets")

rng = np.random.default_rng(11)
example = sample_edin_example(backgrounds, targets, rng, seed=0)
print("edits:", [(e.action, e.class_label) for e in example.edits])
bg = next(b for b in backgrounds if b.background_id == example.background_id)
for placed in example.components:
    got = measured_tbr_db(bg.waveform, placed, targets[placed.pool_index])
    print(f"  {placed.side:8s} target at {got:+.2f} dB TBR")
write_wav(OUT / "edin_input.wav", example.input)
write_wav(OUT / "edin_desired.wav", example.desired)

# %% [markdown]
# Outside the edit spans, input and desired are the same samples, bit for bit.

# %%
mask = np.ones(len(example.input), dtype=bool)
for span in example.edit_spans:
    mask[int(span.t0_s * 16000) : int(np.ceil(span.t1_s * 16000))] = False
print("bitwise equal outside spans:", np.array_equal(
    example.input.samples[mask], example.desired.samples[mask]))

# %% [markdown]
# ## Enhancement-only examples
# Input level uniform in [-30, 0] dB; the desired output always carries the
# target at +15 dB.

# %%
ex = sample_enhance_example(backgrounds, targets, rng, seed=1, tbr_in_db=-18.0)
bg = next(b for b in backgrounds if b.background_id == ex.background_id)
for placed in ex.components:
    print(placed.side, f"{measured_tbr_db(bg.waveform, placed, targets[placed.pool_index]):+.2f} dB")

# %% [markdown]
# Frozen sets are plain directories: input/, desired/, and one JSONL record
# per example.

# %%
stream_examples = [sample_edin_example(backgrounds, targets, np.random.default_rng(100 + i), seed=i) for i in range(4)]
write_dataset(stream_examples, OUT / "mini_set")
print((OUT / "mini_set" / "meta.jsonl").read_text().splitlines()[0][:150], "...")
