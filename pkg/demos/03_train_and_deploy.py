"""A short training run on the (Map-b, Map-c) pair and a look at what it learned.

Trains DARS for a few hundred iterations with final-state goals, then deploys
the goal-conditioned policy in both maps and writes the discriminator heatmaps.
This is a demonstration of the pipeline, far below the budget needed for good
skills.  Takes several minutes on one CPU.

    python3 demos/03_train_and_deploy.py [out_dir]
"""

from __future__ import annotations

import sys
from pathlib import Path

from dars.cli import evaluate_checkpoint, write_heatmaps
from dars.envs import make_pair
from dars.skills import LatentSpec, RelabelStrategy
from dars.trainer import DarsConfig, Trainer

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_run")
config = DarsConfig(variant="dars", latent=LatentSpec("categorical", 8), relabel=RelabelStrategy("final_state"),
                    max_iters=400, eval_every=100)
trainer = Trainer(config, make_pair("bc"))
state, records = trainer.train(on_metrics=lambda r: print(
    f"iter {r.iter:4d}  source steps {r.source_steps:6d}  target steps {r.target_steps:5d}  "
    f"disc acc {r.disc_accuracy:.2f}  mean |dr| {r.mean_abs_delta_r:.2f}  "
    f"distance source {r.eval_distance_source:.3f} target {r.eval_distance_target:.3f}"))

summary = evaluate_checkpoint(trainer, state, out / "eval", n_per_skill=4)
print("\nper-skill goal distance (source / target):")
for row in summary["per_skill"]:
    print(f"  skill {row['omega']}: {row['distance_source']:.3f} / {row['distance_target']:.3f}")
paths = write_heatmaps(trainer, state, out / "heatmaps", "q_phi") + write_heatmaps(trainer, state, out / "heatmaps", "delta_r")
print(f"\nwrote {len(paths)} heatmap CSVs and trajectory CSVs under {out}/")
