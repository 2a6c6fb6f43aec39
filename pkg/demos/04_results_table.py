"""Tabulate the experiment matrix written by ``python3 -m dars.experiments``.

Prints per-seed and mean values of the metrics behind the map-pair acceptance
criteria, so a partially finished matrix can be inspected at any time.  Goal
distances appear twice: on each run's own probe goals and on the shared goal set.

    python3 demos/04_results_table.py [results_dir]
"""

from __future__ import annotations

import sys

import numpy as np

from dars import analysis, experiments

out = sys.argv[1] if len(sys.argv) > 1 else "results"
c2 = ("dars", "gpim_source", "gpim_target", "gpim_target_x10", "finetune", "dars_beta50")
rows = [
    ("c1_ab", "gpim_source", "accuracy_source", "summary"),
    ("c1_ab", "gpim_source", "target_wall_crossing_source", "summary"),
    ("c1_ab", "dars", "target_wall_crossing_source", "summary"),
    *[("c2_bc", label, "distance_target", "summary") for label in c2],
    *[("c2_bc", label, "distance_target", "shared_summary") for label in c2],
]
print(f"{'run':26s} {'metric':38s} {'mean':>8s}  per seed")
for group, label, key, kind in rows:
    vals = experiments.collect(out, group, label, key, kind=kind)
    mean = f"{np.mean(vals):8.4f}" if vals else "       -"
    name = key + (" (shared goals)" if kind == "shared_summary" else "")
    print(f"{group + '/' + label:26s} {name:38s} {mean}  {np.round(vals, 4).tolist()}")

for label in ("dars", "extension"):
    fracs = []
    for s in experiments.SEEDS:
        summ = experiments.load_summary(out, "c2_ae", label, s)
        if summ is not None:
            fracs.append(analysis.region_fraction(summ["goals"], analysis.right_half))
    mean = f"{np.mean(fracs):8.4f}" if fracs else "       -"
    print(f"{'c2_ae/' + label:26s} {'goals in unreachable half':38s} {mean}  {np.round(fracs, 4).tolist()}")
