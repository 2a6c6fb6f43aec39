"""Learning the reward modification from samples alone.

Two domain classifiers see transitions from an open 5x5 grid (source) and the
same grid with a wall (target).  The difference of their log-odds estimates
log P_S(s'|s,a) - log P_T(s'|s,a).  We compare it with the exact value for the
moves that the wall affects most.  Takes about a minute.

    python3 demos/02_classifier_delta_r.py
"""

from __future__ import annotations

import jax.numpy as jnp
import numpy as np

from dars import analysis, envs, offdyn

source, target, info = envs.grid_pair()
report, cls = analysis.classifier_fidelity(source, target, info, n_samples=50_000)
print(f"on-support mean abs error over {report.n_support} transitions: {report.mae:.3f}")
print(f"weighted by source probability:                  {report.mae_weighted:.3f}")

exact = offdyn.exact_delta_r_table(source, target)
coords, moves = info["coords"], info["moves"]
# the largest exact values: stay-in-place outcomes that the wall makes more likely in the target
support = np.argwhere((source.P > 0) & (target.P > 0))
order = np.argsort(np.abs(exact[tuple(support.T)]))[::-1][:8]
print("\n  s  a  s'    P_S    P_T   exact  learned")
for s, a, n in support[order]:
    learned = float(offdyn.delta_r(cls, jnp.asarray(coords[s][None], jnp.float32),
                                   jnp.asarray(moves[a][None], jnp.float32),
                                   jnp.asarray(coords[n][None], jnp.float32))[0])
    print(f"{s:3d} {a:2d} {n:3d}  {source.P[s, a, n]:.3f}  {target.P[s, a, n]:.3f}  {exact[s, a, n]:6.3f}  {learned:7.3f}")
