#!/usr/bin/env python3
"""Watch the ascent work: dual value climbing, best distortion falling.

Prints a compact iteration table and, when matplotlib is importable, saves
distortion_trace.png with the two curves.
"""
import numpy as np

import isoembed as ie

rng = np.random.default_rng(7)
M = rng.standard_normal((150, 12))
units = ie.UnitVectorSet(M / np.linalg.norm(M, axis=1, keepdims=True))

k, T = 4, 400
result = ie.run_projected_ascent(units, k, ie.AscentConfig(T=T))

print(f"n = {units.n} directions in d = {units.d}, embedded into k = {k}")
print(f"{'t':>6} {'dual value':>12} {'epsilon':>10} {'best eps':>10}")
for rec in result.trace[:: T // 10]:
    print(f"{rec.t:>6} {rec.dual_value:>12.5f} {rec.primal_epsilon:>10.5f} {rec.best_epsilon:>10.5f}")
avg = result.average_record
print(f"{'avg':>6} {avg.dual_value:>12.5f} {avg.primal_epsilon:>10.5f} {avg.best_epsilon:>10.5f}")
print(f"\nreturned: {result.selected_iterate} iterate, "
      f"epsilon = {result.distortion.epsilon:.5f}, "
      f"dual lower bound = {result.best_dual_value:.5f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("(matplotlib not installed; skipping the plot)")
else:
    ts = [rec.t for rec in result.trace]
    plt.figure(figsize=(7, 4))
    plt.plot(ts, [rec.primal_epsilon for rec in result.trace], label="max distortion")
    plt.plot(ts, [rec.best_epsilon for rec in result.trace], label="best so far")
    plt.plot(ts, [rec.dual_value for rec in result.trace], label="dual value")
    plt.xlabel("iteration")
    plt.legend()
    plt.tight_layout()
    plt.savefig("distortion_trace.png", dpi=120)
    print("wrote distortion_trace.png")
