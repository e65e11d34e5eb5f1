#!/usr/bin/env python3
"""A small embedding-threshold sweep.

For each hardware size the harness grows the input size until fewer than
19 of 20 samples embed; the first failing size is the threshold. Cubic
inputs keep beating the baseline line n = L+1 by a widening margin, while
dense Erdos-Renyi inputs stay pinned just above it.
"""
import kingminor as km

config = km.ScheduleConfig(family="s3", t_max=300_000)

for cls, dw in (("cubic", True), ("er", False)):
    report = km.threshold_sweep(cls, [8, 12, 16], config, seed=1,
                                samples=10, success_cut=9,
                                degree_weighted=dw)
    print(report.to_text())
    print(report.to_csv())
