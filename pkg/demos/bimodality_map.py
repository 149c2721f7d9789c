"""Where the Cauchy-regime density is bimodal, where it is flat, and
where a shoulder appears: sweep the order and print the modality chart,
then check the sampler agrees with the analytic density."""

import math

import numpy as np

from fresnelpseudo import (
    SeededStream,
    cauchy_mixture_pdf,
    classify,
    critical_alpha,
    inflection_parameters,
    mode_analysis,
    sample_cauchy_mixture,
)


def main():
    print("symmetric case: modality as the order sweeps up to 3")
    for alpha in (1.2, 1.6, 2.0, 2.5, 2.9, 3.0, 3.5):
        rep = mode_analysis(alpha, 1.0)
        tops = [p.location for p in rep.stationary_points if p.kind == "maximum"]
        locs = ", ".join(f"{x:+.4f}" for x in sorted(tops))
        print(f"  order {alpha:>4}: {rep.kind:<10} maxima at {locs}")

    ac = critical_alpha()
    print()
    print(f"critical order {ac:.6f}: a stationary shoulder appears")
    for sign in (+1, -1):
        p, loc = inflection_parameters(ac, sign)
        print(f"  weight p={p:.9f} puts the flat point at x = {loc:+.9f} t")

    rep = classify(ac, (math.sqrt(2.0) - 1.0) / (2.0 * math.sqrt(2.0)), 1.0)
    print(f"  classify at that weight: {rep.kind}")
    for pt in rep.stationary_points:
        print(f"    {pt.kind:<10} at {pt.location:+.9f}")

    # histogram check: seeded draws against the analytic density
    print()
    print("sampler vs density (order 2, weight 0.3, 200k draws):")
    draws = sample_cauchy_mixture(2.0, 0.3, 1.0, 200_000, SeededStream(20260816))
    edges = np.linspace(-4.0, 4.0, 17)
    counts, _ = np.histogram(draws, bins=edges)
    widths = np.diff(edges)
    centers = 0.5 * (edges[:-1] + edges[1:])
    emp = counts / counts.sum() / widths
    # renormalize the analytic curve to the window so the comparison is fair
    dense = cauchy_mixture_pdf(centers, 2.0, 0.3, 1.0)
    inside = np.trapezoid(cauchy_mixture_pdf(np.linspace(-4, 4, 2001), 2.0, 0.3, 1.0),
                          np.linspace(-4, 4, 2001))
    for c, e, d in zip(centers, emp, dense / inside):
        bar = "*" * int(120 * e)
        print(f"  x={c:+5.2f}  emp {e:.4f}  pdf {d:.4f}  {bar}")


if __name__ == "__main__":
    main()
