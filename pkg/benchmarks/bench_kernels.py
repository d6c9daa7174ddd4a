"""Benchmark the numba kernels against their pure-numpy fallbacks.

Run:  python benchmarks/bench_kernels.py
The library itself picks one path at import time (QCONIC_NO_NUMBA=1 forces
numpy); here both implementations are imported directly and timed on the
workloads that dominate the verification suite.
"""

import time

import numpy as np

from qconic import _kernels as K


def timeit(fn, *args, repeat=5):
    fn(*args)  # warm-up / JIT
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = np.random.default_rng(0)

    # membership-grid polynomial evaluation
    coeffs = (rng.standard_normal(33) + 1j * rng.standard_normal(33)).astype(
        np.complex128
    )
    zs = (0.9 * np.exp(2j * np.pi * rng.random(200_000))).astype(np.complex128)

    # elliptic integrals for a sweep of moduli
    ts = rng.uniform(0.01, 0.99, 200_000)

    # Carlson R_F on extremal-map arguments
    w = 1.6 * (rng.random(100_000) - 0.5) + 0.4j * (rng.random(100_000) - 0.5)
    x = (1.0 - w * w).astype(np.complex128)
    y = (1.0 - (0.3 * w) ** 2).astype(np.complex128)
    z = np.ones_like(x)

    rows = [
        ("horner_eval (200k pts, deg 32)",
         lambda: K.horner_eval_numpy(coeffs, zs),
         lambda: K.horner_eval_numba(coeffs, zs)),
        ("agm_k (200k moduli)",
         lambda: K.agm_k_numpy(ts),
         lambda: K.agm_k_numba(ts)),
        ("carlson_rf (100k complex)",
         lambda: K.carlson_rf_numpy(x, y, z),
         lambda: K.carlson_rf_numba(x, y, z)),
    ]

    if not K._HAVE_NUMBA:
        print("numba unavailable; nothing to compare")
        return

    print(f"{'kernel':<34}{'numpy':>12}{'numba':>12}{'speedup':>10}")
    for name, f_np, f_nb in rows:
        t_np = timeit(lambda: f_np())
        t_nb = timeit(lambda: f_nb())
        print(f"{name:<34}{t_np*1e3:>10.2f}ms{t_nb*1e3:>10.2f}ms"
              f"{t_np/t_nb:>9.2f}x")


if __name__ == "__main__":
    main()
