"""Acceptance gate: the fourteen exit criteria, each at its pinned
tolerance and runtime cap, printing one pass/fail line per criterion.

Run with -s (or -rA) to see the per-criterion lines.
"""

import json
import math
import subprocess
import sys
import time

import numpy as np

from lflab import diophantine, eisenstein, hecke_l, langlands, mellin_converse
from lflab import modular_forms as mf
from lflab import tate_local, zeta_core
from lflab.dirichlet import characters_mod
from lflab.primes import primes
from lflab.special_fn import theta


def report(number: int, name: str, max_err, tol, elapsed: float, cap: float, passed: bool):
    flag = "PASS" if passed else "FAIL"
    err_txt = f"{max_err:.3e}" if isinstance(max_err, float) else str(max_err)
    print(f"ACCEPTANCE {number:2d} [{flag}] {name}: max_err={err_txt} tol={tol} "
          f"runtime={elapsed:.1f}s (cap {cap:.0f}s)")
    assert passed, f"criterion {number} failed: {name} (max_err={err_txt}, tol={tol})"
    assert elapsed < cap, f"criterion {number} overran: {elapsed:.1f}s >= {cap}s"


def test_01_riemann_functional_equation():
    t0 = time.perf_counter()
    worst = 0.0
    for sigma in np.arange(-2.0, 3.001, 0.25):
        for t in np.arange(0.0, 30.001, 0.5):
            s = complex(round(float(sigma), 6), float(t))
            if s in (0, 1) or (1 - s) in (0, 1):
                continue
            worst = max(worst, abs(zeta_core.xi(s).value - zeta_core.xi(1 - s).value))
    elapsed = time.perf_counter() - t0
    report(1, "Riemann FE |xi(s) - xi(1-s)| on sigma[-2,3] x t[0,30]",
           worst, 1e-10, elapsed, 10.0, worst < 1e-10)


def test_02_jacobi_identity():
    t0 = time.perf_counter()
    ts = np.logspace(math.log10(0.05), math.log10(20.0), 60)
    worst = max(abs(theta(float(t)) - theta(1.0 / float(t)) / math.sqrt(float(t))) for t in ts)
    elapsed = time.perf_counter() - t0
    report(2, "Jacobi identity on 60 log-spaced t in [0.05, 20]",
           worst, 1e-12, elapsed, 1.0, worst < 1e-12)


def test_03_zeta_special_values():
    t0 = time.perf_counter()
    e2 = abs(zeta_core.zeta(2.0) - math.pi**2 / 6.0)
    em1 = abs(zeta_core.zeta(-1.0) + 1.0 / 12.0)
    elapsed = time.perf_counter() - t0
    report(3, "zeta(2) vs pi^2/6 and zeta(-1) vs -1/12",
           max(e2, em1), "1e-12 / 1e-11", elapsed, 1.0, e2 < 1e-12 and em1 < 1e-11)


def test_04_hecke_fe_delta():
    t0 = time.perf_counter()
    delta = mf.delta_q_expansion(64)
    sig = np.arange(3.0, 9.001, 0.5)
    ts = np.arange(-20.0, 20.001, 2.0)
    S = (sig[:, None] + 1j * ts[None, :]).ravel()
    worst = float(np.abs(
        hecke_l.phi_completed_many(S, delta) - hecke_l.phi_completed_many(12.0 - S, delta)
    ).max())
    elapsed = time.perf_counter() - t0
    report(4, "Hecke FE |Phi(s) - Phi(12-s)| on sigma[3,9] x |t|<=20",
           worst, 1e-9, elapsed, 30.0, worst < 1e-9)


def test_05_weil_twisted_fe():
    t0 = time.perf_counter()
    delta = mf.delta_q_expansion(10**5)
    worst = 0.0
    for r in (3, 4, 5, 7):
        chi = next(c for c in characters_mod(r) if c.is_primitive)
        for s in (8.0, 8.5, 9.0):
            rep = hecke_l.weil_twist_check(delta, chi, s, N_direct=60000)
            worst = max(worst, rep.max_abs_error)
    elapsed = time.perf_counter() - t0
    report(5, "Weil twisted FE, Delta x primitive chi mod {3,4,5,7}, Re s in [7,9]",
           worst, 1e-6, elapsed, 60.0, worst < 1e-6)


def test_06_mellin_reconstruction():
    t0 = time.perf_counter()
    th = mf.theta_q_expansion(144)
    th_desc = hecke_l.descriptor_from_qexpansion(th)
    phi_th = lambda s: hecke_l.phi_completed_many(s, th)
    spec_th = mellin_converse.ContourSpec(c=2.0, t_cut=40.0)
    worst = 0.0
    for x in (0.7, 1.0, 1.3, 2.0, 3.5):
        rec = mellin_converse.reconstruct(th_desc, phi_th, x, spec_th)
        worst = max(worst, abs(rec.value - theta(x)))
    delta = mf.delta_q_expansion(300)
    d_desc = hecke_l.descriptor_from_qexpansion(delta)
    phi_d = lambda s: hecke_l.phi_completed_many(s, delta)
    spec_d = mellin_converse.ContourSpec(c=8.0, t_cut=60.0)
    for x in (0.5, 0.9, 1.0, 1.2, 2.0):
        rec = mellin_converse.reconstruct(d_desc, phi_d, x, spec_d)
        worst = max(worst, abs(rec.value - mf.evaluate(delta, complex(0.0, x), 1e-10)))
    shift_worst = 0.0
    for x in (1.0, 1.3):
        a = mellin_converse.reconstruct(d_desc, phi_d, x, spec_d).value
        b = mellin_converse.reconstruct_shifted(d_desc, phi_d, x, spec_d).value
        shift_worst = max(shift_worst, abs(a - b))
        a = mellin_converse.reconstruct(th_desc, phi_th, x, spec_th).value
        b = mellin_converse.reconstruct_shifted(th_desc, phi_th, x, spec_th).value
        shift_worst = max(shift_worst, abs(a - b))
    elapsed = time.perf_counter() - t0
    report(6, "Mellin reconstruction (theta, Delta; 5 x each) + contour shift",
           max(worst, shift_worst), 1e-6, elapsed, 60.0,
           worst < 1e-6 and shift_worst < 1e-6)


def test_07_eisenstein_fe():
    t0 = time.perf_counter()
    fe_worst = max(
        eisenstein.verify_eis_fe(z, s)
        for z in (1j, 0.3 + 1.2j, 2j)
        for s in (0.25 + 0j, 0.5 + 3j, 2.0 + 0j, 1.7 - 2j)
    )
    lat_worst = 0.0
    for (z, s) in ((1j, 3.0), (2j, 3.0), (0.3 + 1.2j, 2.5), (1.5j, 2.5),
                   (0.25 + 0.9j, 4.0), (0.5 + 1.1j, 4.0)):
        lat = eisenstein.eisenstein_lattice(z, complex(s), tol=2e-9)
        lat_worst = max(lat_worst, abs(lat.value - eisenstein.eisenstein_fourier(z, complex(s), 20)))
    a1_worst = max(
        eisenstein.zeta_fe_from_a1(complex(sp))
        for sp in (0.4 + 6j, 0.3 + 0j, 2.2 + 1j, -0.7 + 2j, 0.9 + 4j,
                   0.25 + 2j, 1.5 - 3j, -0.2 + 0.5j, 0.6 + 7j, 2.0 - 1j)
    )
    elapsed = time.perf_counter() - t0
    report(7, "Eisenstein FE (12 pts) / lattice-vs-Fourier / zeta-FE via a_1",
           max(fe_worst, lat_worst, a1_worst), "1e-8 / 1e-8 / 1e-9", elapsed, 30.0,
           fe_worst < 1e-8 and lat_worst < 1e-8 and a1_worst < 1e-9)


def test_08_laplacian_eigenvalue():
    t0 = time.perf_counter()
    slopes = []
    for (z, s) in ((1j, 2.0 + 0j), (0.2 + 1.4j, 3.0 + 0j), (1.5j, 0.5 + 4j)):
        coarse = eisenstein.laplacian_check(z, s, 1e-2)
        fine = eisenstein.laplacian_check(z, s, 5e-3)
        slopes.append(math.log2(coarse / fine))
    elapsed = time.perf_counter() - t0
    ok = all(1.8 <= sl <= 2.2 for sl in slopes)
    report(8, f"Laplacian eigenvalue Richardson slopes {[f'{s:.2f}' for s in slopes]}",
           max(abs(sl - 2.0) for sl in slopes), "slope in [1.8, 2.2]", elapsed, 10.0, ok)


def test_09_exact_tau_arithmetic():
    t0 = time.perf_counter()
    tau = mf.tau_coefficients(300 * 299)
    violations = 0
    for m in range(1, 301):
        for n in range(m + 1, 301):
            if math.gcd(m, n) == 1 and tau[m * n] != tau[m] * tau[n]:
                violations += 1
    for p in primes(100):
        p = int(p)
        if tau[p * p] != tau[p] ** 2 - p**11:
            violations += 1
    for p in primes(10**4):
        p = int(p)
        if tau[p] ** 2 > 4 * p**11:
            violations += 1
    elapsed = time.perf_counter() - t0
    report(9, "tau multiplicativity / tau(p^2) / Deligne, exact integers",
           float(violations), 0, elapsed, 60.0, violations == 0)


def test_10_tate_local_factors():
    t0 = time.perf_counter()
    p_worst = 0.0
    for p in primes(100):
        for s in (0.5, 1.0, 2.0, 1 + 1j, 0.5 + 2j):
            K = 200 if complex(s).real < 1 else 80
            total, closed = tate_local.local_factor_p(int(p), complex(s), K)
            p_worst = max(p_worst, abs(total - closed))
    a_worst = 0.0
    for s in (0.3, 0.7, 1.0, 1.5, 2.0, 3.0, 4.5, 6.0, 0.5 + 1j, 2.0 + 2j):
        q, closed = tate_local.archimedean_factor(complex(s))
        a_worst = max(a_worst, abs(q - closed))
    elapsed = time.perf_counter() - t0
    report(10, "Tate local factors: p-adic (p<=100) / archimedean (10 pts)",
           max(p_worst, a_worst), "1e-12 / 1e-9", elapsed, 10.0,
           p_worst < 1e-12 and a_worst < 1e-9)


def test_11_sato_tate_moments():
    t0 = time.perf_counter()
    _, ap = langlands.delta_ap(10**5)
    moments, _, _ = langlands.sato_tate_report(ap, 10**5, m_max=4)
    by_m = {m: (emp, target) for m, emp, target in moments}
    m_ok = (abs(by_m[1][0] - by_m[1][1]) < 0.1 and abs(by_m[2][0] - by_m[2][1]) < 0.1
            and abs(by_m[3][0] - by_m[3][1]) < 0.3 and abs(by_m[4][0] - by_m[4][1]) < 0.3)
    cat = (1.0, 1.0, 2.0, 5.0, 14.0)
    cat_worst = max(abs(langlands.semicircle_moment(2 * k) - cat[k]) for k in range(5))
    sarnak = abs(
        -langlands.semicircle_moment(6) + 5 * langlands.semicircle_moment(4)
        - 4 * langlands.semicircle_moment(2) - 1.0
    )
    elapsed = time.perf_counter() - t0
    report(11, "Sato-Tate moments at X=1e5 / Catalan moments / integrality value 1",
           max(cat_worst, sarnak), "0.1-0.3 / 1e-10 / 1e-10", elapsed, 120.0,
           m_ok and cat_worst < 1e-10 and sarnak < 1e-10)


def test_12_three_squares():
    t0 = time.perf_counter()
    table = diophantine.representable_table(10**4)
    exceptions = sum(
        1 for n in range(1, 10**4 + 1) if bool(table[n]) != diophantine.gauss_condition(n)
    )
    elapsed = time.perf_counter() - t0
    report(12, "Gauss three-squares criterion, exhaustive n <= 1e4",
           float(exceptions), 0, elapsed, 60.0, exceptions == 0)


def test_13_convexity_probes():
    t0 = time.perf_counter()
    rep = zeta_core.convexity_probe(100.0, 0.1)
    sup_ratio = [v for k, v in rep.details if k.startswith("sup")][0]
    min_one = [v for k, v in rep.details if k.startswith("min")][0]
    elapsed = time.perf_counter() - t0
    ok = math.isfinite(sup_ratio) and min_one > 0.0
    print(f"    sup |zeta(1/2+it)|/(2+t)^0.35 = {sup_ratio:.6f}, "
          f"min |zeta(1+it)| = {min_one:.6f} (t <= 100)")
    report(13, "convexity/non-vanishing probes to t=100",
           sup_ratio, "finite sup, positive min", elapsed, 30.0, ok)


def test_14_cli_determinism_and_exit_codes():
    t0 = time.perf_counter()

    def run(*argv):
        return subprocess.run([sys.executable, "-m", "lflab.cli", *argv],
                              capture_output=True, text=True)

    first = run("verify", "all", "--quick")
    second = run("verify", "all", "--quick")
    identical = first.stdout == second.stdout and first.returncode == second.returncode == 0
    injected = run("verify", "zeta-values", "--tol", "1e-30").returncode == 1
    usage = run("verify", "no-such-suite").returncode == 2
    schema_ok = all(
        set(json.loads(line)) == {"check", "grid", "max_abs_error", "tolerance",
                                  "pass", "runtime_ms", "details"}
        for line in first.stdout.strip().splitlines()
    )
    elapsed = time.perf_counter() - t0
    report(14, "CLI byte-determinism and exit-code contract",
           0.0 if identical and injected and usage and schema_ok else 1.0,
           "byte-identical; exits 0/1/2", elapsed, 300.0,
           identical and injected and usage and schema_ok)
