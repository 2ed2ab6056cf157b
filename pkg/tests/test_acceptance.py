"""The eight acceptance criteria, one test and one printed line each.

Each test asserts its criterion at the stated tolerance and reports a
PASS/FAIL line through the session recorder (echoed in the terminal
summary).  Everything is deterministic; the heavy enumerations keep the
whole file in the minutes range.
"""

import math
import os
import subprocess
import sys

import oracles
from gaussdensity import (
    BASEL,
    GaussianInt,
    Mode,
    MultiplicityLattice,
    PrimeTag,
    both_divide_frequency,
    classify,
    coprime_constant_product,
    dedekind_zeta_Qi,
    dirichlet_L,
    gaussian_coprime_constant,
    gaussian_pair_density_mc,
    gaussian_pair_density_exhaustive,
    norm,
    pick_identity_check,
    rational_tuple_density,
    zeta_series,
)

Z = GaussianInt


def test_criterion_1_analytic_constant_chain(acceptance):
    zs = zeta_series(2, 10**7)
    zeta_err = abs(zs.value - BASEL)
    ok_zeta = zeta_err <= 2e-6

    L = dirichlet_L(2, 10**7)
    oracle_value, first_omitted = oracles.alternating_L(2, 10**7)
    L_err = abs(L.value - oracle_value)
    ok_L = L_err <= L.tail_bound + first_omitted + 1e-12

    prod = coprime_constant_product(10**6)
    recip = dedekind_zeta_Qi(2, 10**7).reciprocal()
    ident_err = abs(prod.value - recip.value)
    ok_ident = prod.agrees_with(recip, slack=1e-12)

    ok = ok_zeta and ok_L and ok_ident
    detail = (
        f"zeta(2) err {zeta_err:.2e} (tol 2e-6), L err {L_err:.2e} "
        f"(tol {L.tail_bound + first_omitted:.1e}), product identity err "
        f"{ident_err:.2e} (tol {prod.tail_bound + recip.tail_bound:.1e})"
    )
    assert acceptance(1, ok, detail)


def test_criterion_2_exhaustive_gaussian_density(acceptance):
    target = gaussian_coprime_constant().value
    err = {
        radius: abs(gaussian_pair_density_exhaustive(radius).estimate - target)
        for radius in (20, 40, 80)
    }
    ok = err[40] <= 0.02 and err[80] < err[20]
    detail = (
        f"N=40 err {err[40]:.2e} (tol 0.02), N=80 err {err[80]:.2e} < "
        f"N=20 err {err[20]:.2e}, target {target:.7f}"
    )
    assert acceptance(2, ok, detail)


def test_criterion_3_monte_carlo_gaussian_density(acceptance):
    target = gaussian_coprime_constant().value
    est = gaussian_pair_density_mc(10**7, 10**6, seed=1)
    dev = abs(est.estimate - target)
    ok = dev <= 0.001 and dev <= 4 * est.std_error
    detail = (
        f"estimate {est.estimate:.7f}, |dev| {dev:.2e} "
        f"(tol min(0.001, 4*SE={4 * est.std_error:.2e}))"
    )
    assert acceptance(3, ok, detail)


def test_criterion_4_rational_baselines(acceptance):
    k2 = rational_tuple_density(2, 1000)
    k2_target = 6 / math.pi**2
    k2_dev = abs(k2.estimate - k2_target)
    ok_k2 = k2_dev <= 0.002

    k3 = rational_tuple_density(3, 10**6, Mode.MONTE_CARLO, samples=10**6, seed=1)
    k3_target = 1.0 / oracles.zeta_value(3)
    k3_dev = abs(k3.estimate - k3_target)
    ok_k3 = k3_dev <= 4 * k3.std_error

    ok = ok_k2 and ok_k3
    detail = (
        f"k=2 N=1000 dev {k2_dev:.2e} (tol 0.002), "
        f"k=3 MC dev {k3_dev:.2e} (tol 4*SE={4 * k3.std_error:.2e})"
    )
    assert acceptance(4, ok, detail)


def test_criterion_5_prime_lattice_counts(acceptance):
    prime_norms = set(oracles.rational_primes(10**4))
    checked = failures = 0
    for a in range(-100, 101):
        for b in range(-100, 101):
            if a == 0 or b == 0:
                continue
            n = a * a + b * b
            if n > 10**4 or n not in prime_norms:
                continue
            rep = pick_identity_check(
                MultiplicityLattice(Z(a, b)).fundamental_domain()
            )
            checked += 1
            if not (rep.boundary == 4 and rep.interior == n - 1 and rep.holds):
                failures += 1
    ok = failures == 0 and checked > 0
    detail = f"{checked} prime generators checked, {failures} failures"
    assert acceptance(5, ok, detail)


def test_criterion_6_inert_pair_frequency(acceptance):
    devs = {}
    for p in (3, 7, 11):
        est = both_divide_frequency(Z(p, 0), 500)
        devs[p] = abs(est.estimate - p**-4)
    ok = all(dev <= 3 / 500 for dev in devs.values())
    detail = ", ".join(f"p={p} dev {dev:.2e}" for p, dev in devs.items())
    assert acceptance(6, ok, f"{detail} (tol 6e-3 each)")


def test_criterion_7_classifier_oracle_equivalence(acceptance):
    limit = 10**4
    composites = oracles.composite_set(limit)
    rational = oracles.rational_primes(limit)
    prime_set = set(rational)

    disagreements = checked = 0
    split_norms = {}
    inert_ps = set()
    r = math.isqrt(limit)
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            n = a * a + b * b
            if n > limit:
                continue
            cls = classify(Z(a, b))
            checked += 1
            if cls.is_prime != oracles.is_prime_gaussian(a, b, composites):
                disagreements += 1
            if cls.tag is PrimeTag.SPLIT:
                split_norms[n] = split_norms.get(n, 0) + 1
            elif cls.tag is PrimeTag.INERT:
                inert_ps.add(cls.rational_prime)

    # Fermat dichotomy over all rational primes <= 10^4: p = 1 mod 4 has
    # exactly eight split elements of norm p; p = 3 mod 4 is inert (visible
    # in this box only while p^2 <= 10^4, i.e. p <= 100)
    fermat_ok = True
    for p in rational:
        if p % 4 == 1 and split_norms.get(p, 0) != 8:
            fermat_ok = False
        if p % 4 == 3 and (p in inert_ps) != (p * p <= limit):
            fermat_ok = False
    fermat_ok = fermat_ok and set(split_norms) == {
        p for p in prime_set if p % 4 == 1
    }

    ok = disagreements == 0 and fermat_ok
    detail = (
        f"{checked} elements, {disagreements} primality disagreements, "
        f"Fermat tallies {'consistent' if fermat_ok else 'broken'}"
    )
    assert acceptance(7, ok, detail)


def test_criterion_8_determinism(acceptance, tmp_path):
    def run(threads, extra_env):
        env = dict(os.environ, **extra_env)
        env.pop("GAUSSDENSITY_BACKEND", None)
        argv = [
            sys.executable, "-m", "gaussdensity.cli",
            "density", "--radius", "25", "--threads", str(threads),
            "--format", "json",
        ]
        proc = subprocess.run(argv, capture_output=True, text=True, env=env)
        assert proc.returncode == 0, proc.stderr
        return proc.stdout

    one = run(1, {"NUMBA_NUM_THREADS": "1"})
    eight = run(8, {"NUMBA_NUM_THREADS": "8"})
    ok_exhaustive = one == eight

    mc_a = gaussian_pair_density_mc(10**6, 10**6, seed=5)
    mc_b = gaussian_pair_density_mc(10**6, 10**6, seed=5)
    ok_mc = mc_a.hits == mc_b.hits

    ok = ok_exhaustive and ok_mc
    detail = (
        f"exhaustive 1-thread vs 8-thread output "
        f"{'identical' if ok_exhaustive else 'DIFFERS'}, "
        f"MC same-seed hits {'identical' if ok_mc else 'DIFFERS'}"
    )
    assert acceptance(8, ok, detail)
