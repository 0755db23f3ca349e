"""The statistical toolbox on worked examples.

Covers the rank-based AUC, the DeLong comparison of correlated AUCs, exact
binomial chance tests, the per-arm sample-size formula with bootstrap
confidence intervals, and the age-corrected group comparison.

Run:  python3 demos/04_trial_statistics.py
"""

import numpy as np

from longiscan.progression import age_correct
from longiscan.stats import (
    CohortStats,
    TrialDesign,
    binomial_chance_test,
    bootstrap_ci,
    delong_test,
    normal_quantile,
    roc_auc,
    sample_size,
    two_sample_t,
)

rng = np.random.default_rng(0)

# --- AUC and DeLong -----------------------------------------------------------
n = 300
labels = np.repeat([0, 1], n // 2)
good = labels * 1.6 + rng.standard_normal(n)
weak = labels * 0.6 + rng.standard_normal(n)
print(f"AUC good scorer: {roc_auc(good, labels):.3f}")
print(f"AUC weak scorer: {roc_auc(weak, labels):.3f}")
diff, p = delong_test(good, weak, labels)
print(f"DeLong: difference {diff:+.3f}, two-sided p {p:.2e}")

# --- exact binomial chance test -------------------------------------------------
for k in (14, 16, 18):
    print(f"binomial test {k}/36 vs chance: p = {binomial_chance_test(k, 36):.3f}")

# --- sample size for a hypothetical trial ---------------------------------------
print(f"\nz(0.975) = {normal_quantile(0.975):.6f}, z(0.8) = {normal_quantile(0.8):.6f}")
stats = CohortStats(mean_pat=2.0, mean_ctl=1.0, sd_pat=1.0)
for reduction in (0.25, 0.5):
    design = TrialDesign(alpha=0.05, power=0.8, reduction=reduction)
    print(f"per-arm N to detect a {int(reduction * 100)}% slowing: "
          f"{sample_size(stats, design)}")

patients = 2.0 + rng.standard_normal(40)
controls = 1.0 + rng.standard_normal(40)
design = TrialDesign(reduction=0.25)
lo, hi, n_inf = bootstrap_ci(patients, controls, design, b=2000, seed=1)
print(f"bootstrap 95% CI for N: [{lo:.0f}, {hi:.0f}] "
      f"({n_inf} degenerate replicates)")

# --- age-corrected group comparison ---------------------------------------------
ages = rng.uniform(65, 85, size=80)
is_control = np.arange(80) < 40
progression = 0.03 * (ages - 75) + np.where(is_control, 0.0, 0.35)
progression += 0.25 * rng.standard_normal(80)
corrected = age_correct(ages, progression, is_control)
t_raw, p_raw = two_sample_t(progression[~is_control], progression[is_control])
t_cor, p_cor = two_sample_t(corrected[~is_control], corrected[is_control])
print(f"\ngroup difference before age correction: t = {t_raw:.2f}, p = {p_raw:.1e}")
print(f"group difference after age correction:  t = {t_cor:.2f}, p = {p_cor:.1e}")
