"""Integrated-AUC diagnostics for continuous gold standards."""

from ._core import (
    BivariateNormalDesign,
    BootstrapReport,
    CombinationMethod,
    CombinationResult,
    CutWeight,
    Dataset,
    IndexMethod,
    LinearModelDesign,
    NullQuadraticDesign,
    SimSpec,
    Statistic,
    StepFunction,
    TgdmConfig,
    WeightKind,
    auc_at_cut,
    auc_combined,
    auc_integrated,
    auc_integrated_empirical,
    auc_smoothed,
    bootstrap_variance,
    center,
    classical_auc,
    default_smooth_bandwidth,
    fit_weight,
    generate,
    integrate_step,
    lars_path,
    load_delimited,
    ols_combination,
    select_anchor,
    silverman_bandwidth,
    standardize,
    sweep_cuts,
    tgdm_gradient,
    tgdm_maximize,
    theta_obuchowski,
    wald_test,
    __version__,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
