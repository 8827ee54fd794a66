"""Multi-species reserve selection with competition dynamics."""

from fractions import Fraction

from ._core import (  # noqa: F401
    CountsGrid,
    Landscape,
    LVParams,
    Rational,
    RealGrid,
    ReserveKitError,
    ReserveProblem,
    ReserveSolution,
    Scenario,
    SimilarityStats,
    SimulatedGrid,
    SpeciesSpec,
    SpeciesSuite,
    SweepRow,
    budget_sweep,
    build_species_suite,
    default_lv_params,
    default_scenarios,
    distribute_population,
    fragmentation,
    generate_landscape,
    lv_step,
    parcel_score,
    render_pair,
    round_counts,
    select_extremes,
    similarity,
    simulate,
    solve,
    solve_bruteforce,
    solve_dp,
    solve_topk,
    summarize,
    sweep_csv,
    weighted_comparison,
    zero_dynamics,
)


def to_fraction(value: Rational) -> Fraction:
    return Fraction(value.num, value.den)
