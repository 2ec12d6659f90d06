"""Exact realizability checks, repair factors, and Stirling sequence
generators.

Everything heavy lives in the compiled extension; values cross the boundary
as plain ints and fractions.Fraction.
"""

from ._dold import (
    IngestError,
    NotRealizable,
    binomial,
    dold_check,
    factorial,
    failure_truncated,
    falling_factorial,
    fix_counts_from_orbits,
    growth_sufficiency,
    ingest_bfile,
    lemma3_one_criterion,
    lemma3_residue,
    lemma4_one_criterion,
    lemma4_residue,
    mobius,
    mobius_transform,
    orbit_counts,
    p_adic_valuation,
    radical,
    realize,
    repair,
    repair_table,
    scaled_dold_claim_check,
    sequence_prefix,
    sigma_orbit_oracle,
    stirling1,
    stirling1_signed,
    stirling2,
    verify_scaled_second_kind_dold,
    witness_prime_first_kind,
    witness_prime_second_kind,
)

__all__ = [
    "IngestError",
    "NotRealizable",
    "binomial",
    "dold_check",
    "factorial",
    "failure_truncated",
    "falling_factorial",
    "fix_counts_from_orbits",
    "growth_sufficiency",
    "ingest_bfile",
    "lemma3_one_criterion",
    "lemma3_residue",
    "lemma4_one_criterion",
    "lemma4_residue",
    "mobius",
    "mobius_transform",
    "orbit_counts",
    "p_adic_valuation",
    "radical",
    "realize",
    "repair",
    "repair_table",
    "scaled_dold_claim_check",
    "sequence_prefix",
    "sigma_orbit_oracle",
    "stirling1",
    "stirling1_signed",
    "stirling2",
    "verify_scaled_second_kind_dold",
    "witness_prime_first_kind",
    "witness_prime_second_kind",
]
