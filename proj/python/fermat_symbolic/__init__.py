"""Symbolic powers of Fermat ideals: alpha, containment and interpolation."""

from ._core import (
    ContainmentCertificate,
    FermatError,
    InvariantReport,
    ParseError,
    Timeout,
    WitnessCheck,
    Workspace,
    alpha,
    alpha_interp,
    containment_check,
    fatpoint_dim,
    groebner_basis,
    ideal_equal,
    normal_form,
    predicted_alpha,
    resurgence_scan,
    run_table,
    verify_witness,
    waldschmidt_table,
    witness,
)

__all__ = [
    "ContainmentCertificate",
    "FermatError",
    "InvariantReport",
    "ParseError",
    "Timeout",
    "WitnessCheck",
    "Workspace",
    "alpha",
    "alpha_interp",
    "containment_check",
    "fatpoint_dim",
    "groebner_basis",
    "ideal_equal",
    "normal_form",
    "predicted_alpha",
    "resurgence_scan",
    "run_table",
    "verify_witness",
    "waldschmidt_table",
    "witness",
]
