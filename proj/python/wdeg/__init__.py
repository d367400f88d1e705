"""Python bindings for the wdeg library."""

import json

from ._wdeg import (
    CapacityError,
    InputError,
    Polynomial,
    __version__,
    algebraically_independent,
    campaign,
    check,
    check_automorphism,
    initial_form,
    kernel_generator,
    m_wg,
    nagata,
    run_cli,
    weighted_degree,
)


def cli(*args):
    """Run the command-line tool in-process and return (exit_code, report dict)."""
    code, out, _ = run_cli([str(a) for a in args])
    return code, json.loads(out) if out.startswith("{") else None


__all__ = [
    "CapacityError",
    "InputError",
    "Polynomial",
    "__version__",
    "algebraically_independent",
    "campaign",
    "check",
    "check_automorphism",
    "cli",
    "initial_form",
    "kernel_generator",
    "m_wg",
    "nagata",
    "run_cli",
    "weighted_degree",
]
