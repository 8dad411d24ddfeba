from ._core import (
    InvalidRadius,
    ModelMismatch,
    OutsideDomain,
    OutsideOpenDisk,
    ParseError,
    counterexamples,
    decompose,
    derivative,
    diff_check,
    evaluate,
    radius,
    run,
    series,
    series_check,
)

__all__ = [
    "InvalidRadius",
    "ModelMismatch",
    "OutsideDomain",
    "OutsideOpenDisk",
    "ParseError",
    "counterexamples",
    "decompose",
    "derivative",
    "diff_check",
    "evaluate",
    "radius",
    "run",
    "series",
    "series_check",
]
