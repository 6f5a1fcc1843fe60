"""Named experiment presets for the four tabulated parameter sets."""

from fractions import Fraction

from .config import ExperimentConfig
from .errors import ConfigError
from .jacobi import JacobiParams
from .sobolev import MassKind, MassSequence, SobolevSetup

SETUPS = {
    "supercritical": SobolevSetup(
        params=JacobiParams(Fraction(3), Fraction(1)), j=3,
        mass=MassSequence(kind=MassKind.EXP_RATIONAL, M=Fraction(1, 2),
                          gamma=Fraction(25))),
    "subcritical": SobolevSetup(
        params=JacobiParams(Fraction(3), Fraction(-1, 2)), j=3,
        mass=MassSequence(kind=MassKind.LOG_RATIO, M=Fraction(7, 2),
                          gamma=Fraction(4))),
    "critical-small-mass": SobolevSetup(
        params=JacobiParams(Fraction(-9, 10), Fraction(-9, 10)), j=3,
        mass=MassSequence(kind=MassKind.POLY_RATIO, M=Fraction(5),
                          gamma=Fraction(61, 5))),
    "critical-big-mass": SobolevSetup(
        params=JacobiParams(Fraction(-9, 10), Fraction(-9, 10)), j=3,
        mass=MassSequence(kind=MassKind.POLY_RATIO, M=Fraction(10**6),
                          gamma=Fraction(61, 5))),
}

_TABLE_EXPERIMENT = {
    "table1": "supercritical", "table2": "supercritical",
    "table3": "subcritical", "table4": "subcritical",
    "table5": "critical-small-mass", "table6": "critical-small-mass",
    "table7": "critical-big-mass", "table8": "critical-big-mass",
}

_FIGURES = {
    "figure-supercritical": "supercritical",
    "figure-subcritical": "subcritical",
    "figure-critical-smallM": "critical-small-mass",
    "figure-critical-bigM": "critical-big-mass",
}

TABLE_DEGREES = (150, 250, 500)
FIGURE_DEGREES = (150, 500)


def preset_names():
    return sorted(_TABLE_EXPERIMENT) + sorted(_FIGURES) + sorted(SETUPS)


def get_preset(name):
    """Resolve a preset name to an ExperimentConfig."""
    if name in _TABLE_EXPERIMENT:
        exp = _TABLE_EXPERIMENT[name]
        return ExperimentConfig(id=name, job="tables", setup=SETUPS[exp],
                                degrees=TABLE_DEGREES, zero_count=4)
    if name in _FIGURES:
        exp = _FIGURES[name]
        return ExperimentConfig(id=name, job="mh-curve", setup=SETUPS[exp],
                                degrees=FIGURE_DEGREES, zero_count=4)
    if name in SETUPS:
        return ExperimentConfig(id=name, job="tables", setup=SETUPS[name],
                                degrees=TABLE_DEGREES, zero_count=4)
    raise ConfigError(f"unknown preset {name!r}; available: {', '.join(preset_names())}")
