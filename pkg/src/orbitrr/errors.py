"""Exception types shared across the package.

The CLI maps these onto exit codes: bad input / violated preconditions
exit 1, exhausted genericity retries exit 2, internal inconsistencies
(failed exact division, calibration drift) exit 3.
"""


class ConfigurationError(ValueError):
    """Unsupported Cartan type or rank."""


class DegenerateOrbitError(ValueError):
    """The requested weight lies on a Weyl wall, so the orbit degenerates."""


class SingularValueError(ValueError):
    """Zero is not a regular value of the shifted moment map."""


class InadmissibleInputError(ValueError):
    """Prequantization condition (integrality / parity) fails."""


class GeneratorDeficiencyError(ValueError):
    """The supplied invariant generators cannot express the character class."""


class GenericityError(RuntimeError):
    """A genericity assumption failed and retries were exhausted."""


class ConvergenceError(GenericityError):
    """A zero-phase residue term has too little decay to be assigned a value."""


class ExactDivisionError(ArithmeticError):
    """Series or polynomial division left a nonzero remainder."""


class InternalInconsistencyError(ArithmeticError):
    """An identity that must hold exactly failed; indicates an arithmetic bug."""


class CalibrationDriftError(InternalInconsistencyError):
    """The frozen localization constant changed between test configurations."""
