"""
Custom exceptions for the quregister chart-embedding library
"""


class QuregisterError(Exception):
    """Base exception for every library failure"""
    pass


class NonFiniteInputError(QuregisterError):
    """NaN or Inf found in a vector, matrix or scalar input"""
    pass


class ShapeError(QuregisterError):
    """Vector or matrix does not have the expected shape"""
    pass


class ZeroVectorError(QuregisterError):
    """Vector too close to zero to be normalised"""
    pass


class NotNormalizedError(QuregisterError):
    """Vector rejected by a strict constructor because it is not unit-norm"""
    pass


class NotUnitModulusError(QuregisterError):
    """Gauge phase is not a unit complex number"""
    pass


class NotHermitianError(QuregisterError):
    """Matrix is not Hermitian within tolerance"""
    pass


class NotUnitaryError(QuregisterError):
    """Matrix is not unitary within tolerance"""
    pass


class NotSpecialUnitaryError(QuregisterError):
    """Matrix is not in SU(2) within tolerance"""
    pass


class NotInChartError(QuregisterError):
    """Quregister coordinate that anchors the chart is zero"""
    pass


class NotSeparableError(QuregisterError):
    """Quregister cannot be split as a tensor product of qubits"""
    pass


class BellSingularityError(QuregisterError):
    """Correction matrix C(t) is singular (|t| at the Bell value 1/2)"""
    pass


class IndexOutOfRangeError(QuregisterError):
    """Basis, Bell, chart or subsystem index outside its range"""
    pass


class InvalidDensityError(QuregisterError):
    """Matrix is not a density matrix (Hermitian, PSD, trace one)"""
    pass


class InvalidWeightsError(QuregisterError):
    """Mixture weights are negative or do not sum to one"""
    pass


class UnknownSuiteError(QuregisterError):
    """Property suite name is not registered"""
    pass


class ConfigurationError(QuregisterError):
    """Configuration and setup errors"""
    pass


class InputFormatError(QuregisterError):
    """Command-line state or gauge input could not be parsed"""
    pass
