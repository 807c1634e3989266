class QWhittakerError(ValueError):
    pass

class DivisionByZeroPolynomial(QWhittakerError, ZeroDivisionError):
    def __init__(self, message='division by zero polynomial'):
        super().__init__(message)

class PoleError(QWhittakerError):
    def __init__(self, q0=None):
        message = 'pole at q0' if q0 is None else 'pole at q0={}'.format(q0)
        super().__init__(message)

class OutsideConeError(QWhittakerError):
    def __init__(self, point=None):
        message = 'outside dominant cone' if point is None else 'outside dominant cone: {}'.format(tuple(point))
        super().__init__(message)

class RankMismatchError(QWhittakerError):
    pass

class ConfigError(QWhittakerError):
    pass

class InternalError(QWhittakerError):
    """
        Raised when an identity that must hold by construction does not,
        e.g. a Macdonald operator result that fails to be a polynomial.
    """
    pass
