# alpha_core/exceptions.py


class AlphaCalcError(Exception):
    """Raíz de todos los errores del kernel."""

    pass


class PoleError(AlphaCalcError):
    """El argumento de Γ es un entero no positivo."""

    def __init__(self, message="Gamma pole", point=None):
        self.point = point
        super().__init__(message)


class DomainError(AlphaCalcError):
    """El argumento cae fuera del dominio de la operación."""

    pass


class EmptySeriesError(AlphaCalcError):
    """La operación necesita una serie con al menos un término."""

    pass


class DomainMismatchError(AlphaCalcError):
    """Se mezclaron series exactas y aproximadas."""

    pass


class IntegralPoleError(AlphaCalcError):
    """La α-integral de x^β no existe cuando β = −α."""

    def __init__(self, message="Integral pole", exponent=None):
        self.exponent = exponent
        super().__init__(message)


class SeriesSyntaxError(AlphaCalcError):
    """Texto que no respeta la gramática de series."""

    def __init__(self, message="Syntax error", offset=0, expected=()):
        self.offset = offset
        self.expected = tuple(expected)
        super().__init__(message)


class ZeroDenominatorError(SeriesSyntaxError):
    """Un racional escrito con denominador cero."""

    pass


class UnknownSuiteError(AlphaCalcError):
    """Nombre de suite de verificación desconocido."""

    def __init__(self, message="Unknown suite", suite=None):
        self.suite = suite
        super().__init__(message)
