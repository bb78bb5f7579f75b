"""Exception types shared across the package."""


class FFConicsError(Exception):
    """Base class for all ffconics errors."""


class NotPrime(FFConicsError):
    def __init__(self, p):
        super().__init__(f"{p} is not prime")
        self.p = p


class DegreeZero(FFConicsError):
    def __init__(self, n):
        super().__init__(f"extension degree must be >= 1, got {n}")
        self.n = n


class MagnitudeExceeded(FFConicsError):
    def __init__(self, q, limit):
        super().__init__(f"field size {q} exceeds magnitude limit {limit}")
        self.q = q
        self.limit = limit


class NonMonic(FFConicsError):
    """Irreducibility testing requires a monic polynomial."""


class ContextMismatch(FFConicsError):
    """Element does not belong to the field context it was used with."""


class ZeroInverse(FFConicsError):
    """Multiplicative inverse of zero requested."""


class ZeroParameter(FFConicsError):
    """Unit-group parameter must be nonzero."""


class CharacteristicTwo(FFConicsError):
    """Operation is defined only for odd characteristic."""


class OddCharacteristic(FFConicsError):
    """Operation is defined only for characteristic 2."""


class NotASquareRoot(FFConicsError):
    """Supplied element does not square to the required coefficient."""


class BudgetExceeded(FFConicsError):
    def __init__(self, q, budget):
        super().__init__(f"field size {q} exceeds enumeration budget {budget}")
        self.q = q
        self.budget = budget


class EvenArgument(FFConicsError):
    def __init__(self, m):
        super().__init__(f"argument must be odd and positive, got {m}")
        self.m = m
