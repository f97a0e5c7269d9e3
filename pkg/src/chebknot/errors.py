"""Exception types raised by the exact-arithmetic layers."""


class NonExactDivision(ArithmeticError):
    """Laurent division left a nonzero remainder."""


class IndexOutOfRange(IndexError):
    pass


class NonCoprime(ValueError):
    def __init__(self, n: int, l: int, gcd: int):
        super().__init__(f"torus parameters ({n}, {l}) are not coprime: gcd = {gcd}")
        self.n = n
        self.l = l
        self.gcd = gcd


class NotOdd(ValueError):
    pass


class NotEven(ValueError):
    pass


class AsymmetricInput(ValueError):
    """A Laurent polynomial expected to be fixed by u -> 1/u was not."""
