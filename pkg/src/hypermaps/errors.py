"""Exception types raised across the package."""


class HypermapError(Exception):
    """Base class for all errors raised by this package."""


class NotInvolution(HypermapError):
    def __init__(self, index: int):
        super().__init__(f"h{index} is not an involutory permutation")
        self.index = index


class NotTransitive(HypermapError):
    def __init__(self, reachable: int, n: int | None = None):
        msg = f"monodromy group is not transitive: {reachable} flags reachable from flag 0"
        if n is not None:
            msg += f" out of {n}"
        super().__init__(msg)
        self.reachable = reachable


class BoundaryPresent(HypermapError):
    def __init__(self, what: str = "operation"):
        super().__init__(f"{what} is undefined for hypermaps with boundary")


class OddFlagCount(HypermapError):
    def __init__(self, n: int):
        super().__init__(f"Euler characteristic needs an even flag count, got {n}")
        self.n = n


class NotBipartite(HypermapError):
    pass


class NotBipartiteRegular(HypermapError):
    pass


class CapacityExceeded(HypermapError):
    def __init__(self, cap: int, what: str = "enumeration"):
        super().__init__(f"{what} exceeded the capacity of {cap}")
        self.cap = cap


class NoKernelRelators(HypermapError):
    pass


class Unsatisfiable(HypermapError):
    pass
