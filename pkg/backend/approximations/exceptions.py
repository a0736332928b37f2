class SoftRoughError(Exception):
    """Base class for every error raised by the approximation toolkit."""


class UniverseMismatch(SoftRoughError):
    pass


class UnknownElement(SoftRoughError):
    def __init__(self, name):
        super().__init__(f'unknown element "{name}"')
        self.name = name


class NotACovering(SoftRoughError):
    pass


class NotAPartition(SoftRoughError):
    pass


class NotAnEquivalence(NotAPartition):
    pass


class UniverseTooLarge(SoftRoughError):
    def __init__(self, size, limit, setting='SOFTROUGH_MAX_EXHAUSTIVE'):
        message = f'universe of {size} elements exceeds the limit of {limit}'
        if setting:
            message += f' (set {setting} to raise it)'
        super().__init__(message)
        self.size = size
        self.limit = limit


class NotATopology(SoftRoughError):
    pass


class UnknownProperty(SoftRoughError):
    def __init__(self, name):
        super().__init__(f'unknown property "{name}"')
        self.name = name
