"""Exception hierarchy shared by every module of the package."""


class KummerError(Exception):
    """Base class for all errors raised by kummer3."""


class NotSpecialLinear(KummerError):
    pass


class OrderBoundExceeded(KummerError):
    pass


class InfiniteOrder(KummerError):
    pass


class UnclassifiableGroup(KummerError):
    pass


class RankDegenerate(KummerError):
    pass


class LevelTooSmall(KummerError):
    pass


class UnexpectedAction(KummerError):
    pass


class UnsupportedCombination(KummerError):
    pass


class InputError(KummerError):
    """Bad user input: unknown group name, malformed generator file, ..."""


class UnknownGroup(InputError):
    pass
