"""Checked 128-bit unsigned arithmetic for exact counts.

Python ints never wrap, so "checked" here means: any intermediate or final
value outside [0, 2**128) raises instead of being returned.
"""

from wheelcensus.errors import CountOverflowError

U128_MAX = (1 << 128) - 1


def checked(value: int, what: str = "count") -> int:
    if value < 0 or value > U128_MAX:
        raise CountOverflowError(f"{what} does not fit in 128 bits (got {value.bit_length()} bits)")
    return value


def add(a: int, b: int) -> int:
    return checked(a + b, "sum")


def mul(a: int, b: int) -> int:
    return checked(a * b, "product")


def power(base: int, exp: int) -> int:
    # bit_length bound avoids materialising huge powers only to reject them
    if base > 1 and (base.bit_length() - 1) * exp >= 128:
        raise CountOverflowError(f"{base}**{exp} does not fit in 128 bits")
    return checked(base**exp, "power")


def exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q
