"""Small integer-arithmetic helpers used across the package."""

import math


def divisors(n: int) -> list:
    """Sorted list of positive divisors of n."""
    if n <= 0:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma0(n: int) -> int:
    return len(divisors(n))


def sigma1(n: int) -> int:
    return sum(divisors(n))


def exact_divisors(n: int) -> list:
    """Divisors m of n with gcd(m, n/m) = 1."""
    return [m for m in divisors(n) if math.gcd(m, n // m) == 1]


def isqrt_floor(num: int, den: int = 1) -> int:
    """floor(sqrt(num/den)) for nonnegative num, positive den."""
    if num < 0:
        raise ValueError("negative radicand")
    return math.isqrt(num * den) // den if den != 1 else math.isqrt(num)
