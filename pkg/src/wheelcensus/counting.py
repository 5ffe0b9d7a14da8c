"""Closed-form counts: necklaces, bracelets, partitions and psi_p(n).

``psi_p(n)`` is the number of switching-isomorphism classes of signed W_n
with exactly ``p`` negative rim edges.  Closed forms exist for
``min(p, n - p) <= 4``; everything else must be enumerated.
"""

from __future__ import annotations

from math import gcd

from wheelcensus import _exact
from wheelcensus.errors import NoClosedFormError

CLOSED_FORM_MAX_P = 4


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"phi is defined for n >= 1, got {n}")
    result = n
    for prime in _factorize(n):
        result -= result // prime
    return result


def divisors(n: int) -> list[int]:
    divs = [1]
    for prime, mult in _factorize(n).items():
        divs = [d * prime**e for d in divs for e in range(mult + 1)]
    return sorted(divs)


def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def necklaces(n: int, k: int) -> int:
    """Number of k-ary necklaces of length n: (1/n) sum_{d|n} phi(d) k^(n/d)."""
    _check_nk(n, k)
    total = 0
    for d in divisors(n):
        total = _exact.add(total, _exact.mul(euler_phi(d), _exact.power(k, n // d)))
    return _exact.exact_div(total, n)


def necklaces_gcd_form(n: int, k: int) -> int:
    """Same count via sum_{i=1..n} k^gcd(n,i) / n; used as a self-check."""
    _check_nk(n, k)
    total = 0
    for i in range(1, n + 1):
        total = _exact.add(total, _exact.power(k, gcd(n, i)))
    return _exact.exact_div(total, n)


def reflection_term(n: int, k: int) -> int:
    """Average number of words fixed by a reflection of D_n."""
    _check_nk(n, k)
    if n % 2:
        return _exact.power(k, (n + 1) // 2)
    # (k+1) k^(n/2) is always even
    return _exact.exact_div(_exact.mul(k + 1, _exact.power(k, n // 2)), 2)


def bracelets(n: int, k: int) -> int:
    """Number of k-ary bracelets of length n: (N(n,k) + R(n,k)) / 2."""
    return _exact.exact_div(_exact.add(necklaces(n, k), reflection_term(n, k)), 2)


def partition_count(n: int, k: int) -> int:
    """Number of partitions of n into exactly k positive parts."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    # table[m][j] = p(m; j) for j <= k, built bottom-up to avoid deep recursion
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for m in range(1, n + 1):
        for j in range(1, min(m, k) + 1):
            table[m][j] = table[m - 1][j - 1] + table[m - j][j]
    return table[n][k]


def nearest_twelfth(m: int) -> int:
    """Nearest integer to m/12 for m >= 0 (ties, which squares never hit, round up)."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return (m + 6) // 12


def _check_psi_args(p: int, n: int) -> None:
    if n < 4:
        raise ValueError(f"psi is defined here for n >= 4, got n={n}")
    if not 0 <= p <= n:
        raise ValueError(f"p must lie in 0..{n}, got p={p}")


def has_closed_form(p: int, n: int) -> bool:
    _check_psi_args(p, n)
    return min(p, n - p) <= CLOSED_FORM_MAX_P


def _psi4_even(k: int, l: int) -> int:
    tail = _exact.exact_div(4 * l**3 + 15 * l**2 + 20 * l + 9, 3)
    return (l + 1) * k * k - (2 * l + 3) * (l + 1) * k + tail


def _psi4_odd(k: int, l: int) -> int:
    tail = _exact.exact_div((2 * l + 1) * (2 * l + 3) * (l + 1), 3)
    return (l + 1) * k * k - 2 * (l + 1) ** 2 * k + tail


def psi_closed(p: int, n: int) -> int:
    """Closed-form psi_p(n), using psi_p(n) = psi_{n-p}(n).

    Raises NoClosedFormError when 5 <= min(p, n-p); use
    ``wheelcensus.census.psi_enumerated`` there.
    """
    _check_psi_args(p, n)
    q = min(p, n - p)
    if q > CLOSED_FORM_MAX_P:
        raise NoClosedFormError(
            f"no closed form for p={p}, n={n} (min(p, n-p) = {q} > {CLOSED_FORM_MAX_P}); "
            "use the enumeration instead"
        )
    if q <= 1:
        return 1
    if q == 2:
        return 1 + (n - 2) // 2
    if q == 3:
        return 1 + (n - 3) // 2 + nearest_twelfth((n - 3) ** 2)
    l = (n - 4) // 4
    if n % 2 == 0:
        value = _psi4_even(n // 2, l)
    else:
        value = _psi4_odd((n - 1) // 2, l)
    return _exact.checked(value)


def max_case_distance(n: int) -> int:
    """Largest minimum pair distance among four rim edges of C_n."""
    return (n - 4) // 4


def psi4_case_counts(n: int, r: int) -> int:
    """Weight-4 classes whose closest pair of negative edges is at distance r.

    Summing over r = 0..(n-4)//4 gives psi_closed(4, n).
    """
    if n < 8:
        raise ValueError(f"the distance case split needs n >= 8, got n={n}")
    if not 0 <= r <= max_case_distance(n):
        raise ValueError(f"r must lie in 0..{max_case_distance(n)} for n={n}, got r={r}")
    k = n // 2
    if r == 0:
        # path of four, path of three plus one, two paths of two, path of two plus two isolated
        isolated_pair = (k - 3) * (k - 2) if n % 2 == 0 else (k - 2) ** 2
        return 1 + (n // 2 - 2) + (n // 2 - 2) + isolated_pair
    if n % 2:
        return (k - (2 * r + 1)) ** 2
    return (k - (2 * r + 1)) + (k - (2 * r + 2)) ** 2


def psi_total(n: int) -> int:
    """Total number of switching-isomorphism classes of signed W_n."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    return bracelets(n, 2)

