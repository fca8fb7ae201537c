"""Radicals (squarefree kernels) and exact integer factorization.

The radical rad(n) is the product of the distinct primes dividing n, with
rad(1) = 1.  Everything here is exact: bulk work goes through a
smallest-prime-factor sieve, and out-of-table arguments are fully factored
with trial division plus deterministic primality testing.  No probabilistic
shortcut is ever allowed to decide a count.
"""

from __future__ import annotations

from math import gcd, isqrt

# Deterministic Miller-Rabin witness set: testing against the first 13
# primes is a proven primality test for every n below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981

_TRIAL_CAP = 10_000  # trial-divide this far before switching to rho

# wheel mod 30: gaps between candidates coprime to 2, 3, 5
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)

# entry n holds rad(n); entry 0 is a 0 placeholder so indexing is direct
RadicalTable = list[int]


def build_radical_table(limit: int) -> RadicalTable:
    """Table rad_of[n] = rad(n) for 0 <= n <= limit (rad_of[0] = 0).

    Runs a smallest-prime-factor sieve, then applies the recurrence
    rad(n) = p * rad(n / p^v) with p = spf(n) and p^v || n.
    """
    if limit < 0:
        raise ValueError("limit must be >= 0")
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    rad = [0] * (limit + 1)
    if limit >= 1:
        rad[1] = 1
    for n in range(2, limit + 1):
        p = spf[n]
        m = n // p
        while m % p == 0:
            m //= p
        rad[n] = rad[m] * p
    return rad


def _is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin below the proven bound,
    trial division above it -- slow but never wrong)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:  # pragma: no cover - astronomically large inputs
        f = 43
        while f * f <= n:
            if n % f == 0:
                return False
            f += 2
        return True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho_factor(n: int) -> int:
    """A nontrivial factor of an odd composite n (Brent's cycle method).

    Deterministic: polynomial offsets are tried in a fixed order, and the
    returned value is verified by gcd, so the answer is always a true factor.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


def factorize(n: int) -> dict[int, int]:
    """Exact prime factorization {p: exponent} of n >= 1."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f, i = 7, 0
    while f <= _TRIAL_CAP and f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += _WHEEL[i]
        i = (i + 1) % 8
    # remaining cofactor is 1, prime, or built from primes beyond the cap
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _rho_factor(m)
        stack.append(d)
        stack.append(m // d)
    return out


def radical(n: int, table: list[int] | None = None) -> int:
    """rad(n): the product of the distinct primes dividing n (rad(1) = 1)."""
    if n < 1:
        raise ValueError("radical requires n >= 1")
    if table is not None and n < len(table):
        return table[n]
    r = 1
    for p in factorize(n):
        r *= p
    return r


def is_squarefree(n: int) -> bool:
    """True when no prime square divides n."""
    if n < 1:
        raise ValueError("is_squarefree requires n >= 1")
    return all(e == 1 for e in factorize(n).values())
