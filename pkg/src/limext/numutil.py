"""Small exact number-theory helpers shared across the package."""

from __future__ import annotations

# Deterministic Miller-Rabin witness set for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int, what: str = "modulus") -> int:
    from .errors import NotPrimeError

    if not isinstance(p, int) or not is_prime(p):
        raise NotPrimeError(f"{what} must be a prime number, got {p!r}")
    return p


_TRIAL_LIMIT = 1 << 20


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}.

    Trial division up to about a million, then a primality test on the
    remainder.  Fine at desk scale (cokernel orders, cyclic moduli) and for
    large prime or near-prime inputs; a remainder with two huge prime
    factors is rejected rather than ground at.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n and f < _TRIAL_LIMIT:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        if f * f <= n and not is_prime(n):
            # Perfect powers of a large prime still factor cheaply.
            root, exp = _perfect_prime_power(n)
            if root is None:
                from .errors import UnsupportedInputError

                raise UnsupportedInputError(
                    f"factorization beyond desk scale: remaining factor {n}"
                )
            out[root] = out.get(root, 0) + exp
        else:
            out[n] = out.get(n, 0) + 1
    return out


def _iroot(n: int, k: int) -> int:
    # Floor k-th root by integer Newton iteration.
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _perfect_prime_power(n: int):
    for exp in range(2, n.bit_length()):
        root = _iroot(n, exp)
        for candidate in (root, root + 1):
            if candidate > 1 and candidate ** exp == n and is_prime(candidate):
                return candidate, exp
    return None, None


def vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("v_p(0) is not defined")
    n = abs(n)
    v = 0
    while n % p == 0:
        v += 1
        n //= p
    return v


def prime_to_p_part(n: int, p: int) -> int:
    """Largest divisor of |n| coprime to p."""
    return abs(n) // p ** vp(n, p)
