"""
Exact big-integer number theory primitives.

Everything here works on Python ``int`` (arbitrary precision); ``gmpy2`` is
used for the inner loops and its results are converted back to ``int`` before
they leave the module.

Primality method used by ``is_prime``:

1. trial division by every prime below ``settings.TRIAL_DIVISION_LIMIT``;
2. Miller-Rabin with the first 13 primes as witnesses, which is exact for
   n < 3 317 044 064 679 887 385 961 981;
3. above that bound, numbers of the form 2^p - 1 go through Lucas-Lehmer
   (exact) and anything else through ``sympy.isprime`` (BPSW). Nothing the
   solver or catalog generates reaches that last branch.
"""
import random
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

import gmpy2
import sympy

from app.config.Settings import settings
from app.core.exceptions import CapExceededError, InvalidInputError
from app.models.factorization import Factorization, PrimePower
from app.utils.logging import logger

MR_WITNESSES: Tuple[int, ...] = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


@lru_cache(maxsize=8)
def small_primes(limit: int) -> Tuple[int, ...]:
    """Primes strictly below ``limit`` (sieve of Eratosthenes)."""
    if limit <= 2:
        return ()
    flags = bytearray(b"\x01") * limit
    flags[0] = flags[1] = 0
    for i in range(2, gmpy2.isqrt(limit - 1) + 1):
        if flags[i]:
            flags[i * i::i] = bytes(len(range(i * i, limit, i)))
    return tuple(i for i, f in enumerate(flags) if f)


def _is_strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = gmpy2.powmod(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = gmpy2.powmod(x, 2, n)
        if x == n - 1:
            return True
    return False


def _is_mersenne_form(n: int) -> bool:
    return n > 1 and n & (n + 1) == 0


def is_prime(n: int) -> bool:
    """Exact primality for every input the toolkit produces."""
    if n < 0:
        raise InvalidInputError(f"is_prime expects n >= 0, got {n}")
    if n < 2:
        return False

    limit = settings.TRIAL_DIVISION_LIMIT
    for p in small_primes(limit):
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < limit * limit:
        return True

    if n < MR_DETERMINISTIC_BOUND:
        # Witnesses that are multiples of n say nothing about n
        return all(_is_strong_probable_prime(n, a) for a in MR_WITNESSES if a % n)

    if _is_mersenne_form(n):
        p = n.bit_length()
        return is_prime(p) and lucas_lehmer(p)

    logger.debug(f"is_prime: {n.bit_length()}-bit input outside deterministic range, using BPSW")
    return bool(sympy.isprime(n))


def lucas_lehmer(p: int) -> bool:
    """True iff 2^p - 1 is prime, for an odd prime exponent p."""
    if p < 3 or not is_prime(p):
        raise InvalidInputError(f"lucas_lehmer needs a prime p >= 3, got {p}")
    m = (1 << p) - 1
    s = 4
    for _ in range(p - 2):
        s = (s * s - 2) % m
    return s == 0


def is_mersenne_exponent(p: int) -> bool:
    """True iff p is prime and 2^p - 1 is prime (p = 2 checked directly)."""
    if p < 2 or not is_prime(p):
        return False
    if p == 2:
        return True
    return lucas_lehmer(p)


def iter_mersenne_exponents(limit: int) -> Iterator[int]:
    """Mersenne exponents p <= limit, ascending, tested one at a time."""
    return (p for p in range(2, limit + 1) if is_mersenne_exponent(p))


def mersenne_exponents(limit: int) -> List[int]:
    """All Mersenne exponents p <= limit, ascending."""
    return list(iter_mersenne_exponents(limit))


def integer_sqrt(n: int) -> Tuple[int, bool]:
    """Return ``(floor(sqrt(n)), n is a perfect square)``."""
    if n < 0:
        raise InvalidInputError(f"integer_sqrt expects n >= 0, got {n}")
    s, r = gmpy2.isqrt_rem(n)
    return int(s), r == 0


def mod4_residue(m: int) -> int:
    if m < 0:
        raise InvalidInputError(f"mod4_residue expects m >= 0, got {m}")
    return m & 3


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a non-trivial factor of the odd composite ``n``."""
    budget = settings.RHO_MAX_ITERATIONS
    while budget > 0:
        y = rng.randint(1, n - 1)
        c = rng.randint(1, n - 1)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and budget > 0:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = int(gmpy2.gcd(q, n))
                k += m
            budget -= r
            r *= 2
        if g == n:
            # Batched gcd overshot; walk back one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = int(gmpy2.gcd(abs(x - ys), n))
        if 1 < g < n:
            return g
        logger.debug(f"pollard_brent: restart on n={n}")
    raise CapExceededError(n, settings.FACTOR_CAP_BITS)


def factor(n: int) -> Factorization:
    """Complete prime factorization by trial division then Pollard-Brent."""
    if n < 2:
        raise InvalidInputError(f"factor expects n >= 2, got {n}")
    if n >= settings.factor_cap:
        logger.warning(f"factor: {n.bit_length()}-bit input over the {settings.FACTOR_CAP_BITS}-bit cap")
        raise CapExceededError(n, settings.FACTOR_CAP_BITS)

    counts: Dict[int, int] = {}
    rest = n
    for p in small_primes(settings.TRIAL_DIVISION_LIMIT):
        if p * p > rest:
            break
        while rest % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rest //= p

    rng = random.Random(settings.RHO_SEED)
    pending = [rest] if rest > 1 else []
    while pending:
        m = pending.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _pollard_brent(m, rng)
        pending.extend((d, m // d))

    factors = [PrimePower(prime=p, multiplicity=e) for p, e in sorted(counts.items())]
    logger.debug(f"factor({n}) = {factors}")
    return Factorization(n=n, factors=factors)
