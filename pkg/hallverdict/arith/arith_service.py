"""exact number theory behind the conditions: factorizations, r-parts, multiplicative orders"""

import os
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Iterable, List

from dotenv import load_dotenv
from sympy import divisors, factorint, isprime, primerange
from sympy.ntheory import multiplicity, n_order, perfect_power, pollard_rho

from hallverdict.arith.schema import Factorization
from hallverdict.utils.custom_logger import CustomLogger
from hallverdict.utils.errors import CapExceeded, InvalidInput

load_dotenv()

TRIAL_DIVISION_LIMIT = int(os.getenv("HV_TRIAL_DIVISION_LIMIT", "1000000"))
FACTOR_CAP_BITS = int(os.getenv("HV_FACTOR_CAP_BITS", "128"))
RHO_MAX_STEPS = int(os.getenv("HV_RHO_MAX_STEPS", "200000"))
RHO_RETRIES = int(os.getenv("HV_RHO_RETRIES", "5"))

logger = CustomLogger("hallverdict")


# ================================================================================================
@lru_cache(maxsize=1)
def _trial_primes() -> List[int]:
    return list(primerange(2, TRIAL_DIVISION_LIMIT + 1))


def _split_cofactor(cofactor: int, found: dict, exponent: int = 1) -> None:
    """factor what is left after trial division into `found`"""
    if cofactor == 1:
        return
    if isprime(cofactor):
        found[cofactor] = found.get(cofactor, 0) + exponent
        return
    if cofactor.bit_length() > FACTOR_CAP_BITS:
        logger.warning(
            "cofactor of %d bits exceeds the factorization cap", cofactor.bit_length()
        )
        raise CapExceeded(
            f"cannot factor a {cofactor.bit_length()}-bit cofactor, the cap is {FACTOR_CAP_BITS} bits"
        )
    power = perfect_power(cofactor)
    if power:
        base, power_exponent = power
        _split_cofactor(base, found, exponent * power_exponent)
        return
    divisor = pollard_rho(cofactor, retries=RHO_RETRIES, max_steps=RHO_MAX_STEPS)
    if divisor is None:
        logger.warning("pollard rho gave up on a %d-bit cofactor", cofactor.bit_length())
        raise CapExceeded(
            f"no factor of {cofactor} found within {RHO_MAX_STEPS} rho steps"
        )
    _split_cofactor(divisor, found, exponent)
    _split_cofactor(cofactor // divisor, found, exponent)


@lru_cache(maxsize=8192)
def prime_factorization(n: int) -> Factorization:
    """trial division up to the configured bound, then pollard rho on the cofactor"""
    if n < 1:
        raise InvalidInput(f"cannot factor {n}")
    found = {}
    remaining = n
    for prime in _trial_primes():
        if prime * prime > remaining:
            break
        if remaining % prime == 0:
            count = 0
            while remaining % prime == 0:
                remaining //= prime
                count += 1
            found[prime] = count
    _split_cofactor(remaining, found)
    return Factorization(factors=sorted(found.items()))


def prime_set(n: int) -> List[int]:
    """pi(n), ascending"""
    return prime_factorization(n).primes


def _require_prime(r: int) -> None:
    if not isprime(r):
        raise InvalidInput(f"{r} is not a prime")


def _require_odd_prime(r: int) -> None:
    if r == 2 or not isprime(r):
        raise InvalidInput(f"{r} is not an odd prime")


def r_part(n: int, r: int) -> int:
    """(n)_r, the largest power of r dividing n"""
    if n < 1:
        raise InvalidInput(f"r-part of {n} is undefined")
    _require_prime(r)
    return r ** multiplicity(r, n)


def pi_part(n: int, primes: Iterable[int]) -> int:
    """n_pi, the product of the r-parts of n over r in primes"""
    result = 1
    for prime in set(primes):
        result *= r_part(n, prime)
    return result


def mult_order(q: int, r: int) -> int:
    """e(q, r): the least e > 0 with q^e = 1 mod r"""
    _require_odd_prime(r)
    if q < 2:
        raise InvalidInput(f"q must be at least 2, got {q}")
    if q % r == 0:
        raise InvalidInput(f"{r} divides {q}")
    return n_order(q % r, r)


def e_star(e: int) -> int:
    """2e for odd e, e when 4 | e, e/2 when e = 2 mod 4"""
    if e < 1:
        raise InvalidInput(f"e must be positive, got {e}")
    if e % 2 == 1:
        return 2 * e
    if e % 4 == 0:
        return e
    return e // 2


def epsilon_of(q: int) -> int:
    """the sign with q = epsilon mod 4"""
    if q % 2 == 0:
        raise InvalidInput(f"epsilon is defined for odd q only, got {q}")
    return 1 if q % 4 == 1 else -1


def factorial_r_part(n: int, r: int) -> int:
    """(n!)_r by Legendre's sum"""
    if n < 0:
        raise InvalidInput(f"{n}! is undefined")
    _require_prime(r)
    exponent = 0
    power = r
    while power <= n:
        exponent += n // power
        power *= r
    return r**exponent


def _valuation_at_order(base: int, e: int, r: int) -> int:
    """the exponent of r in base^e - 1, where e is the order of base mod r"""
    valuation = 1
    while pow(base % r ** (valuation + 1), e, r ** (valuation + 1)) == 1:
        valuation += 1
    return valuation


def power_r_part(k: int, m: int, r: int, signed: bool = False) -> int:
    """
    (k^m - 1)_r, or (k^m - (-1)^m)_r when signed, by the closed form
    (k^e - 1)_r (m/e)_r if e | m and 1 otherwise
    """
    _require_odd_prime(r)
    if m < 1:
        raise InvalidInput(f"m must be positive, got {m}")
    order = mult_order(k, r)
    if signed:
        # k^m - (-1)^m = +-((-k)^m - 1) and e(-k, r) = e*
        order = e_star(order)
        base = -k
    else:
        base = k
    if m % order != 0:
        return 1
    return r ** _valuation_at_order(base, order, r) * r_part(m // order, r)


def prod_r_part(q: int, n: int, r: int, signed: bool) -> int:
    """
    r-part of prod_{i=1..n} (q^i - 1), or of prod (q^i - (-1)^i) when signed,
    as (q^e - 1)_r^[n/e] ([n/e]!)_r with e* in place of e for the signed product
    """
    _require_odd_prime(r)
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    if q < 2:
        raise InvalidInput(f"q must be at least 2, got {q}")
    if q % r == 0:
        raise InvalidInput(f"{r} divides {q}")
    order = mult_order(q, r)
    if signed:
        order = e_star(order)
    count = n // order
    if count == 0:
        return 1
    return power_r_part(q, order, r, signed) ** count * factorial_r_part(count, r)


def factorial_part_matches(q: int, n: int, r: int, signed: bool) -> bool:
    """whether prod_r_part(q, n, r, signed) equals (n!)_r, decided without computing either"""
    _require_odd_prime(r)
    order = mult_order(q, r)
    if signed:
        order = e_star(order)
    if n < r - 1:
        # both sides are 1 exactly when no factor q^i -+ 1 is divisible by r
        return order > n
    return (
        order == r - 1
        and power_r_part(q, r - 1, r) == r
        and n // r == n // (r - 1)
    )


def fermat_prime_test(t: int) -> bool:
    """t is a prime of the form 2^(2^k) + 1"""
    if t < 3 or not isprime(t):
        return False
    return (t - 1) & (t - 2) == 0


def integer_part(x) -> int:
    """[x] for an integer or rational x"""
    return floor(Fraction(x))


def _moebius(n: int) -> int:
    exponents = factorint(n).values()
    if any(exponent > 1 for exponent in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


@lru_cache(maxsize=4096)
def cyclotomic_value(k: int, x: int) -> int:
    """Phi_k(x) via the Moebius product over the divisors of k"""
    if k < 1 or x < 2:
        raise InvalidInput(f"cyclotomic value Phi_{k}({x}) not supported")
    numerator = 1
    denominator = 1
    for d in divisors(k):
        sign = _moebius(k // d)
        if sign == 1:
            numerator *= x**d - 1
        elif sign == -1:
            denominator *= x**d - 1
    return numerator // denominator
