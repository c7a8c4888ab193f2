"""Exact modular arithmetic for primes p = 1 (mod 4).

Everything here is integer arithmetic; no floats touch the combinatorial
structure of the Paley graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# Deterministic Miller-Rabin witnesses for n < 3.3e24 (covers 64-bit).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class InvalidPrimeError(ValueError):
    """Raised when a modulus is not a prime congruent to 1 mod 4."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
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


def validate_prime(p: int) -> bool:
    """True iff `p` is a prime with p % 4 == 1."""
    return p >= 2 and p % 4 == 1 and is_prime(p)


def check_prime(p: int) -> None:
    if not isinstance(p, int) or p < 2:
        raise InvalidPrimeError(f"p={p!r} must be an integer >= 2")
    if p % 4 != 1:
        raise InvalidPrimeError(f"p={p} violates p = 1 (mod 4) (p mod 4 = {p % 4})")
    if not is_prime(p):
        raise InvalidPrimeError(f"p={p} is not prime")


def primes_1_mod_4(limit: int) -> list[int]:
    """All primes p = 1 (mod 4) with p < limit, ascending."""
    return [p for p in range(5, limit, 4) if is_prime(p)]


def quadratic_residues(p: int) -> set[int]:
    """Nonzero quadratic residues mod p."""
    check_prime(p)
    return {y * y % p for y in range(1, p)}


def is_residue(x: int, p: int) -> bool:
    """Euler's criterion; zero is not counted as a residue."""
    x %= p
    return x != 0 and pow(x, (p - 1) // 2, p) == 1


def multiplicative_order(a: int, p: int) -> int:
    k, x = 1, a % p
    while x != 1:
        x = x * a % p
        k += 1
    return k


def _prime_factors(m: int) -> list[int]:
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def is_generator(a: int, p: int) -> bool:
    """True iff `a` generates the group of nonzero residues mod p."""
    n = (p - 1) // 2
    if not is_residue(a, p):
        return False
    return all(pow(a, n // q, p) != 1 for q in _prime_factors(n))


def generators(p: int) -> list[int]:
    """Every generator of the residue subgroup, ascending."""
    check_prime(p)
    return [a for a in range(1, p) if is_generator(a, p)]


def find_generator(p: int) -> int:
    """Smallest generator of the cyclic group of nonzero residues mod p."""
    check_prime(p)
    for a in range(1, p):
        if is_generator(a, p):
            return a
    raise AssertionError(f"no generator found for p={p}")  # unreachable: group is cyclic


@dataclass(frozen=True)
class PrimeContext:
    p: int
    n: int
    alpha: int
    residue_order: tuple[int, ...] = field(repr=False)

    def discrete_log(self) -> dict[int, int]:
        """Map residue -> its position k with alpha**k = residue."""
        return {r: k for k, r in enumerate(self.residue_order)}


def make_context(p: int, alpha: int | None = None) -> PrimeContext:
    """Build a :class:`PrimeContext`; `alpha` defaults to the smallest generator."""
    check_prime(p)
    if alpha is None:
        alpha = find_generator(p)
    elif not is_generator(alpha, p):
        raise InvalidPrimeError(f"alpha={alpha} does not generate the residues mod {p}")
    n = (p - 1) // 2
    order = [1]
    for _ in range(n - 1):
        order.append(order[-1] * alpha % p)
    return PrimeContext(p=p, n=n, alpha=alpha, residue_order=tuple(order))
