import pytest
from hypothesis import given, strategies as st

from paley_lp.numtheory import (InvalidPrimeError, find_generator, generators, is_prime, is_residue,
                                make_context, multiplicative_order, primes_1_mod_4,
                                quadratic_residues, validate_prime)

from .oracles import squares_mod

PRIMES = primes_1_mod_4(500)


@pytest.mark.parametrize("p,expected", [(13, True), (7, False), (2861, True), (2, False),
                                        (25, False), (1, False), (5, True)])
def test_validate_prime(p, expected):
    assert validate_prime(p) is expected


def test_is_prime_matches_trial_division():
    def trial(n):
        return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))
    assert all(is_prime(n) == trial(n) for n in range(3000))


@pytest.mark.parametrize("p,expected", [
    (5, {1, 4}),
    (13, {1, 3, 4, 9, 10, 12}),
    (17, {1, 2, 4, 8, 9, 13, 15, 16}),
])
def test_quadratic_residues(p, expected):
    assert sorted(expected) == squares_mod(p)
    assert quadratic_residues(p) == expected


@pytest.mark.parametrize("p", PRIMES)
def test_residue_count_and_euler_criterion(p):
    q = quadratic_residues(p)
    assert len(q) == (p - 1) // 2
    assert {x for x in range(p) if is_residue(x, p)} == q
    assert is_residue(p - 1, p)


@pytest.mark.parametrize("x,p,expected", [(3, 13, True), (2, 13, False), (0, 13, False)])
def test_is_residue(x, p, expected):
    assert is_residue(x, p) is expected


@given(st.sampled_from(PRIMES), st.data())
def test_legendre_multiplicativity(p, data):
    s = next(x for x in range(2, p) if not is_residue(x, p))
    x = data.draw(st.integers(1, p - 1))
    assert is_residue(x, p) != is_residue(s * x % p, p)


@pytest.mark.parametrize("p,alpha", [(5, 4), (13, 4), (17, 2)])
def test_find_generator(p, alpha):
    assert find_generator(p) == alpha
    # smallest: brute-force orders of every residue below alpha
    n = (p - 1) // 2
    assert multiplicative_order(alpha, p) == n
    assert all(multiplicative_order(a, p) != n for a in squares_mod(p) if a < alpha)


def test_generators_all_have_full_order():
    for p in PRIMES[:20]:
        n = (p - 1) // 2
        gens = generators(p)
        assert gens == [a for a in squares_mod(p) if multiplicative_order(a, p) == n]


@pytest.mark.parametrize("p,expected", [
    (13, (4, [1, 4, 3, 12, 9, 10])),
    (5, (4, [1, 4])),
])
def test_make_context(p, expected):
    ctx = make_context(p)
    assert (ctx.alpha, list(ctx.residue_order)) == expected
    assert ctx.n == (p - 1) // 2


@pytest.mark.parametrize("p", PRIMES)
def test_context_invariants(p):
    ctx = make_context(p)
    order = ctx.residue_order
    assert order[0] == 1
    assert sorted(order) == sorted(quadratic_residues(p))
    assert all(order[(k + 1) % ctx.n] == ctx.alpha * order[k] % p for k in range(ctx.n))
    assert multiplicative_order(ctx.alpha, p) == ctx.n


@pytest.mark.parametrize("p", [7, 9, 21, 2, 3, 11])
def test_make_context_rejects(p):
    with pytest.raises(InvalidPrimeError):
        make_context(p)


def test_make_context_rejects_bad_alpha():
    with pytest.raises(InvalidPrimeError):
        make_context(13, alpha=3)  # order 3, not 6
