"""Lucas polynomials, Lucas factorials, lucanomials, and Fibonacci versions.

The Lucas polynomial sequence is {0} = 0, {1} = 1 and
{n} = s*{n-1} + t*{n-2}; the Lucas factorial is {n}! = {n}{n-1}...{1} with
{0}! = 1.  The lucanomial coefficient {n choose k} = {n}!/({k}!{n-k}!) is a
polynomial analogue of the binomial coefficient.

Two independent computation routes are provided for the lucanomial:

* the primary, division-free route uses the Pascal-style recurrence
  obtained from the splitting identity {n} = {k}{n-k+1} + t*{k-1}{n-k},
  namely  {n,k} = {n-k+1}*{n-1,k-1} + t*{k-1}*{n-1,k}  with {n,0} = 1 and
  {n,k} = 0 outside 0 <= k <= n;
* :func:`lucanomial_division_oracle` evaluates the factorial quotient with
  exact division and exists purely so the two routes can disagree loudly.

Setting s = t = 1 turns {n} into the Fibonacci number F_n; the integer
specializations (fibonacci, fib_factorial, fibonomial) are computed
directly over int as the fast path for exhaustive enumeration, with
agreement against polynomial evaluation asserted in the test suite.
"""

from __future__ import annotations

from .polys import ONE, Poly, S, T, ZERO, divide_exact


class LucasTable:
    """Append-only cache of the polynomials {n} and {n}!.

    Extension is not thread-safe; build the table to the required bound
    before sharing it across threads, after which reads are safe.
    """

    def __init__(self):
        self._polys: list[Poly] = [ZERO, ONE]
        self._factorials: list[Poly] = [ONE]

    def poly(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("Lucas index must be nonnegative")
        polys = self._polys
        while len(polys) <= n:
            polys.append(S * polys[-1] + T * polys[-2])
        return polys[n]

    def factorial(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("Lucas index must be nonnegative")
        facts = self._factorials
        while len(facts) <= n:
            facts.append(facts[-1] * self.poly(len(facts)))
        return facts[n]


_TABLE = LucasTable()


def lucas(n: int) -> Poly:
    """The Lucas polynomial {n}."""
    return _TABLE.poly(n)


def lucas_factorial(n: int) -> Poly:
    """The Lucas factorial {n}!, with {0}! = 1."""
    return _TABLE.factorial(n)


_lucanomials: dict[tuple[int, int], Poly] = {}


def lucanomial(n: int, k: int) -> Poly:
    """The lucanomial {n choose k}, zero outside 0 <= k <= n.

    Computed division-free via the splitting-identity recurrence; agrees
    with the factorial quotient wherever the latter is defined.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return ZERO
    if k == 0:
        return ONE
    key = (n, k)
    cached = _lucanomials.get(key)
    if cached is None:
        cached = lucas(n - k + 1) * lucanomial(n - 1, k - 1) + T * lucas(k - 1) * lucanomial(n - 1, k)
        _lucanomials[key] = cached
    return cached


def lucanomial_division_oracle(n: int, k: int) -> Poly:
    """{n}! / ({k}! {n-k}!) by exact division; must equal lucanomial(n, k).

    NotDivisibleError propagating from here would falsify lucanomial
    integrality and is treated as an internal assertion failure.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return divide_exact(lucas_factorial(n), lucas_factorial(k) * lucas_factorial(n - k))


def split_identity(n: int, k: int) -> bool:
    """Check {n} = {k}*{n-k+1} + t*{k-1}*{n-k} exactly, for 1 <= k <= n."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return lucas(n) == lucas(k) * lucas(n - k + 1) + T * lucas(k - 1) * lucas(n - k)


_fibs: list[int] = [0, 1]


def fibonacci(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError("Fibonacci index must be nonnegative")
    while len(_fibs) <= n:
        _fibs.append(_fibs[-1] + _fibs[-2])
    return _fibs[n]


_fib_facts: list[int] = [1]


def fib_factorial(n: int) -> int:
    """F_n! = F_n * F_{n-1} * ... * F_1, with F_0! = 1."""
    if n < 0:
        raise ValueError("Fibonacci index must be nonnegative")
    while len(_fib_facts) <= n:
        _fib_facts.append(_fib_facts[-1] * fibonacci(len(_fib_facts)))
    return _fib_facts[n]


_fibonomials: dict[tuple[int, int], int] = {}


def fibonomial(n: int, k: int) -> int:
    """The fibonomial coefficient F_n!/(F_k! F_{n-k}!), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    if k == 0:
        return 1
    key = (n, k)
    cached = _fibonomials.get(key)
    if cached is None:
        cached = fibonacci(n - k + 1) * fibonomial(n - 1, k - 1) + fibonacci(k - 1) * fibonomial(n - 1, k)
        _fibonomials[key] = cached
    return cached
