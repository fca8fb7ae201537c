"""Power factorizations: n = c * prod_{j<=M} x_j**j with a small leftover c.

Given 1 <= n <= X and a quality parameter epsilon, split n by exponent
classes: y_j is the product of the primes appearing in n with exponent
exactly j.  Classes up to M = floor(10/eps^2) become parts directly; the
high classes (j > M) are folded into the K-th part, K = 2*ceil(1/eps),
leaving a coefficient c.  The parts are pairwise coprime, c and x_K are at
most X**(eps/2), and prod x_j tracks rad(n) within a factor X**eps.

Applied with eps^2/2 to each member of an abc triple, this rewrites
a + b = c as a ternary equation in d = floor(40/eps^4) power classes with
coefficients at most X**(eps^2/4).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .exact import pow_leq
from .radicals import factorize, radical


@dataclass(frozen=True)
class PowerFactorization:
    """Result of power_factorize: n = c * prod(parts[j-1]**j, j=1..M)."""

    n: int
    X: int
    epsilon: Fraction
    K: int
    M: int
    c: int
    parts: tuple[int, ...]

    def part(self, j: int) -> int:
        """x_j for 1 <= j <= M."""
        if not 1 <= j <= self.M:
            raise IndexError(f"part index {j} outside 1..{self.M}")
        return self.parts[j - 1]

    @property
    def nontrivial_parts(self) -> dict[int, int]:
        """{j: x_j} restricted to parts larger than 1."""
        return {j: x for j, x in enumerate(self.parts, start=1) if x != 1}


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an invariant audit: ok, plus one line per violation."""

    ok: bool
    failures: tuple[str, ...] = ()


@dataclass(frozen=True)
class TripleReduction:
    """An abc triple rewritten as coeff_a*A + coeff_b*B = coeff_c*C.

    A, B, C are the part-power products of the three power factorizations,
    all taken at quality epsilon**2/2, so the number of power classes is
    d = floor(40/epsilon**4) and each coefficient is at most X**(epsilon**2/4).
    """

    a: int
    b: int
    c: int
    X: int
    epsilon: Fraction
    fa: PowerFactorization
    fb: PowerFactorization
    fc: PowerFactorization

    @property
    def d(self) -> int:
        """Number of power classes shared by the three factorizations."""
        return self.fa.M

    @property
    def coefficients(self) -> tuple[int, int, int]:
        """(coeff_a, coeff_b, coeff_c) -- the three leftover factors."""
        return self.fa.c, self.fb.c, self.fc.c


def _class_products(n: int) -> dict[int, int]:
    """{j: y_j} where y_j is the product of primes with exponent exactly j."""
    classes: dict[int, int] = {}
    for p, e in factorize(n).items():
        classes[e] = classes.get(e, 1) * p
    return classes


def power_factorize(n: int, X: int, epsilon: Fraction) -> PowerFactorization:
    """Split n into c * prod_{j=1}^{M} x_j**j (see module docstring).

    Requires 1 <= n <= X and epsilon in (0, 1/2].
    """
    eps = Fraction(epsilon)
    if not 0 < eps <= Fraction(1, 2):
        raise ValueError(f"epsilon must lie in (0, 1/2], got {eps}")
    if not 1 <= n <= X:
        raise ValueError(f"need 1 <= n <= X, got n={n}, X={X}")
    K = 2 * -((-eps.denominator) // eps.numerator)  # 2 * ceil(1/eps)
    M = (10 * eps.denominator**2) // eps.numerator**2  # floor(10/eps^2)
    classes = _class_products(n)
    parts = [classes.get(j, 1) for j in range(1, M + 1)]
    c = 1
    for m, y in classes.items():
        if m > M:
            parts[K - 1] *= y ** (m // K)
            c *= y ** (m % K)
    return PowerFactorization(n=n, X=X, epsilon=eps, K=K, M=M, c=c, parts=tuple(parts))


def verify_power_factorization(pf: PowerFactorization) -> CheckResult:
    """Audit every invariant of a PowerFactorization, exactly.

    Checks: reconstruction, pairwise coprimality of the parts, the
    X**(eps/2) ceilings on c and x_K, and the two-sided radical bracket
    X**(-eps) * prod(x_j) <= rad(n) <= X**(eps) * prod(x_j).
    All power comparisons clear denominators (never floats).
    """
    failures = []
    p, q = pf.epsilon.numerator, pf.epsilon.denominator
    if pf.c * prod(x**j for j, x in enumerate(pf.parts, start=1)) != pf.n:
        failures.append("reconstruction: c * prod(x_j^j) != n")
    nontrivial = [x for x in pf.parts if x != 1]
    for i in range(len(nontrivial)):
        for k in range(i + 1, len(nontrivial)):
            if gcd(nontrivial[i], nontrivial[k]) != 1:
                failures.append(
                    f"coprimality: gcd({nontrivial[i]}, {nontrivial[k]}) > 1"
                )
    if not pow_leq(pf.c, 2 * q, pf.X, p):  # c <= X^(eps/2)
        failures.append("coefficient bound: c^(2q) > X^p")
    if not pow_leq(pf.part(pf.K), 2 * q, pf.X, p):  # x_K <= X^(eps/2)
        failures.append("folded part bound: x_K^(2q) > X^p")
    r = radical(pf.n)
    w = prod(pf.parts)
    if not pow_leq(w, q, r**q * pf.X**p, 1):  # prod(x_j) <= rad(n) * X^eps
        failures.append("radical bracket: prod(x_j) > rad(n) * X^eps")
    if not pow_leq(r, q, w**q * pf.X**p, 1):  # rad(n) <= prod(x_j) * X^eps
        failures.append("radical bracket: rad(n) > prod(x_j) * X^eps")
    return CheckResult(ok=not failures, failures=tuple(failures))


def reduce_triple(a: int, b: int, c: int, X: int, epsilon: Fraction) -> TripleReduction:
    """Rewrite a coprime triple a + b = c in power-class form.

    Each member is power-factorized at quality epsilon**2/2, so epsilon may
    range over (0, 1].  Requires 1 <= a, b, c <= X, a + b = c, gcd(a, b) = 1.
    """
    eps = Fraction(epsilon)
    if not 0 < eps <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {eps}")
    if a < 1 or b < 1 or a + b != c:
        raise ValueError(f"not an additive triple: {a} + {b} != {c}")
    if c > X:
        raise ValueError(f"triple exceeds the window: c={c} > X={X}")
    if gcd(a, b) != 1:
        raise ValueError(f"triple is not coprime: gcd({a}, {b}) > 1")
    inner = eps * eps / 2
    return TripleReduction(
        a=a, b=b, c=c, X=X, epsilon=eps,
        fa=power_factorize(a, X, inner),
        fb=power_factorize(b, X, inner),
        fc=power_factorize(c, X, inner),
    )
