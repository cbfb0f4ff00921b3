"""Expansion coefficients of exponential divided differences.

For exponents lambda_1..lambda_n, the divided-difference combination of
e^{lambda x} has the power expansion whose coefficient at degree n-1+q,
times (n-1+q)!, we write b(n, q).  This quantity equals the complete
homogeneous symmetric polynomial of degree q in the exponents, so it can
be computed three independent ways:

  * definition:  sum_i a_i lambda_i^{n-1+q} with the divided-difference
    weights a_i = 1 / prod_{s != i}(lambda_i - lambda_s);
  * recurrence:  b(n+1, q) = b(n, q) + lambda_{n+1} b(n+1, q-1), seeded
    by b(n, 0) = 1 and b(1, q) = lambda_1^q;
  * closed form: sum over all non-decreasing index tuples
    i_1 <= ... <= i_q of lambda_{i_1} * ... * lambda_{i_q}.

The recurrence is the production path (O(n q), no divisions, stable for
clustered exponents).  The definition path divides by differences of
exponents and is numerically fragile once the exponents cluster; it is
retained for cross-validation at moderate spread.  The closed form is an
enumeration oracle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ResourceLimit
from .spectrum import ensure_distinct

#: Cap on how many index tuples `bnq_closed` will enumerate.
ENUMERATION_CAP = 10_000_000


@dataclass(frozen=True)
class BTable:
    """Table of b(n', q) values for all prefixes lambda_1..lambda_n' of a list.

    `values[n'-1, q]` holds b(n', q) for 1 <= n' <= n, 0 <= q <= max_q.
    """

    lambdas: tuple[complex, ...]
    max_q: int
    values: np.ndarray

    def value(self, n: int, q: int) -> complex:
        """b(n, q) with the 1-based prefix length n."""
        if not (1 <= n <= len(self.lambdas)) or not (0 <= q <= self.max_q):
            raise IndexError(f"no table entry ({n}, {q})")
        return complex(self.values[n - 1, q])


def bnq_definition(lambdas, q: int) -> complex:
    """b(n, q) via divided-difference weights: sum_i a_i lambda_i^{n-1+q}.

    Requires mutually distinct exponents.  The sum cancels heavily when
    the exponents cluster, so the partial terms are accumulated with
    error-free summation; even so, expect degraded accuracy below a
    spread of about 1e-3.
    """
    lam = ensure_distinct(lambdas)
    if q < 0:
        raise ValueError("q must be nonnegative")
    n = len(lam)
    terms = []
    for i, li in enumerate(lam):
        denom = complex(1.0)
        for s, ls in enumerate(lam):
            if s != i:
                denom *= li - ls
        terms.append(li ** (n - 1 + q) / denom)
    return complex(
        math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms)
    )


def recurrence_step(lambdas, column):
    """Advance one degree: from the b(., q-1) column to the b(., q) column.

    `column[r]` is b(r+1, q-1) over prefixes of `lambdas`; the virtual
    empty-prefix value b(0, q) = 0 seeds the first entry.
    """
    out = []
    prev = 0j
    for r, lam_r in enumerate(lambdas):
        prev = prev + lam_r * column[r]
        out.append(prev)
    return out


def bnq_recurrence(lambdas, max_q: int) -> BTable:
    """Full b table for every prefix length and 0 <= q <= max_q."""
    lam = tuple(ensure_distinct(lambdas))
    if max_q < 0:
        raise ValueError("max_q must be nonnegative")
    n = len(lam)
    values = np.empty((n, max_q + 1), dtype=complex)
    column = [1.0 + 0j] * n
    values[:, 0] = column
    for q in range(1, max_q + 1):
        column = recurrence_step(lam, column)
        values[:, q] = column
    values.setflags(write=False)
    return BTable(lambdas=lam, max_q=max_q, values=values)


def bnq_closed(lambdas, q: int, cap: int = ENUMERATION_CAP) -> complex:
    """b(n, q) by direct enumeration of non-decreasing index tuples.

    Distinctness is not required: this is a polynomial in the exponents.
    Raises ResourceLimit if the tuple count exceeds `cap`.
    """
    lam = [complex(z) for z in lambdas]
    if not lam:
        raise ValueError("need at least one exponent")
    if q < 0:
        raise ValueError("q must be nonnegative")
    if q == 0:
        return 1.0 + 0j
    n_tuples = count_terms(len(lam), q)
    if n_tuples > cap:
        raise ResourceLimit(
            f"enumeration of {n_tuples} tuples exceeds the cap {cap}"
        )
    products = []
    for idx in itertools.combinations_with_replacement(range(len(lam)), q):
        p = complex(1.0)
        for i in idx:
            p *= lam[i]
        products.append(p)
    return complex(
        math.fsum(p.real for p in products), math.fsum(p.imag for p in products)
    )


def count_terms(n: int, q: int) -> int:
    """Number of summands in the closed form: binomial(n+q-1, q).

    Exact for any size (Python integers do not overflow).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if q < 0:
        raise ValueError("q must be nonnegative")
    return math.comb(n + q - 1, q)
