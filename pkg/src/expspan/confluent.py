"""Divided-difference combinations of exponentials and their expo-polynomial limits.

The basic fact this library is built around: with weights
a_i = 1 / prod_{s != i}(lambda_i - lambda_s), the combination
sum_i a_i e^{lambda_i x} has power expansion
x^{n-1}/(n-1)! + higher order terms, so as the exponents shrink toward 0
it converges in L2([-pi, pi]) to x^{n-1}/(n-1)!.  Shifting a whole
cluster by a limit value Lambda turns the target into
x^{j-1} e^{Lambda x}.  This module builds those combinations, their
expo-polynomial targets, and a numerically stable series form of the
difference between the two.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ResourceLimit
from .spectrum import ClusteredSpectrum, ensure_distinct, single_cluster
from .symfun import recurrence_step


@dataclass(frozen=True)
class ExpoPolynomial:
    """Finite sum of terms c * x^a * e^{mu x}, kept in canonical form.

    Canonical means: no two terms share (power, exponent), no zero
    coefficients, terms sorted by (Re mu, Im mu, power).  Build instances
    through `expopoly`, which canonicalizes.
    """

    terms: tuple[tuple[complex, int, complex], ...]

    def __add__(self, other: "ExpoPolynomial") -> "ExpoPolynomial":
        return expopoly(self.terms + other.terms)

    def __sub__(self, other: "ExpoPolynomial") -> "ExpoPolynomial":
        return expopoly(self.terms + tuple((-c, a, mu) for c, a, mu in other.terms))

    def __rmul__(self, scalar) -> "ExpoPolynomial":
        return expopoly(tuple((scalar * c, a, mu) for c, a, mu in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, a, mu in self.terms:
            factors = [f"({c:.6g})"]
            if a == 1:
                factors.append("x")
            elif a > 1:
                factors.append(f"x^{a}")
            if mu != 0:
                factors.append(f"e^({mu:.6g})x")
            parts.append("*".join(factors))
        return " + ".join(parts)


def expopoly(terms) -> ExpoPolynomial:
    """Canonicalize (coefficient, power, exponent) triples into an ExpoPolynomial."""
    acc: dict[tuple[int, complex], complex] = {}
    for c, a, mu in terms:
        a = int(a)
        if a < 0:
            raise ValueError("powers must be nonnegative")
        key = (a, complex(mu))
        acc[key] = acc.get(key, 0j) + complex(c)
    kept = [(c, a, mu) for (a, mu), c in acc.items() if c != 0]
    kept.sort(key=lambda t: (t[2].real, t[2].imag, t[1]))
    return ExpoPolynomial(tuple(kept))


@dataclass(frozen=True)
class LinearCombination:
    """Element of the span of a spectrum's exponentials.

    One coefficient per basis function e^{lambda_ij x}, in spectrum order.
    """

    spectrum: ClusteredSpectrum
    coefficients: tuple[complex, ...]

    def __post_init__(self):
        n = len(self.spectrum.flat_exponents)
        if len(self.coefficients) != n:
            raise ValueError(
                f"expected {n} coefficients, got {len(self.coefficients)}"
            )


def divided_coefficients(lambdas) -> np.ndarray:
    """Weights a_q = 1 / prod_{s != q}(lambda_q - lambda_s); (1,) for one node.

    The factors are multiplied in magnitude-sorted order to keep the
    partial products from drifting to extreme scales for larger n.
    """
    lam = ensure_distinct(lambdas)
    out = np.empty(len(lam), dtype=complex)
    for q, lam_q in enumerate(lam):
        factors = sorted(
            (lam_q - lam_s for s, lam_s in enumerate(lam) if s != q), key=abs
        )
        prod = complex(1.0)
        for f in factors:
            prod *= f
        out[q] = 1.0 / prod
    return out


def divided_difference_function(lambdas) -> LinearCombination:
    """Unscaled combination sum_i a_i e^{lambda_i x}; its limit is x^{n-1}/(n-1)!."""
    lam = ensure_distinct(lambdas)
    coeffs = divided_coefficients(lam)
    return LinearCombination(
        spectrum=single_cluster(lam), coefficients=tuple(complex(c) for c in coeffs)
    )


def single_cluster_function(lambdas, s: int) -> LinearCombination:
    """The s-th member of the quasi-basis for one cluster at limit 0.

    Returns (s-1)! * sum_{i<=s} a_i e^{lambda_i x} over the first s
    exponents, padded with zero coefficients; its limit is x^{s-1}.
    """
    lam = ensure_distinct(lambdas)
    n = len(lam)
    if not (1 <= s <= n):
        raise IndexError(f"s must be in 1..{n}, got {s}")
    head = divided_coefficients(lam[:s]) * math.factorial(s - 1)
    coeffs = tuple(complex(c) for c in head) + (0j,) * (n - s)
    return LinearCombination(spectrum=single_cluster(lam), coefficients=coeffs)


def cluster_functions(s: ClusteredSpectrum) -> dict[tuple[int, int], LinearCombination]:
    """Quasi-basis {f_ij} of a spectrum, keyed by 1-based (cluster, member).

    f_ij = (j-1)! * sum_{l<=j} a_l e^{lambda_il x} with weights from the
    first j exponents of cluster i; all other coefficients vanish.  Its
    limit is x^{j-1} e^{Lambda_i x}.
    """
    flat = s.flat_exponents
    offsets = {}
    pos = 0
    for i, c in enumerate(s.clusters, start=1):
        offsets[i] = pos
        pos += c.multiplicity
    out: dict[tuple[int, int], LinearCombination] = {}
    for i, c in enumerate(s.clusters, start=1):
        for j in range(1, c.multiplicity + 1):
            head = divided_coefficients(c.exponents[:j]) * math.factorial(j - 1)
            coeffs = [0j] * len(flat)
            for l, a_l in enumerate(head):
                coeffs[offsets[i] + l] = complex(a_l)
            out[(i, j)] = LinearCombination(spectrum=s, coefficients=tuple(coeffs))
    return out


def target_expopoly(i: int, j: int, s: ClusteredSpectrum) -> ExpoPolynomial:
    """Limit of f_ij: the single term x^{j-1} e^{Lambda_i x} (1-based indices)."""
    if not (1 <= i <= len(s.clusters)):
        raise IndexError(f"cluster index {i} out of range 1..{len(s.clusters)}")
    c = s.clusters[i - 1]
    if not (1 <= j <= c.multiplicity):
        raise IndexError(f"member index {j} out of range 1..{c.multiplicity}")
    return expopoly([(1.0, j - 1, c.limit)])


def limit_basis(s: ClusteredSpectrum) -> list[ExpoPolynomial]:
    """All targets x^{j-1} e^{Lambda_i x} in spectrum order."""
    return [target_expopoly(i, j, s) for i, j in s.index_pairs]


def exponential_basis(s: ClusteredSpectrum) -> list[ExpoPolynomial]:
    """The raw basis functions e^{lambda_ij x} in spectrum order."""
    return [expopoly([(1.0, 0, lam)]) for lam in s.flat_exponents]


def to_expopoly(lc: LinearCombination) -> ExpoPolynomial:
    """Embed a span element into the expo-polynomial representation."""
    return expopoly(
        [(c, 0, lam) for c, lam in zip(lc.coefficients, lc.spectrum.flat_exponents)]
    )


def evaluate(f: ExpoPolynomial, x: float) -> complex:
    """Pointwise value sum c * x^a * e^{mu x} by direct summation."""
    total = 0j
    for c, a, mu in f.terms:
        total += c * x**a * cmath.exp(mu * x)
    return total


def taylor_remainder(
    lambdas,
    limit: complex = 0j,
    scaled: bool = True,
    tol: float = 1e-17,
    max_terms: int = 200,
) -> ExpoPolynomial:
    """Difference between a quasi-basis function and its limit, in series form.

    For exponents lambda_1..lambda_j near `limit`, returns the
    expo-polynomial

        f - target = sum_{q>=1} scale * b(j, q) / (j-1+q)! * x^{j-1+q} e^{limit x}

    where b(j, q) is the complete homogeneous symmetric polynomial of the
    deflections and scale is (j-1)! (or 1 when `scaled` is false, pairing
    with the target x^{j-1}/(j-1)!).  The coefficients decay like the
    deflection spread, so norms of this representation do not suffer the
    catastrophic cancellation of forming f - target from the exponential
    basis directly; use it whenever the spread is small.

    The series is truncated once a certified per-term envelope falls
    below `tol` relative to the accumulated size.
    """
    lam = ensure_distinct(lambdas)
    limit = complex(limit)
    j = len(lam)
    delta = [z - limit for z in lam]
    eps_loc = max(abs(d) for d in delta)
    scale = float(math.factorial(j - 1)) if scaled else 1.0
    # |x^a e^{limit x}| norm envelope: pi^a * sqrt(2 pi) * e^{|Re limit| pi}
    weight = math.sqrt(2 * math.pi) * math.exp(abs(limit.real) * math.pi)

    terms = []
    column = [1.0 + 0j] * j
    coef_fact = scale / math.factorial(j - 1)
    acc_size = 0.0
    peak = 0.0
    for q in range(1, max_terms + 1):
        column = recurrence_step(delta, column)
        coef_fact /= j - 1 + q
        c_q = column[-1] * coef_fact
        power = j - 1 + q
        if c_q != 0:
            terms.append((c_q, power, limit))
        envelope = (
            math.comb(j + q - 1, q) * eps_loc**q * coef_fact * math.pi**power * weight
        )
        acc_size += abs(c_q) * math.pi**power * weight
        peak = max(peak, envelope)
        # envelope decays by factor pi*eps_loc/(q+1) per step once q+1 >
        # 2 pi eps_loc, so the tail is at most one more envelope
        if q + 1 > 2 * math.pi * eps_loc and envelope <= tol * (acc_size + peak):
            break
    else:
        raise ResourceLimit(
            f"remainder series needs more than {max_terms} terms "
            f"(deflection spread {eps_loc:g})"
        )
    return expopoly(terms)
