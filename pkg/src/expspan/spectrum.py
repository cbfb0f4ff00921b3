"""Clustered families of complex exponents.

A spectrum is a finite family of mutually distinct complex exponents
lambda_ij grouped into m clusters; cluster i carries a limit value
Lambda_i that its members drift toward.  The deflection of member (i, j)
is lambda_ij - Lambda_i, and epsilon(s) is the largest deflection
magnitude, the single knob that drives every convergence statement in
this library.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateExponent, DuplicateLimit, EmptyCluster

#: Absolute tolerance below which two complex values count as duplicates.
#: Below this, double-precision Vandermonde work downstream is meaningless.
DUPLICATE_TOL = 1e-12


def ensure_distinct(values, tol=DUPLICATE_TOL, exc=DuplicateExponent, what="exponents"):
    """Raise `exc` if any two of `values` are within `tol` of each other."""
    vals = [complex(v) for v in values]
    for a in range(len(vals)):
        for b in range(a + 1, len(vals)):
            if abs(vals[a] - vals[b]) <= tol:
                raise exc(
                    f"{what} {vals[a]} and {vals[b]} coincide within {tol:g}"
                )
    return vals


@dataclass(frozen=True)
class Cluster:
    """One cluster: a limit value and the exponents attached to it."""

    limit: complex
    exponents: tuple[complex, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.exponents)


@dataclass(frozen=True)
class ClusteredSpectrum:
    """Validated, immutable collection of clusters.

    Invariants (enforced at construction): at least one cluster, every
    cluster nonempty, all exponents mutually distinct across the whole
    spectrum, all cluster limits mutually distinct.  Exponents keep the
    user-given order; nothing is sorted.
    """

    clusters: tuple[Cluster, ...]

    def __post_init__(self):
        if not self.clusters:
            raise EmptyCluster("a spectrum needs at least one cluster")
        for c in self.clusters:
            if not c.exponents:
                raise EmptyCluster(f"cluster with limit {c.limit} has no exponents")
        ensure_distinct(
            [c.limit for c in self.clusters], exc=DuplicateLimit, what="cluster limits"
        )
        ensure_distinct(self.flat_exponents, what="exponents")

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(c.multiplicity for c in self.clusters)

    @property
    def flat_exponents(self) -> tuple[complex, ...]:
        """All exponents in spectrum order (cluster by cluster)."""
        return tuple(z for c in self.clusters for z in c.exponents)

    @property
    def index_pairs(self) -> tuple[tuple[int, int], ...]:
        """(i, j) double indices, 1-based, in spectrum order."""
        return tuple(
            (i, j)
            for i, c in enumerate(self.clusters, start=1)
            for j in range(1, c.multiplicity + 1)
        )


@dataclass(frozen=True)
class Deflection:
    """Offset of exponent (i, j) from its cluster limit; indices are 1-based."""

    cluster_index: int
    member_index: int
    value: complex


def validate_spectrum(raw_clusters) -> ClusteredSpectrum:
    """Build a spectrum from (limit, exponents) pairs, enforcing distinctness.

    Raises DuplicateExponent / DuplicateLimit / EmptyCluster on bad input.
    """
    clusters = tuple(
        Cluster(limit=complex(limit), exponents=tuple(complex(z) for z in exps))
        for limit, exps in raw_clusters
    )
    return ClusteredSpectrum(clusters)


def single_cluster(lambdas) -> ClusteredSpectrum:
    """Convenience constructor for the one-cluster case with limit 0."""
    return validate_spectrum([(0j, list(lambdas))])


def epsilon(s: ClusteredSpectrum) -> float:
    """Largest deflection magnitude max_ij |lambda_ij - Lambda_i|."""
    return max(abs(z - c.limit) for c in s.clusters for z in c.exponents)


def total_dimension(s: ClusteredSpectrum) -> int:
    """Number of exponents n = k_1 + ... + k_m."""
    return sum(s.multiplicities)


def deflections(s: ClusteredSpectrum) -> list[Deflection]:
    """All deflections lambda_ij - Lambda_i in spectrum order (1-based indices)."""
    return [
        Deflection(i, j, z - c.limit)
        for i, c in enumerate(s.clusters, start=1)
        for j, z in enumerate(c.exponents, start=1)
    ]


def from_json_dict(obj) -> ClusteredSpectrum:
    """Parse the JSON spectrum literal.

    Shape: {"clusters": [{"limit": [re, im], "exponents": [[re, im], ...]}, ...]}.
    Unknown keys are rejected.
    """
    if not isinstance(obj, dict):
        raise ValueError("spectrum literal must be a JSON object")
    unknown = set(obj) - {"clusters"}
    if unknown:
        raise ValueError(f"unknown spectrum keys: {sorted(unknown)}")
    if "clusters" not in obj or not isinstance(obj["clusters"], list):
        raise ValueError('spectrum literal needs a "clusters" array')
    raw = []
    for entry in obj["clusters"]:
        if not isinstance(entry, dict):
            raise ValueError("each cluster must be a JSON object")
        unknown = set(entry) - {"limit", "exponents"}
        if unknown:
            raise ValueError(f"unknown cluster keys: {sorted(unknown)}")
        raw.append(
            (_complex_from_pair(entry.get("limit")),
             [_complex_from_pair(p) for p in entry.get("exponents", [])])
        )
    return validate_spectrum(raw)


def to_json_dict(s: ClusteredSpectrum) -> dict:
    """Inverse of `from_json_dict`."""
    return {
        "clusters": [
            {
                "limit": [c.limit.real, c.limit.imag],
                "exponents": [[z.real, z.imag] for z in c.exponents],
            }
            for c in s.clusters
        ]
    }


def _complex_from_pair(pair) -> complex:
    if (
        not isinstance(pair, (list, tuple))
        or len(pair) != 2
        or not all(isinstance(v, (int, float)) for v in pair)
    ):
        raise ValueError(f"expected a [re, im] number pair, got {pair!r}")
    return complex(pair[0], pair[1])
