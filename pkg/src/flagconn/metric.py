"""Invariant Riemannian metrics as diagonal Gram matrices on the m basis.

The metric is a positive weight c_a on each 2-dimensional block m^a against
the negative of the Killing form. Because the blocks are mutually
non-equivalent isotropy modules, every invariant metric is of this diagonal
form; no generality is lost.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chevalley import KillingForm, build_m_basis
from .errors import ConfigurationError, DimensionError
from .rootsys import Coords, RootSystem


@dataclass(frozen=True)
class MetricSpec:
    """Positive coefficient c_a per positive root a."""

    coeffs: dict[Coords, float]

    @classmethod
    def normal(cls, rs: RootSystem, value: float = 1.0) -> "MetricSpec":
        """All coefficients equal: the normal (Killing) metric."""
        return cls({alpha: float(value) for alpha in rs.positive_roots})

    @classmethod
    def from_values(cls, rs: RootSystem, values) -> "MetricSpec":
        """Coefficients listed in the order of rs.positive_roots."""
        values = list(values)
        if len(values) != len(rs.positive_roots):
            raise ConfigurationError(
                f"expected {len(rs.positive_roots)} coefficients, got {len(values)}"
            )
        return cls({a: float(v) for a, v in zip(rs.positive_roots, values)})

    def c(self, alpha: Coords) -> float:
        return self.coeffs[alpha]

    def validate(self, rs: RootSystem) -> None:
        for alpha in rs.positive_roots:
            if alpha not in self.coeffs:
                raise ConfigurationError(f"missing metric coefficient for root {alpha}")
            if not self.coeffs[alpha] > 0:
                raise ConfigurationError(
                    f"metric coefficient for root {alpha} must be positive, "
                    f"got {self.coeffs[alpha]}"
                )


@dataclass(frozen=True, eq=False)
class MetricGram:
    """Diagonal Gram matrix of the metric over the m basis."""

    mbasis: object
    diagonal: np.ndarray


def build_metric(rs: RootSystem, killing: KillingForm, spec: MetricSpec) -> MetricGram:
    """Gram matrix with entry c_a * (-B)(e, e) at each basis slot of m^a."""
    spec.validate(rs)
    mb = build_m_basis(rs)
    diag = np.zeros(mb.dim)
    for k, alpha in enumerate(rs.positive_roots):
        # (-B)(U_a, U_a) = (-B)(V_a, V_a) = 2 B(E_a, E_{-a})
        block = 2.0 * killing.e_pair(alpha)
        diag[2 * k] = diag[2 * k + 1] = spec.c(alpha) * block
    return MetricGram(mbasis=mb, diagonal=diag)


def inner(gram: MetricGram, x: np.ndarray, y: np.ndarray) -> float:
    """Evaluate the metric on two m coordinate vectors."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != gram.diagonal.shape or y.shape != gram.diagonal.shape:
        raise DimensionError("vector length does not match the Gram matrix")
    return float(np.sum(gram.diagonal * x * y))
