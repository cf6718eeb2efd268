"""Brute-force reference for U and the Levi-Civita property checkers.

The oracle solves the defining linear condition

    2 g(U(X, Y), Z) = g(X, [Z, Y]_m) + g([Z, X]_m, Y)   for all Z in m

coordinate by coordinate, which is immediate because the Gram matrix is
diagonal on the m basis. It never touches the closed-form evaluation path,
so agreement between the two is a genuine check of the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chevalley import StructureConstants, build_m_basis, killing_gram, m_bracket_table
from .connection import ConnectionTensor, u_bilinear
from .metric import MetricGram, MetricSpec, build_metric
from .rootsys import RootSystem, negate

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification pass."""

    check_name: str
    max_residual: float
    threshold: float
    passed: bool
    witness: tuple | None = None

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "max_residual": self.max_residual,
            "threshold": self.threshold,
            "passed": self.passed,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def _report(name: str, residual: float, threshold: float, witness) -> CheckReport:
    return CheckReport(
        check_name=name,
        max_residual=float(residual),
        threshold=float(threshold),
        passed=bool(residual <= threshold),
        witness=witness,
    )


def u_oracle(
    rs: RootSystem,
    sc: StructureConstants,
    gram: MetricGram,
    x: np.ndarray,
    y: np.ndarray,
) -> np.ndarray:
    """U(x, y) solved directly from the defining condition."""
    mb = gram.mbasis
    table = m_bracket_table(sc, mb)
    d = gram.diagonal
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    # coordinate k: (g(x, [e_k, y]_m) + g([e_k, x]_m, y)) / (2 diag_k)
    gx = np.einsum("kjm,j,m->k", table, y, x * d)
    gy = np.einsum("kjm,j,m->k", table, x, y * d)
    return (gx + gy) / (2.0 * d)


def check_oracle_equivalence(
    rs: RootSystem,
    sc: StructureConstants,
    spec: MetricSpec,
    tolerance: float = DEFAULT_TOLERANCE,
) -> CheckReport:
    """Compare the closed-form U with the oracle over all basis pairs."""
    mb = build_m_basis(rs)
    gram = build_metric(rs, killing_gram(rs, sc), spec)
    worst, witness = 0.0, None
    for i in range(mb.dim):
        ei = mb.basis_vector(i)
        for j in range(mb.dim):
            ej = mb.basis_vector(j)
            diff = np.abs(u_bilinear(sc, mb, spec, ei, ej) - u_oracle(rs, sc, gram, ei, ej))
            k = int(np.argmax(diff))
            if diff[k] > worst:
                worst, witness = float(diff[k]), (i, j, k)
    return _report("oracle-equivalence", worst, tolerance, witness)


def check_torsion(
    tensor: ConnectionTensor,
    sc: StructureConstants,
    tolerance: float = DEFAULT_TOLERANCE,
) -> CheckReport:
    """gamma[i,j,:] - gamma[j,i,:] must equal the coordinates of [e_i, e_j]_m."""
    table = m_bracket_table(sc, tensor.mbasis)
    res = np.abs(tensor.gamma - tensor.gamma.transpose(1, 0, 2) - table)
    witness = tuple(int(v) for v in np.unravel_index(np.argmax(res), res.shape))
    return _report("torsion", float(res.max()), tolerance, witness)


def check_metric_compat(
    tensor: ConnectionTensor,
    gram: MetricGram,
    tolerance: float = DEFAULT_TOLERANCE,
) -> CheckReport:
    """g(nabla_{e_i} e_j, e_k) + g(e_j, nabla_{e_i} e_k) must vanish."""
    weighted = tensor.gamma * gram.diagonal[None, None, :]
    res = np.abs(weighted + weighted.transpose(0, 2, 1))
    witness = tuple(int(v) for v in np.unravel_index(np.argmax(res), res.shape))
    return _report("metric-compatibility", float(res.max()), tolerance, witness)


def check_lemma2(rs: RootSystem) -> CheckReport:
    """Each ordered root pair (a, b), a != +-b, admits exactly one canonical form.

    Counts, among the four candidates (a,b), (b,a), (-a,-b), (-b,-a), those
    satisfying |first| < second; the check passes only if every count is
    exactly one.
    """
    worst, witness = 0, None
    for a in rs.all_roots:
        for b in rs.all_roots:
            if a == b or a == negate(b):
                continue
            count = 0
            for a1, a2 in ((a, b), (b, a), (negate(a), negate(b)), (negate(b), negate(a))):
                if rs.is_positive(a2):
                    aa1 = a1 if rs.is_positive(a1) else negate(a1)
                    if aa1 < a2:
                        count += 1
            if abs(count - 1) > worst:
                worst, witness = abs(count - 1), (a, b)
    return _report("lemma2-uniqueness", float(worst), 0.0, witness)
