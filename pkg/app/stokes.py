"""
Stokes multipliers, smash and Fourier quivers.

Blocks are indexed by the beta-order of the quiver: block (i, j) is a map
Phi_{c_j} -> Phi_{c_i}.
"""
import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .exactnum import (
    ZERO, GaussRational, MatrixQi, block_matrix, format_gauss_literal, hstack, is_zero, vstack,
)
from .exceptions import NotSinglePointAtZero
from .quiver import Quiver, QuiverNode, total_monodromy_psi

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StokesPair:
    order: tuple
    block_dims: tuple
    S_plus: MatrixQi
    S_minus: MatrixQi
    U_sigma: MatrixQi
    V_sigma: MatrixQi

    def _offsets(self):
        offsets = [0]
        for d in self.block_dims:
            offsets.append(offsets[-1] + d)
        return offsets

    def block(self, matrix, i, j):
        """Block (i, j) of S_plus, S_minus or any matrix on Phi_Sigma."""
        offsets = self._offsets()
        return matrix.submatrix(offsets[i], offsets[i + 1], offsets[j], offsets[j + 1])


def _square(blocks_by_index, n):
    if n == 0:
        return MatrixQi.zeros(0, 0)
    return block_matrix([[blocks_by_index(i, j) for j in range(n)] for i in range(n)])


def _sigma_maps(q):
    """U_i = u_i T_{i+1} ... T_n and V_i = v_i, stacked over Phi_Sigma."""
    suffix = MatrixQi.identity(q.psi_dim)
    upper = []
    for node in reversed(q.nodes):
        upper.append(node.u @ suffix)
        suffix = node.monodromies()[0] @ suffix
    upper.reverse()
    if not q.nodes:
        return MatrixQi.zeros(0, q.psi_dim), MatrixQi.zeros(q.psi_dim, 0)
    return vstack(*upper), hstack(*(node.v for node in q.nodes))


def stokes_matrices(q):
    nodes = q.nodes
    n = len(nodes)

    # Upper unitriangular
    def plus(i, j):
        if i == j:
            return MatrixQi.identity(nodes[i].phi_dim)
        if i < j:
            return nodes[i].u @ nodes[j].v
        return MatrixQi.zeros(nodes[i].phi_dim, nodes[j].phi_dim)

    # Lower triangular with the Phi monodromies on the diagonal
    def minus(i, j):
        if i == j:
            return nodes[i].monodromies()[1]
        if i > j:
            return -(nodes[i].u @ nodes[j].v)
        return MatrixQi.zeros(nodes[i].phi_dim, nodes[j].phi_dim)

    U_sigma, V_sigma = _sigma_maps(q)
    return StokesPair(
        order=q.points,
        block_dims=q.block_dims,
        S_plus=_square(plus, n),
        S_minus=_square(minus, n),
        U_sigma=U_sigma,
        V_sigma=V_sigma,
    )


def stokes_plus_inverse(q):
    """Closed form: block (i, j) is -u_i T_{i+1} ... T_{j-1} v_j above the diagonal."""
    nodes = q.nodes
    n = len(nodes)
    psi_monodromies = [node.monodromies()[0] for node in nodes]

    def block(i, j):
        if i == j:
            return MatrixQi.identity(nodes[i].phi_dim)
        if i > j:
            return MatrixQi.zeros(nodes[i].phi_dim, nodes[j].phi_dim)
        product = nodes[i].u
        for k in range(i + 1, j):
            product = product @ psi_monodromies[k]
        return -(product @ nodes[j].v)

    return _square(block, n)


def total_monodromy_phi(q):
    """1 - U_Sigma V_Sigma, the monodromy of Phi_Sigma around infinity."""
    U_sigma, V_sigma = _sigma_maps(q)
    return MatrixQi.identity(U_sigma.rows) - U_sigma @ V_sigma


class IdentityCheck(NamedTuple):
    holds: bool
    mismatch: Optional[tuple]


def _compare(left, right):
    if left.shape != right.shape:
        return IdentityCheck(False, ("shape", left.shape, right.shape))
    for index, (a, b) in enumerate(zip(left.entries, right.entries)):
        if not is_zero(a - b):
            return IdentityCheck(False, divmod(index, left.cols))
    return IdentityCheck(True, None)


class TheoremReport(NamedTuple):
    phi: IdentityCheck
    psi: IdentityCheck

    @property
    def passed(self):
        return self.phi.holds and self.psi.holds


def verify_theorem_identity(q):
    """
    Check S_plus^-1 S_minus = 1 - U_Sigma V_Sigma on Phi_Sigma and
    1 - V_Sigma U_Sigma = T_1 ... T_n on Psi.

    A failing side carries the (row, column) of its first differing entry.
    """
    pair = stokes_matrices(q)
    phi = _compare(stokes_plus_inverse(q) @ pair.S_minus, total_monodromy_phi(q))
    psi_side = MatrixQi.identity(q.psi_dim) - pair.V_sigma @ pair.U_sigma
    psi = _compare(psi_side, total_monodromy_psi(q))
    report = TheoremReport(phi, psi)
    if not report.passed:
        logger.error("Stokes identities fail: phi=%s psi=%s", phi, psi)
    return report


def smash_quiver(q):
    U_sigma, V_sigma = _sigma_maps(q)
    return Quiver(q.frame, q.psi_dim, (QuiverNode(ZERO, U_sigma, V_sigma),))


def fourier_sato_point(q):
    if len(q.nodes) != 1 or not is_zero(q.nodes[0].c):
        raise NotSinglePointAtZero(
            f"expected a single node at 0, got points {[format_gauss_literal(c) for c in q.points]}"
        )
    node = q.nodes[0]
    return Quiver(q.frame.dual(), node.phi_dim, (QuiverNode(ZERO, node.v, node.u),))


def fourier_quiver(q):
    """Quiver of the Fourier transform: (Phi_Sigma, Psi, V_Sigma, U_Sigma) at 0, frame (beta, -alpha)."""
    U_sigma, V_sigma = _sigma_maps(q)
    return Quiver(q.frame.dual(), U_sigma.rows, (QuiverNode(ZERO, V_sigma, U_sigma),))


class ExponentialComponent(NamedTuple):
    c: GaussRational
    multiplicity: int


class PulledBackComponent(NamedTuple):
    coefficient: GaussRational
    power: int
    multiplicity: int


@dataclass(frozen=True)
class ExponentReport:
    components: tuple

    def substituted(self, coefficient, power):
        """Exponents c * g(v) after w = g(v) = coefficient * v**power."""
        return tuple(
            PulledBackComponent(component.c * coefficient, power, component.multiplicity)
            for component in self.components
        )


def exponential_components(q):
    return ExponentReport(tuple(
        ExponentialComponent(node.c, node.phi_dim) for node in q.nodes if node.phi_dim > 0
    ))
