"""
Quivers of perverse sheaves on the affine line.

A quiver is the datum (Psi, Phi_c, u_c, v_c) over a finite set of singular
points, with 1 - u_c v_c invertible at every point. Nodes are kept sorted by
Re(c * beta) for the frame (alpha, beta); every block formula downstream
relies on that order.
"""
import logging
from dataclasses import dataclass
from typing import NamedTuple

from .exactnum import (
    I, ONE, GaussRational, MatrixQi, cokernel_projection, det, format_gauss_literal, hstack,
    is_zero, kernel_basis, mat_inverse, rank, solve, vstack,
)
from .exceptions import (
    BadFrame, DimensionMismatch, InconsistentSystem, InternalInconsistency,
    SingularMatrix, SingularMonodromy, SubspaceNotInKernel, TieBreak,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Frame:
    """Cut direction alpha and ordering covector beta, with Re(alpha * beta) = 0."""

    alpha: GaussRational
    beta: GaussRational

    def __post_init__(self):
        if is_zero(self.alpha) or is_zero(self.beta):
            raise BadFrame("alpha and beta must both be non-zero")
        if (self.alpha * self.beta).x != 0:
            raise BadFrame(
                f"Re(alpha*beta) must vanish, got alpha={format_gauss_literal(self.alpha)}, "
                f"beta={format_gauss_literal(self.beta)}"
            )

    @property
    def orientation(self):
        return 1 if (self.alpha * self.beta).y > 0 else -1

    def key(self, point):
        return (point * self.beta).x

    def dual(self):
        """The frame (beta, -alpha) carried by Fourier transforms."""
        return Frame(self.beta, -self.alpha)

    def __str__(self):
        return f"({format_gauss_literal(self.alpha)}, {format_gauss_literal(self.beta)})"


DEFAULT_FRAME = Frame(I, ONE)


@dataclass(frozen=True)
class QuiverNode:
    c: GaussRational
    u: MatrixQi
    v: MatrixQi

    @property
    def phi_dim(self):
        return self.u.rows

    def monodromies(self):
        """(T, TT): 1 - v u on Psi and 1 - u v on Phi_c."""
        psi_identity = MatrixQi.identity(self.u.cols)
        phi_identity = MatrixQi.identity(self.u.rows)
        return psi_identity - self.v @ self.u, phi_identity - self.u @ self.v

    def check(self, psi_dim, label):
        d = self.phi_dim
        if self.u.shape != (d, psi_dim) or self.v.shape != (psi_dim, d):
            raise DimensionMismatch(
                f"{label}: u is {self.u.rows}x{self.u.cols} and v is {self.v.rows}x{self.v.cols}, "
                f"expected {d}x{psi_dim} and {psi_dim}x{d}"
            )
        psi_monodromy, phi_monodromy = self.monodromies()
        psi_singular = is_zero(det(psi_monodromy))
        phi_singular = is_zero(det(phi_monodromy))
        if psi_singular != phi_singular:
            raise InternalInconsistency(f"{label}: det(1-vu) and det(1-uv) disagree on vanishing")
        if phi_singular:
            raise SingularMonodromy(f"{label}: 1 - u v is not invertible")


def _label(index, point):
    return f"node {index} (c = {format_gauss_literal(point)})"


def _check_order(frame, points):
    keys = [frame.key(point) for point in points]
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if keys[i] == keys[j]:
                raise TieBreak(
                    f"points {format_gauss_literal(points[i])} and {format_gauss_literal(points[j])} "
                    f"are tied for beta = {format_gauss_literal(frame.beta)}"
                )
    if any(keys[i] > keys[i + 1] for i in range(len(keys) - 1)):
        raise ValueError("points must be listed in beta-order; use validate_and_order")


@dataclass(frozen=True)
class Quiver:
    frame: Frame
    psi_dim: int
    nodes: tuple

    def __post_init__(self):
        if self.psi_dim < 0:
            raise DimensionMismatch(f"psi_dim must be non-negative, got {self.psi_dim}")
        _check_order(self.frame, self.points)
        for index, node in enumerate(self.nodes):
            node.check(self.psi_dim, _label(index, node.c))

    @property
    def points(self):
        return tuple(node.c for node in self.nodes)

    @property
    def block_dims(self):
        return tuple(node.phi_dim for node in self.nodes)

    @property
    def phi_total(self):
        return sum(self.block_dims)


def validate_and_order(frame, psi_dim, nodes):
    """Check the raw datum, sort it into beta-order and return the quiver."""
    nodes = list(nodes)
    if psi_dim < 0:
        raise DimensionMismatch(f"psi_dim must be non-negative, got {psi_dim}")
    # Check every block against psi_dim
    for index, node in enumerate(nodes):
        d = node.phi_dim
        if node.u.shape != (d, psi_dim) or node.v.shape != (psi_dim, d):
            raise DimensionMismatch(
                f"{_label(index, node.c)}: u is {node.u.rows}x{node.u.cols} and v is "
                f"{node.v.rows}x{node.v.cols}, expected {d}x{psi_dim} and {psi_dim}x{d}"
            )
    # Sort into beta-order
    ordered = sorted(nodes, key=lambda node: frame.key(node.c))
    quiver = Quiver(frame, psi_dim, tuple(ordered))
    logger.debug("validated quiver: psi_dim=%d, points=%s", psi_dim,
                 [format_gauss_literal(point) for point in quiver.points])
    return quiver


class NodeMonodromy(NamedTuple):
    c: GaussRational
    psi: MatrixQi
    phi: MatrixQi


def monodromies(q):
    return [NodeMonodromy(node.c, *node.monodromies()) for node in q.nodes]


def total_monodromy_psi(q):
    """T_1 T_2 ... T_n, the rightmost factor acting first."""
    product = MatrixQi.identity(q.psi_dim)
    for node in q.nodes:
        product = product @ node.monodromies()[0]
    return product


@dataclass(frozen=True)
class LocalSystem:
    """Monodromy representation on V minus the points, one matrix T_c per point."""

    frame: Frame
    rank: int
    points: tuple
    monodromies: tuple

    def __post_init__(self):
        if len(self.points) != len(self.monodromies):
            raise DimensionMismatch(
                f"{len(self.points)} points but {len(self.monodromies)} monodromy matrices"
            )
        _check_order(self.frame, self.points)
        for index, (point, matrix) in enumerate(zip(self.points, self.monodromies)):
            if matrix.shape != (self.rank, self.rank):
                raise DimensionMismatch(
                    f"monodromy at {format_gauss_literal(point)} is {matrix.rows}x{matrix.cols}, "
                    f"expected {self.rank}x{self.rank}"
                )
            if is_zero(det(matrix)):
                raise SingularMonodromy(f"{_label(index, point)}: monodromy is not invertible")

    @classmethod
    def create(cls, frame, points, monodromies, rank=None):
        pairs = list(zip(points, monodromies))
        if len(pairs) != len(points) or len(pairs) != len(monodromies):
            raise DimensionMismatch(
                f"{len(points)} points but {len(monodromies)} monodromy matrices"
            )
        if rank is None:
            if not pairs:
                raise DimensionMismatch("rank is required for a local system without points")
            rank = pairs[0][1].rows
        # Sort points and monodromies together
        _check_order(frame, sorted(points, key=frame.key))
        pairs.sort(key=lambda pair: frame.key(pair[0]))
        return cls(frame, rank, tuple(p for p, _ in pairs), tuple(m for _, m in pairs))


def localized_quiver(ls):
    """u_c = 1 and v_c = 1 - T_c on Phi_c = Psi = k^N."""
    identity = MatrixQi.identity(ls.rank)
    nodes = [QuiverNode(c, identity, identity - t) for c, t in zip(ls.points, ls.monodromies)]
    return Quiver(ls.frame, ls.rank, tuple(nodes))


def beilinson_quiver(ls):
    """Maximal extension: Phi_c = Psi + Psi, u_c = (1; 0), v_c = (1 - T_c, -1)."""
    identity = MatrixQi.identity(ls.rank)
    inclusion = vstack(identity, MatrixQi.zeros(ls.rank, ls.rank))
    nodes = [
        QuiverNode(c, inclusion, hstack(identity - t, -identity))
        for c, t in zip(ls.points, ls.monodromies)
    ]
    return Quiver(ls.frame, ls.rank, tuple(nodes))


def skyscraper_quiver(frame, points, dims):
    if len(points) != len(dims):
        raise DimensionMismatch(f"{len(points)} points but {len(dims)} dimensions")
    if any(d < 0 for d in dims):
        raise DimensionMismatch("dimensions must be non-negative")
    nodes = [QuiverNode(c, MatrixQi.zeros(d, 0), MatrixQi.zeros(0, d)) for c, d in zip(points, dims)]
    return validate_and_order(frame, 0, nodes)


def quotient_by_phi_subspaces(q, subspaces):
    """
    Divide each Phi_c by the span of the columns of subspaces[c].

    Every subspace must lie in ker v_c, so that the sub-quiver supported on the
    points is well defined; u and v pass to the quotient through the canonical
    cokernel projection.
    """
    subspaces = list(subspaces)
    if len(subspaces) != len(q.nodes):
        raise DimensionMismatch(f"{len(subspaces)} subspaces for {len(q.nodes)} nodes")
    nodes = []
    for index, (node, subspace) in enumerate(zip(q.nodes, subspaces)):
        label = _label(index, node.c)
        if subspace.rows != node.phi_dim:
            raise DimensionMismatch(
                f"{label}: subspace lives in dimension {subspace.rows}, Phi has {node.phi_dim}"
            )
        if not (node.v @ subspace).is_zero():
            raise SubspaceNotInKernel(f"{label}: subspace is not contained in ker v")
        # Project onto Phi_c / subspace
        proj, _ = cokernel_projection(subspace)
        try:
            v = solve(proj.transpose(), node.v.transpose()).transpose()
        except InconsistentSystem as exc:
            raise InternalInconsistency(f"{label}: v does not factor through the quotient") from exc
        nodes.append(QuiverNode(node.c, proj @ node.u, v))
    return Quiver(q.frame, q.psi_dim, tuple(nodes))


class Reconstruction(NamedTuple):
    g: Quiver
    psi_iso: MatrixQi
    phi_isos: tuple


def _expect(condition, label, message):
    if not condition:
        raise InternalInconsistency(f"{label}: {message}")


def reconstruct_G(q):
    """
    Rebuild q node by node from the Beilinson-extension complex.

    At a node c with T = 1 - v u the Phi-part of the complex is

        Psi --(1, 1-T, u)--> (Psi + Psi) + Phi_c --(0, -1, v)--> Psi,

    the first map injective and the second onto. Middle cohomology is read in
    Phi_c-coordinates through the representative iota(x, y, phi) = u x - phi,
    which makes the induced u and v equal to the original ones.
    """
    m = q.psi_dim
    psi_identity = MatrixQi.identity(m)
    psi_zero = MatrixQi.zeros(m, m)
    nodes, phi_isos = [], []
    for index, node in enumerate(q.nodes):
        label = _label(index, node.c)
        d = node.phi_dim
        # Maps of the complex at c
        one_minus_t = node.v @ node.u
        first = vstack(psi_identity, one_minus_t, node.u)
        second = hstack(psi_zero, -psi_identity, node.v)
        _expect((second @ first).is_zero(), label, "the complex does not square to zero")
        _expect(rank(first) == m, label, "first map is not injective")
        _expect(rank(second) == m, label, "last map is not onto")

        # Read the middle cohomology in Phi_c-coordinates
        iota = hstack(node.u, MatrixQi.zeros(d, m), -MatrixQi.identity(d))
        _expect((iota @ first).is_zero(), label, "representative does not kill boundaries")
        cycles = kernel_basis(second)
        on_cycles = iota @ cycles
        _expect(cycles.cols - m == d and rank(on_cycles) == d, label,
                "representative is not an isomorphism on cohomology")
        try:
            section = cycles @ solve(on_cycles, MatrixQi.identity(d))
        except InconsistentSystem as exc:
            raise InternalInconsistency(f"{label}: no section of the representative") from exc

        # Induced u and v
        inclusion = vstack(psi_identity, psi_zero, MatrixQi.zeros(d, m))
        _expect((second @ inclusion).is_zero(), label, "nearby inclusion is not a cycle")
        projection = hstack(one_minus_t, -psi_identity, MatrixQi.zeros(m, d))
        nodes.append(QuiverNode(node.c, iota @ inclusion, projection @ section))
        phi_isos.append(MatrixQi.identity(d))
    return Reconstruction(Quiver(q.frame, m, tuple(nodes)), psi_identity, tuple(phi_isos))


def apply_gauge(q, psi_change, phi_changes):
    """Base change P on Psi and D_c on each Phi_c: u -> D u P^-1, v -> P v D^-1."""
    phi_changes = list(phi_changes)
    if psi_change.shape != (q.psi_dim, q.psi_dim):
        raise DimensionMismatch(f"gauge on Psi must be {q.psi_dim}x{q.psi_dim}")
    if len(phi_changes) != len(q.nodes):
        raise DimensionMismatch(f"{len(phi_changes)} gauge blocks for {len(q.nodes)} nodes")
    psi_inverse = mat_inverse(psi_change)
    nodes = []
    for index, (node, change) in enumerate(zip(q.nodes, phi_changes)):
        if change.shape != (node.phi_dim, node.phi_dim):
            raise DimensionMismatch(
                f"{_label(index, node.c)}: gauge block must be {node.phi_dim}x{node.phi_dim}"
            )
        try:
            change_inverse = mat_inverse(change)
        except SingularMatrix as exc:
            raise SingularMatrix(f"{_label(index, node.c)}: gauge block is singular") from exc
        nodes.append(QuiverNode(node.c, change @ node.u @ psi_inverse, psi_change @ node.v @ change_inverse))
    return Quiver(q.frame, q.psi_dim, tuple(nodes))


def permutation_matrix(permutation):
    """0/1 matrix sending e_i to e_permutation[i]."""
    n = len(permutation)
    if sorted(permutation) != list(range(n)):
        raise DimensionMismatch(f"{permutation!r} is not a permutation of 0..{n - 1}")
    rows = [[0] * n for _ in range(n)]
    for source, target in enumerate(permutation):
        rows[target][source] = 1
    return MatrixQi.from_rows(rows, cols=n)


def permutation_cycles(permutation):
    """Cycles as tuples, each starting at its smallest element, sorted by that element."""
    seen, cycles = set(), []
    for start in range(len(permutation)):
        if start in seen:
            continue
        cycle, current = [], start
        while current not in seen:
            seen.add(current)
            cycle.append(current)
            current = permutation[current]
        cycles.append(tuple(cycle))
    return cycles


def format_cycles(permutation):
    """Cycle notation with 1-based sheets, fixed points included: (1)(2 3)."""
    return "".join("(" + " ".join(str(i + 1) for i in cycle) + ")" for cycle in permutation_cycles(permutation))
