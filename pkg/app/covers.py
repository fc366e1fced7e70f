"""
Quivers of branched covers f: C -> C by numerical monodromy.

Floating point is confined to this module: critical values are located and
the sheets of f(u) = z are tracked around loops in double precision, then the
critical values are snapped to Gaussian rationals and the resulting
permutations are turned into an exact quiver.
"""
import concurrent.futures
import enum
import logging
import math
from dataclasses import dataclass, field, fields
from functools import partial
from typing import NamedTuple, Optional

import numpy as np
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured
from numpy.polynomial import polynomial as P
from sympy import QQ_I, Poly, Symbol

from .exactnum import (
    I, ZERO, MatrixQi, format_gauss_literal, is_zero, rational, snap_gauss, to_complex, to_gauss,
)
from .exceptions import (
    BasepointTooClose, ContinuationAmbiguous, DegenerateCover, NoConvergence,
    PathThroughCriticalValue, SnapFailed,
)
from .quiver import (
    DEFAULT_FRAME, LocalSystem, Quiver, localized_quiver, permutation_cycles, permutation_matrix,
    quotient_by_phi_subspaces,
)
from .stokes import ExponentReport, StokesPair, exponential_components, stokes_matrices, stokes_plus_inverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ContinuationOptions:
    corrector_tolerance: float = 1e-12
    corrector_max_iterations: int = 25
    slow_corrector: int = 5
    residual_bound: float = 1e-9
    matching_ratio: float = 10.0
    snap_tolerance: float = 1e-9
    snap_max_denominator: int = 10**6
    snap_warn_denominator: int = 10**3
    initial_step: float = 0.05
    minimum_step: float = 1e-9
    workers: int = 4

    @classmethod
    def from_settings(cls, **overrides):
        """Defaults from STOKESQUIVER_CONTINUATION, then keyword overrides that are not None."""
        try:
            configured = dict(getattr(settings, "STOKESQUIVER_CONTINUATION", {}))
        except ImproperlyConfigured:
            configured = {}
        names = {f.name for f in fields(cls)}
        configured.update({k: v for k, v in overrides.items() if v is not None})
        unknown = set(configured) - names
        if unknown:
            raise TypeError(f"unknown continuation options: {sorted(unknown)}")
        return cls(**configured)


class CoverKind(enum.Enum):
    POLYNOMIAL = "polynomial"
    LAURENT = "laurent"


class SheetOrder(enum.Enum):
    LEXICOGRAPHIC = "lexicographic"
    ANGULAR = "angular"

    def key(self, z):
        if self is SheetOrder.ANGULAR:
            return (float(np.angle(z)) % (2 * math.pi), abs(z))
        return (z.real, z.imag)

    def sort(self, roots):
        return np.array(sorted(roots, key=self.key), dtype=complex)


@dataclass(frozen=True)
class CoverSpec:
    """f(u) = sum of a_k u**k over the terms; Laurent covers may use negative k."""

    kind: CoverKind
    terms: tuple
    name: str = ""

    def __post_init__(self):
        if self.kind is CoverKind.POLYNOMIAL and any(power < 0 for power, _ in self.terms):
            raise DegenerateCover("a polynomial cover cannot have negative powers")
        if all(power == 0 for power, _ in self.terms):
            raise DegenerateCover("f' vanishes identically")
        if self.generic_degree < 2:
            raise DegenerateCover(f"generic fiber has {self.generic_degree} point(s), need at least 2")

    @classmethod
    def polynomial(cls, coefficients, name=""):
        """Coefficients ascending by power."""
        return cls._build(CoverKind.POLYNOMIAL, enumerate(coefficients), name)

    @classmethod
    def laurent(cls, terms, name=""):
        return cls._build(CoverKind.LAURENT, terms, name)

    @classmethod
    def _build(cls, kind, pairs, name):
        collected = {}
        for power, coefficient in pairs:
            collected[int(power)] = collected.get(int(power), ZERO) + to_gauss(coefficient)
        terms = tuple(sorted(
            ((p, c) for p, c in collected.items() if not is_zero(c)), key=lambda term: term[0],
        ))
        if not terms:
            raise DegenerateCover("f is identically zero")
        return cls(kind, terms, name)

    @property
    def shift(self):
        return min(min(power for power, _ in self.terms), 0)

    @property
    def generic_degree(self):
        return max(max(power for power, _ in self.terms), 0) - self.shift

    @property
    def complex_terms(self):
        return tuple((power, to_complex(c)) for power, c in self.terms)

    def value(self, u):
        u = np.asarray(u, dtype=complex)
        return sum(c * u**power for power, c in self.complex_terms)

    def derivative(self, u):
        u = np.asarray(u, dtype=complex)
        return sum(power * c * u**(power - 1) for power, c in self.complex_terms if power)

    def fiber_coefficients(self, z):
        """Ascending coefficients of u**(-shift) * (f(u) - z), whose roots are the finite fiber."""
        coefficients = np.zeros(self.generic_degree + 1, dtype=complex)
        for power, c in self.complex_terms:
            coefficients[power - self.shift] += c
        coefficients[-self.shift] -= z
        return coefficients

    def exact_fiber_coefficients(self, z):
        """fiber_coefficients over Q(i) for an exact value z."""
        coefficients = [ZERO] * (self.generic_degree + 1)
        for power, c in self.terms:
            coefficients[power - self.shift] += c
        coefficients[-self.shift] -= to_gauss(z)
        return coefficients

    def exact_critical_coefficients(self):
        """Ascending coefficients of u**(-low) * f'(u) over Q(i), low the lowest power of f' or 0."""
        derivative_terms = [(power - 1, c * power) for power, c in self.terms if power]
        low = min(min(power for power, _ in derivative_terms), 0)
        coefficients = [ZERO] * (max(power for power, _ in derivative_terms) - low + 1)
        for power, c in derivative_terms:
            coefficients[power - low] += c
        return coefficients


AIRY = CoverSpec.polynomial([rational(0), rational(-3), rational(0), rational(1)], name="airy")
ELEMENTARY = CoverSpec.laurent([(-1, rational(1)), (1, rational(1))], name="elementary")
BUILTIN_COVERS = {"airy": AIRY, "elementary": ELEMENTARY}


def _correct(f, guess, z, options):
    """Newton on u -> f(u) - z for all sheets at once: (roots, iterations, converged)."""
    roots = np.array(guess, dtype=complex)
    for iteration in range(1, options.corrector_max_iterations + 1):
        delta = (f.value(roots) - z) / f.derivative(roots)
        roots = roots - delta
        if np.all(np.abs(delta) <= options.corrector_tolerance * np.maximum(1.0, np.abs(roots))):
            return roots, iteration, True
    return roots, options.corrector_max_iterations, False


def fiber_roots(f, z, options=None):
    """All finite solutions of f(u) = z, Newton-polished."""
    options = options or ContinuationOptions.from_settings()
    roots = P.polyroots(f.fiber_coefficients(z))
    if len(roots) != f.generic_degree:
        raise DegenerateCover(f"found {len(roots)} roots over {z}, expected {f.generic_degree}")
    with np.errstate(divide="ignore", invalid="ignore"):
        polished, _, _ = _correct(f, roots, z, options)
    if not np.all(np.isfinite(polished)):
        return roots
    residual = float(np.max(np.abs(f.value(polished) - z)))
    if residual > options.residual_bound:
        logger.warning("%s: fiber over %s polished only to residual %.3g", f.name or "cover", z, residual)
    return polished


class CriticalData(NamedTuple):
    points: tuple
    values: tuple
    exact: tuple
    multiplicities: tuple = ()


def _distinct(values, tolerance):
    kept = []
    for value in sorted(values, key=lambda z: (round(z.real, 9), round(z.imag, 9))):
        if all(abs(value - other) > tolerance * max(1.0, abs(other)) for other in kept):
            kept.append(value)
    return kept


def squarefree_factors(coefficients):
    """
    Exact square-free factorisation of a polynomial over Q(i) given by
    ascending coefficients: (ascending complex coefficients, multiplicity) per
    factor. Every factor has simple roots.
    """
    _, factors = Poly.from_list(list(coefficients)[::-1], Symbol("u"), domain=QQ_I).sqf_list()
    return [
        (np.array([complex(c) for c in factor.all_coeffs()[::-1]], dtype=complex), multiplicity)
        for factor, multiplicity in factors
        if factor.degree() > 0
    ]


def _polish_simple_roots(coefficients, roots, options):
    """Newton on a square-free factor; a step is kept only when it lowers the residual."""
    derivative = P.polyder(coefficients)
    roots = np.array(roots, dtype=complex)
    residual = np.abs(P.polyval(roots, coefficients))
    for _ in range(options.corrector_max_iterations):
        slope = P.polyval(roots, derivative)
        step = np.divide(P.polyval(roots, coefficients), slope, out=np.zeros_like(roots), where=slope != 0)
        candidate = roots - step
        candidate_residual = np.abs(P.polyval(candidate, coefficients))
        better = candidate_residual < residual
        roots = np.where(better, candidate, roots)
        residual = np.where(better, candidate_residual, residual)
        if not np.any(better & (np.abs(step) > options.corrector_tolerance * np.maximum(1.0, np.abs(roots)))):
            break
    return roots


def critical_data(f, options=None):
    """
    Distinct critical points (roots of f'), their distinct values, and exact
    snaps of those values. A value that does not snap is kept with exact None
    and logged.
    """
    options = options or ContinuationOptions.from_settings()
    if not any(power for power, _ in f.terms):
        raise DegenerateCover("f' vanishes identically")
    points, multiplicities = [], []
    # Roots of each square-free factor are simple
    for coefficients, multiplicity in squarefree_factors(f.exact_critical_coefficients()):
        for root in _simple_roots(coefficients, options):
            points.append(complex(root))
            multiplicities.append(multiplicity)
    residual = max((abs(complex(f.derivative(p))) for p in points), default=0.0)
    if residual > options.residual_bound:
        logger.warning("%s: critical points polished only to |f'| = %.3g", f.name or "cover", residual)
    values = _distinct(f.value(np.array(points, dtype=complex)).tolist() if points else [], options.snap_tolerance)
    exact = []
    for value in values:
        snapped = snap_gauss(value, options.snap_tolerance, options.snap_max_denominator)
        if snapped is None:
            logger.warning("%s: critical value %r does not snap to a Gaussian rational", f.name or "cover", value)
        elif max(int(snapped.x.denominator), int(snapped.y.denominator)) > options.snap_warn_denominator:
            logger.warning(
                "%s: critical value %r snapped to %s only with a large denominator",
                f.name or "cover", value, format_gauss_literal(snapped),
            )
        else:
            logger.debug("critical value %r snapped to %s", value, format_gauss_literal(snapped))
        exact.append(snapped)
    return CriticalData(
        tuple(points), tuple(complex(v) for v in values), tuple(exact), tuple(multiplicities),
    )


def _simple_roots(coefficients, options):
    return _polish_simple_roots(coefficients, P.polyroots(coefficients), options)


def fiber_points(f, value, options=None, cluster_tolerance=1e-4):
    """
    Distinct preimages of value with multiplicities.

    When value is (or snaps to) a Gaussian rational over which f - value has
    a repeated factor, the multiplicities come from the exact square-free
    factorisation. Otherwise coalesced numerical roots are clustered.
    """
    options = options or ContinuationOptions.from_settings()
    if isinstance(value, (complex, float)):
        exact = snap_gauss(complex(value), options.snap_tolerance, options.snap_max_denominator)
    else:
        exact = to_gauss(value)
    if exact is not None:
        factors = squarefree_factors(f.exact_fiber_coefficients(exact))
        if any(multiplicity > 1 for _, multiplicity in factors):
            points = [
                (complex(root), multiplicity)
                for coefficients, multiplicity in factors
                for root in _simple_roots(coefficients, options)
            ]
            return sorted(points, key=lambda point: (point[0].real, point[0].imag))
    roots = fiber_roots(f, value, options)
    clusters = []
    for root in sorted(roots.tolist(), key=lambda z: (z.real, z.imag)):
        for cluster in clusters:
            if abs(root - cluster[0]) <= cluster_tolerance * max(1.0, abs(cluster[0])):
                cluster.append(root)
                break
        else:
            clusters.append([root])
    return [(complex(np.mean(cluster)), len(cluster)) for cluster in clusters]


# Loops

@dataclass(frozen=True)
class LineSegment:
    start: complex
    end: complex

    @property
    def length(self):
        return abs(self.end - self.start)

    def point(self, t):
        return self.start + t * (self.end - self.start)

    def reversed(self):
        return LineSegment(self.end, self.start)


@dataclass(frozen=True)
class ArcSegment:
    center: complex
    radius: float
    start_angle: float
    sweep: float

    @property
    def length(self):
        return self.radius * abs(self.sweep)

    def point(self, t):
        return self.center + self.radius * complex(np.exp(1j * (self.start_angle + t * self.sweep)))

    def reversed(self):
        return ArcSegment(self.center, self.radius, self.start_angle + self.sweep, -self.sweep)


class Loop(NamedTuple):
    value: complex
    segments: tuple


@dataclass(frozen=True)
class LoopSystem:
    basepoint: complex
    radius: float
    clearance: float
    loops: tuple = field(default_factory=tuple)

    @property
    def values(self):
        return tuple(loop.value for loop in self.loops)

    def min_distance(self, values=None, samples=64):
        """Smallest sampled distance from any loop to any of the values."""
        values = self.values if values is None else values
        nearest = math.inf
        for loop in self.loops:
            for segment in loop.segments:
                for k in range(samples + 1):
                    z = segment.point(k / samples)
                    nearest = min(nearest, min(abs(z - c) for c in values))
        return nearest


def _crossing(start, end, center, radius):
    direction = end - start
    offset = start - center
    a = abs(direction) ** 2
    b = 2 * (offset.real * direction.real + offset.imag * direction.imag)
    c = abs(offset) ** 2 - radius**2
    discriminant = b * b - 4 * a * c
    if a == 0 or discriminant <= 0:
        return None
    root = math.sqrt(discriminant)
    t1, t2 = (-b - root) / (2 * a), (-b + root) / (2 * a)
    if 0 < t1 and t2 < 1:
        return t1, t2
    return None


def _approach(basepoint, target, others, radius, clearance):
    """Segments from the basepoint to the loop circle, detouring counter-clockwise around other values."""
    entry = target + radius * (basepoint - target) / abs(basepoint - target)
    hits = []
    for other in others:
        detour = min(clearance, max(radius, 0.9 * abs(basepoint - other)))
        crossing = _crossing(basepoint, entry, other, detour)
        if crossing is not None:
            hits.append((crossing, other, detour))
    segments, cursor = [], basepoint
    for (t1, t2), other, detour in sorted(hits, key=lambda hit: hit[0]):
        arrive = basepoint + t1 * (entry - basepoint)
        leave = basepoint + t2 * (entry - basepoint)
        start_angle = math.atan2((arrive - other).imag, (arrive - other).real)
        end_angle = math.atan2((leave - other).imag, (leave - other).real)
        segments.append(LineSegment(cursor, arrive))
        segments.append(ArcSegment(other, detour, start_angle, (end_angle - start_angle) % (2 * math.pi)))
        cursor = leave
    segments.append(LineSegment(cursor, entry))
    return segments, entry


def _closed_loop(basepoint, value, approach, entry, radius):
    angle = math.atan2((entry - value).imag, (entry - value).real)
    circle = ArcSegment(value, radius, angle, 2 * math.pi)
    back = [segment.reversed() for segment in reversed(approach)]
    return Loop(value, tuple(approach) + (circle,) + tuple(back))


def default_loops(values, basepoint=None, radius=None):
    """
    One counter-clockwise loop per critical value, all starting at one basepoint.

    The clearance is half the smallest distance between values (1 for a single
    value) and the default loop radius is half the clearance. The default
    basepoint sits to the right of every value, slightly above the real axis.
    """
    values = [complex(v) for v in values]
    if not values:
        raise DegenerateCover("no critical values to encircle")
    # Clearance from the closest pair of values
    if len(values) == 1:
        clearance = 1.0
    else:
        clearance = min(abs(a - b) for i, a in enumerate(values) for b in values[i + 1:]) / 2
    if clearance == 0:
        raise DegenerateCover("critical values must be distinct")
    radius = clearance / 2 if radius is None else float(radius)
    if not 0 < radius < clearance:
        raise PathThroughCriticalValue(f"loop radius {radius} must lie in (0, {clearance})")
    # Default basepoint to the right of every value
    if basepoint is None:
        basepoint = complex(max(v.real for v in values) + max(1.0, radius), clearance / 4)
    basepoint = complex(basepoint)
    for value in values:
        if abs(basepoint - value) <= radius:
            raise BasepointTooClose(
                f"basepoint {basepoint} lies within {radius} of the critical value {value}"
            )
    loops = []
    for value in values:
        others = [v for v in values if v != value]
        approach, entry = _approach(basepoint, value, others, radius, clearance)
        loops.append(_closed_loop(basepoint, value, approach, entry, radius))
    return LoopSystem(basepoint, radius, clearance, tuple(loops))


def enclosing_loop(values, basepoint):
    """A counter-clockwise loop around every value, for comparison with the monodromy at infinity."""
    values = [complex(v) for v in values]
    basepoint = complex(basepoint)
    center = complex(np.mean(values))
    reach = max(abs(v - center) for v in values)
    radius = max(abs(basepoint - center), reach + 1.0)
    entry = center + radius * (basepoint - center) / abs(basepoint - center)
    approach = [LineSegment(basepoint, entry)] if abs(entry - basepoint) > 0 else []
    return _closed_loop(basepoint, center, approach, entry, radius)


# Tracking

class TrackResult(NamedTuple):
    endpoints: np.ndarray
    max_residual: float
    steps: int
    halvings: int


def _min_separation(roots):
    if len(roots) < 2:
        return math.inf
    gaps = np.abs(roots[:, None] - roots[None, :])
    np.fill_diagonal(gaps, np.inf)
    return float(gaps.min())


def _track_segment(f, segment, roots, step_length, options, counters):
    length = segment.length
    if length == 0:
        return roots
    initial = min(1.0, step_length / length)
    minimum = options.minimum_step / length
    t, h = 0.0, initial
    while t < 1.0:
        h = min(h, 1.0 - t)
        z0, z1 = segment.point(t), segment.point(t + h)
        derivative = f.derivative(roots)
        if np.any(derivative == 0):
            raise PathThroughCriticalValue(f"path meets a critical point near z = {z0}")
        # Euler predictor, then Newton corrector
        predicted = roots + (z1 - z0) / derivative
        corrected, iterations, converged = _correct(f, predicted, z1, options)
        residual = float(np.max(np.abs(f.value(corrected) - z1)))
        separation = _min_separation(roots)
        jump = float(np.max(np.abs(corrected - roots)))
        accepted = (
            converged
            and iterations <= options.slow_corrector
            and residual <= options.residual_bound
            and _min_separation(corrected) > 10 * options.corrector_tolerance
            and jump < separation / 2
        )
        if accepted:
            roots, t = corrected, t + h
            counters["steps"] += 1
            counters["residual"] = max(counters["residual"], residual)
            if iterations <= 2:
                h = min(2 * h, initial)
            continue
        # Rejected step
        h /= 2
        counters["halvings"] += 1
        logger.debug("step halved to %.3g at z = %s (iterations=%d, residual=%.3g)", h * length, z0, iterations, residual)
        if h < minimum:
            if _min_separation(roots) <= 10 * options.corrector_tolerance:
                raise PathThroughCriticalValue(f"sheets collide near z = {z0}")
            raise NoConvergence(f"step size fell below {options.minimum_step} near z = {z0}")
    return roots


def track_loop(f, loop, start, radius, options=None):
    """Carry the start roots once around loop; endpoint i is where sheet i arrives."""
    options = options or ContinuationOptions.from_settings()
    counters = {"steps": 0, "halvings": 0, "residual": 0.0}
    roots = np.array(start, dtype=complex)
    step_length = options.initial_step * radius
    for segment in loop.segments:
        roots = _track_segment(f, segment, roots, step_length, options, counters)
    return TrackResult(roots, counters["residual"], counters["steps"], counters["halvings"])


def match_endpoints(start, endpoints, ratio):
    """sigma[i] = j when the sheet starting at start[i] ends at start[j]."""
    permutation = []
    for index, end in enumerate(endpoints):
        distances = np.abs(np.asarray(start) - end)
        order = np.argsort(distances)
        nearest = distances[order[0]]
        if len(order) > 1 and distances[order[1]] < ratio * nearest:
            raise ContinuationAmbiguous(
                f"sheet {index + 1} ends between two start roots (separation ratio "
                f"{distances[order[1]] / max(nearest, 1e-300):.3g} < {ratio})"
            )
        permutation.append(int(order[0]))
    if sorted(permutation) != list(range(len(start))):
        raise ContinuationAmbiguous(f"endpoint matching {permutation} is not a permutation")
    return tuple(permutation)


def compose_permutations(first, second):
    """Follow first, then second."""
    return tuple(second[first[i]] for i in range(len(first)))


def cycle_type(permutation):
    return sorted(len(cycle) for cycle in permutation_cycles(permutation))


@dataclass(frozen=True)
class CoverMonodromy:
    cover: CoverSpec
    loops: LoopSystem
    critical_values: tuple
    exact_values: tuple
    permutations: tuple
    sheet_labels: tuple
    fibers: tuple
    max_residual: float


def monodromy_permutations(f, loops, options=None, sheet_order=SheetOrder.LEXICOGRAPHIC):
    """
    Track every sheet around every loop and read off the permutations.

    Loops are tracked in a thread pool; results keep the order of loops.values.
    Each permutation must have one cycle per distinct finite preimage of its
    critical value, with cycle lengths equal to the multiplicities.
    """
    options = options or ContinuationOptions.from_settings()
    start = sheet_order.sort(fiber_roots(f, loops.basepoint, options))
    if loops.min_distance() < loops.radius * (1 - 1e-9):
        raise PathThroughCriticalValue("a loop passes closer to a critical value than its radius")
    track = partial(track_loop, f, start=start, radius=loops.radius, options=options)
    with concurrent.futures.ThreadPoolExecutor(max_workers=options.workers) as executor:
        results = list(executor.map(track, loops.loops))

    permutations, fibers, exact = [], [], []
    # Check each permutation against the fiber of its value
    for loop, result in zip(loops.loops, results):
        permutation = match_endpoints(start, result.endpoints, options.matching_ratio)
        fiber = fiber_points(f, loop.value, options)
        if cycle_type(permutation) != sorted(multiplicity for _, multiplicity in fiber):
            raise ContinuationAmbiguous(
                f"monodromy around {loop.value} has cycle type {cycle_type(permutation)} but the fiber "
                f"has multiplicities {sorted(m for _, m in fiber)}"
            )
        logger.debug("loop around %s: permutation %s after %d steps, %d halvings",
                     loop.value, permutation, result.steps, result.halvings)
        permutations.append(permutation)
        fibers.append(tuple(fiber))
        exact.append(snap_gauss(loop.value, options.snap_tolerance, options.snap_max_denominator))
    return CoverMonodromy(
        cover=f,
        loops=loops,
        critical_values=loops.values,
        exact_values=tuple(exact),
        permutations=tuple(permutations),
        sheet_labels=tuple(complex(z) for z in start),
        fibers=tuple(fibers),
        max_residual=max((result.max_residual for result in results), default=0.0),
    )


def cover_monodromy(f, options=None, sheet_order=SheetOrder.LEXICOGRAPHIC, basepoint=None, radius=None):
    options = options or ContinuationOptions.from_settings()
    data = critical_data(f, options)
    loops = default_loops(data.values, basepoint=basepoint, radius=radius)
    return monodromy_permutations(f, loops, options, sheet_order)


def cycle_indicators(permutation):
    """Columns are the indicator vectors of the cycles; they span Fix of the permutation matrix."""
    n = len(permutation)
    columns = [[1 if i in cycle else 0 for i in range(n)] for cycle in permutation_cycles(permutation)]
    return MatrixQi.from_columns(columns, rows=n)


def quiver_from_permutations(frame, points, permutations):
    """
    Quiver of the direct image: the localized quiver of the sheet permutations
    divided by the skyscraper sub-quiver spanned by the cycles at each point.
    """
    permutations = [tuple(p) for p in permutations]
    if not permutations:
        raise DegenerateCover("no critical values")
    system = LocalSystem.create(
        frame, list(points), [permutation_matrix(p) for p in permutations], rank=len(permutations[0]),
    )
    by_point = dict(zip(points, permutations))
    subspaces = [cycle_indicators(by_point[c]) for c in system.points]
    return quotient_by_phi_subspaces(localized_quiver(system), subspaces)


def _exact_points(monodromy, exact_values):
    if exact_values is None:
        missing = [v for v, e in zip(monodromy.critical_values, monodromy.exact_values) if e is None]
        if missing:
            raise SnapFailed(f"critical values {missing} have no exact Gaussian rational snap")
        return list(monodromy.exact_values)
    points = []
    for value in monodromy.critical_values:
        candidates = [c for c in exact_values if abs(to_complex(c) - value) <= 1e-6 * max(1.0, abs(value))]
        if len(candidates) != 1:
            raise SnapFailed(f"critical value {value} matches {len(candidates)} supplied exact values")
        points.append(candidates[0])
    return points


def quiver_from_cover(f, frame=DEFAULT_FRAME, options=None, sheet_order=SheetOrder.LEXICOGRAPHIC,
                      basepoint=None, radius=None, exact_values=None):
    options = options or ContinuationOptions.from_settings()
    monodromy = cover_monodromy(f, options, sheet_order, basepoint, radius)
    points = _exact_points(monodromy, exact_values)
    return quiver_from_permutations(frame, points, monodromy.permutations)


# Sector reports of the built-in covers

AIRY_SUBSTITUTION = (I * rational(1, 3), 3)


@dataclass(frozen=True)
class SectorReport:
    example: str
    quiver: Quiver
    stokes: StokesPair
    sectors: tuple
    exponents: ExponentReport
    pulled_back: Optional[tuple]


def ramified_sector_multipliers(example, options=None):
    """
    Sector-indexed Stokes multipliers of a built-in cover.

    airy: six sectors, S_plus^-1 on the odd ones and S_minus on the even ones,
    with exponents pulled back along w = i v**3 / 3. elementary: S_minus on the
    ray l+ and S_plus on l-.
    """
    if example not in BUILTIN_COVERS:
        raise ValueError(f"unknown example {example!r}; expected one of {sorted(BUILTIN_COVERS)}")
    quiver = quiver_from_cover(BUILTIN_COVERS[example], DEFAULT_FRAME, options, SheetOrder.ANGULAR)
    pair = stokes_matrices(quiver)
    exponents = exponential_components(quiver)
    if example == "airy":
        inverse = stokes_plus_inverse(quiver)
        sectors = tuple((f"S{k}", inverse if k % 2 else pair.S_minus) for k in range(1, 7))
        pulled_back = exponents.substituted(*AIRY_SUBSTITUTION)
    else:
        sectors = (("l+", pair.S_minus), ("l-", pair.S_plus))
        pulled_back = None
    return SectorReport(example, quiver, pair, sectors, exponents, pulled_back)

