import random

from .exactnum import MatrixQi, gauss, mat_inverse, rational
from .exceptions import SingularMatrix, SingularMonodromy
from .quiver import DEFAULT_FRAME, LocalSystem, QuiverNode, validate_and_order


def random_rational(rng, bound=7):
    """p/q with |p| <= bound and 1 <= q <= bound."""
    return rational(rng.randint(-bound, bound), rng.randint(1, bound))


def random_scalar(rng, bound=7, complex_entries=False):
    if complex_entries and rng.random() < 0.25:
        return gauss(random_rational(rng, bound), random_rational(rng, bound))
    return gauss(random_rational(rng, bound))


def random_matrix(rng, rows, cols, bound=7, complex_entries=False):
    return MatrixQi.from_rows(
        [[random_scalar(rng, bound, complex_entries) for _ in range(cols)] for _ in range(rows)], cols=cols,
    )


def random_invertible(rng, n, bound=7, complex_entries=False):
    while True:
        candidate = random_matrix(rng, n, n, bound, complex_entries)
        try:
            mat_inverse(candidate)
        except SingularMatrix:
            continue
        return candidate


def random_points(rng, count, frame=DEFAULT_FRAME, bound=7):
    """Distinct points with distinct keys under the frame."""
    points, keys = [], set()
    while len(points) < count:
        point = gauss(rng.randint(-bound, bound), rng.randint(-bound, bound))
        if frame.key(point) in keys:
            continue
        keys.add(frame.key(point))
        points.append(point)
    return points


def random_quiver(seed, n=None, max_dim=4, max_points=5, bound=7, frame=DEFAULT_FRAME, complex_entries=False):
    """
    A valid quiver drawn from a seeded generator.

    n and max_dim bound the number of points and every dimension; nodes whose
    1 - u v comes out singular are redrawn.
    """
    rng = random.Random(seed)
    n = rng.randint(0, max_points) if n is None else n
    psi_dim = rng.randint(0, max_dim)
    nodes = []
    for point in random_points(rng, n, frame):
        while True:
            d = rng.randint(0, max_dim)
            node = QuiverNode(
                point,
                random_matrix(rng, d, psi_dim, bound, complex_entries),
                random_matrix(rng, psi_dim, d, bound, complex_entries),
            )
            try:
                node.check(psi_dim, 'random node')
            except SingularMonodromy:
                continue
            nodes.append(node)
            break
    rng.shuffle(nodes)
    return validate_and_order(frame, psi_dim, nodes)


def random_local_system(seed, rank=None, max_rank=4, max_points=4, bound=7, frame=DEFAULT_FRAME):
    rng = random.Random(seed)
    rank = rng.randint(1, max_rank) if rank is None else rank
    points = random_points(rng, rng.randint(0, max_points), frame)
    monodromies = [random_invertible(rng, rank, bound) for _ in points]
    return LocalSystem.create(frame, points, monodromies, rank=rank)


def random_gauge(seed, q, bound=5):
    """(P, [D_c]) invertible base changes matching the shapes of q."""
    rng = random.Random(seed)
    psi_change = random_invertible(rng, q.psi_dim, bound)
    return psi_change, [random_invertible(rng, node.phi_dim, bound) for node in q.nodes]

