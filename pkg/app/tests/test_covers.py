import numpy as np
from django.test import SimpleTestCase, override_settings

from app.covers import (
    AIRY, ELEMENTARY, ContinuationOptions, CoverKind, CoverSpec, SheetOrder, compose_permutations,
    cover_monodromy, critical_data, cycle_indicators, cycle_type, default_loops, enclosing_loop,
    fiber_points, fiber_roots, match_endpoints, monodromy_permutations, quiver_from_cover,
    quiver_from_permutations, ramified_sector_multipliers, track_loop,
)
from app.exactnum import ONE, ZERO, MatrixQi, gauss, rational
from app.exceptions import (
    BasepointTooClose, ContinuationAmbiguous, DegenerateCover, PathThroughCriticalValue, SnapFailed,
)
from app.quiver import DEFAULT_FRAME, apply_gauge
from app.stokes import stokes_matrices, stokes_plus_inverse

from .helpers import load_quiver, matrix


def by_value(monodromy):
    return {complex(round(v.real), round(v.imag)): p for v, p in zip(monodromy.critical_values, monodromy.permutations)}


class CoverSpecTests(SimpleTestCase):
    def test_builtin_degrees(self):
        self.assertEqual(AIRY.kind, CoverKind.POLYNOMIAL)
        self.assertEqual(AIRY.generic_degree, 3)
        self.assertEqual(ELEMENTARY.shift, -1)
        self.assertEqual(ELEMENTARY.generic_degree, 2)

    def test_fiber_coefficients(self):
        np.testing.assert_allclose(ELEMENTARY.fiber_coefficients(0), [1, 0, 1])
        np.testing.assert_allclose(AIRY.fiber_coefficients(2), [-2, -3, 0, 1])

    def test_zero_terms_are_dropped(self):
        f = CoverSpec.polynomial([rational(1), 0, 0, rational(1), 0])
        self.assertEqual(f.terms, ((0, gauss(1)), (3, gauss(1))))

    def test_degenerate(self):
        for coefficients in ([5], [1, 1], [0, 0]):
            with self.subTest(coefficients=coefficients), self.assertRaises(DegenerateCover):
                CoverSpec.polynomial(coefficients)
        with self.assertRaises(DegenerateCover):
            CoverSpec.laurent([(-1, 1)])

    def test_fiber_roots(self):
        roots = fiber_roots(AIRY, 0)
        self.assertEqual(len(roots), 3)
        np.testing.assert_allclose(np.abs(AIRY.value(roots)), 0, atol=1e-12)


class CriticalDataTests(SimpleTestCase):
    def test_airy(self):
        data = critical_data(AIRY)
        self.assertEqual(data.exact, (gauss(-2), gauss(2)))
        np.testing.assert_allclose(sorted(p.real for p in data.points), [-1, 1], atol=1e-12)

    def test_elementary(self):
        self.assertEqual(critical_data(ELEMENTARY).exact, (gauss(-2), gauss(2)))

    def test_square(self):
        data = critical_data(CoverSpec.polynomial([0, 0, 1]))
        self.assertEqual(data.exact, (ZERO,))

    def test_repeated_critical_point(self):
        quintic = CoverSpec.polynomial([-1, 5, -10, 10, -5, 1])
        data = critical_data(quintic)
        self.assertEqual(data.exact, (ZERO,))
        self.assertEqual(data.multiplicities, (4,))
        np.testing.assert_allclose(data.points, [1], atol=1e-12)
        self.assertLess(abs(complex(quintic.derivative(data.points[0]))), 1e-12)
        self.assertEqual([m for _, m in fiber_points(quintic, data.values[0])], [5])

    def test_irrational_value_warns(self):
        with self.assertLogs('app.covers', level='WARNING'):
            critical_data(CoverSpec.polynomial([0, -1, 0, 1]))

    def test_unsnappable_value_is_kept(self):
        options = ContinuationOptions(snap_max_denominator=100)
        with self.assertLogs('app.covers', level='WARNING'):
            data = critical_data(CoverSpec.polynomial([0, -1, 0, 1]), options)
        self.assertEqual(data.exact, (None, None))

    def test_fiber_multiplicities(self):
        fiber = fiber_points(AIRY, 2)
        self.assertEqual([m for _, m in fiber], [2, 1])
        self.assertAlmostEqual(fiber[0][0], -1, places=4)
        self.assertAlmostEqual(fiber[1][0], 2, places=9)


class LoopTests(SimpleTestCase):
    def test_two_values(self):
        loops = default_loops([-2, 2])
        self.assertEqual(loops.basepoint, complex(3, 0.5))
        self.assertEqual(loops.radius, 1)
        self.assertEqual(loops.clearance, 2)
        self.assertGreaterEqual(loops.min_distance(), loops.radius * (1 - 1e-9))

    def test_single_value(self):
        loops = default_loops([0])
        self.assertEqual(loops.basepoint, complex(1, 0.25))
        self.assertEqual(loops.radius, 0.5)

    def test_loops_are_closed(self):
        for loop in default_loops([-2, 2]).loops:
            self.assertAlmostEqual(loop.segments[0].point(0), complex(3, 0.5))
            self.assertAlmostEqual(loop.segments[-1].point(1), complex(3, 0.5))

    def test_far_loop_detours_above(self):
        loops = default_loops([-2, 2])
        far = next(loop for loop in loops.loops if loop.value == -2)
        detour = next(s for s in far.segments if hasattr(s, 'center') and s.center == 2)
        self.assertGreater(detour.point(0.5).imag, 0)
        self.assertGreater(detour.sweep, 0)

    def test_basepoint_too_close(self):
        with self.assertRaises(BasepointTooClose):
            default_loops([-2, 2], basepoint=2.1)

    def test_radius_must_stay_below_clearance(self):
        with self.assertRaises(PathThroughCriticalValue):
            default_loops([-2, 2], radius=2)
        with self.assertRaises(DegenerateCover):
            default_loops([])


class PermutationTests(SimpleTestCase):
    def test_match_endpoints(self):
        self.assertEqual(match_endpoints([0, 1, 5], [1.001, 5, 0], 10.0), (1, 2, 0))

    def test_ambiguous_endpoint(self):
        with self.assertRaises(ContinuationAmbiguous):
            match_endpoints([0, 1], [0.5, 1], 10.0)

    def test_compose_and_cycle_type(self):
        self.assertEqual(compose_permutations((1, 0, 2), (0, 2, 1)), (2, 0, 1))
        self.assertEqual(cycle_type((2, 0, 1)), [3])
        self.assertEqual(cycle_type((0, 1)), [1, 1])

    def test_cycle_indicators(self):
        self.assertEqual(cycle_indicators((0, 2, 1)), matrix([[1, 0], [0, 1], [0, 1]]))

    def test_identity_permutation_gives_empty_block(self):
        q = quiver_from_permutations(DEFAULT_FRAME, [ZERO, ONE], [(1, 0), (0, 1)])
        self.assertEqual(q.block_dims, (1, 0))
        self.assertEqual(q.nodes[0].u, matrix([[-1, 1]]))


class AiryMonodromyTests(SimpleTestCase):
    def test_angular_numbering(self):
        monodromy = cover_monodromy(AIRY, sheet_order=SheetOrder.ANGULAR)
        permutations = by_value(monodromy)
        self.assertEqual(permutations[2], (0, 2, 1))
        self.assertEqual(permutations[-2], (2, 1, 0))
        self.assertEqual(monodromy.exact_values, (gauss(-2), gauss(2)))
        self.assertLess(monodromy.max_residual, 1e-9)

    def test_lexicographic_numbering(self):
        permutations = by_value(cover_monodromy(AIRY))
        self.assertEqual(permutations[2], (1, 0, 2))
        self.assertEqual(permutations[-2], (0, 2, 1))

    def test_stable_under_smaller_steps_and_radius(self):
        reference = cover_monodromy(AIRY).permutations
        finer = ContinuationOptions.from_settings(initial_step=0.025)
        self.assertEqual(cover_monodromy(AIRY, options=finer).permutations, reference)
        self.assertEqual(cover_monodromy(AIRY, radius=0.5).permutations, reference)

    def test_loop_around_everything(self):
        monodromy = cover_monodromy(AIRY)
        start = SheetOrder.LEXICOGRAPHIC.sort(fiber_roots(AIRY, monodromy.loops.basepoint))
        loop = enclosing_loop(monodromy.critical_values, monodromy.loops.basepoint)
        result = track_loop(AIRY, loop, start, monodromy.loops.radius)
        around_all = match_endpoints(start, result.endpoints, 10.0)
        self.assertEqual(cycle_type(around_all), [3])
        first, second = monodromy.permutations
        self.assertEqual(cycle_type(compose_permutations(first, second)), [3])

    def test_quiver_matches_reference_up_to_sign(self):
        q = quiver_from_cover(AIRY, sheet_order=SheetOrder.ANGULAR)
        reference = load_quiver('airy.json')
        sign = [matrix([[-1]]), matrix([[-1]])]
        self.assertEqual(q, apply_gauge(reference, MatrixQi.identity(3), sign))
        pair = stokes_matrices(q)
        self.assertEqual(pair.S_plus, matrix([[1, 1], [0, 1]]))
        self.assertEqual(pair.S_minus, matrix([[-1, 0], [-1, -1]]))

    def test_lexicographic_quiver(self):
        q = quiver_from_cover(AIRY)
        pair = stokes_matrices(q)
        self.assertEqual(pair.S_plus, matrix([[1, -1], [0, 1]]))
        self.assertEqual(pair.S_minus, matrix([[-1, 0], [1, -1]]))
        self.assertEqual(pair.S_plus[0, 1] * pair.S_minus[1, 0], gauss(-1))
        self.assertEqual(stokes_plus_inverse(q)[0, 1] * pair.S_minus[1, 0], gauss(1))

    def test_supplied_exact_values(self):
        q = quiver_from_cover(AIRY, exact_values=[gauss(2), gauss(-2)])
        self.assertEqual(q.points, (gauss(-2), gauss(2)))
        with self.assertRaises(SnapFailed):
            quiver_from_cover(AIRY, exact_values=[gauss(2)])

    def test_unsnappable_values_fail(self):
        options = ContinuationOptions(snap_max_denominator=100)
        with self.assertLogs('app.covers', level='WARNING'), self.assertRaises(SnapFailed):
            quiver_from_cover(CoverSpec.polynomial([0, -1, 0, 1]), options=options)


class ElementaryMonodromyTests(SimpleTestCase):
    def test_transpositions(self):
        monodromy = cover_monodromy(ELEMENTARY)
        self.assertEqual(monodromy.permutations, ((1, 0), (1, 0)))
        self.assertEqual([m for _, m in monodromy.fibers[0]], [2])

    def test_stable_under_smaller_steps_and_radius(self):
        reference = cover_monodromy(ELEMENTARY).permutations
        finer = ContinuationOptions.from_settings(initial_step=0.025)
        self.assertEqual(cover_monodromy(ELEMENTARY, options=finer).permutations, reference)
        self.assertEqual(cover_monodromy(ELEMENTARY, radius=0.5).permutations, reference)

    def test_no_monodromy_at_infinity(self):
        loops = default_loops([-2, 2])
        start = SheetOrder.LEXICOGRAPHIC.sort(fiber_roots(ELEMENTARY, loops.basepoint))
        result = track_loop(ELEMENTARY, enclosing_loop(loops.values, loops.basepoint), start, loops.radius)
        self.assertEqual(match_endpoints(start, result.endpoints, 10.0), (0, 1))

    def test_quiver(self):
        q = quiver_from_cover(ELEMENTARY, sheet_order=SheetOrder.ANGULAR)
        self.assertEqual(q.nodes[0].u, matrix([[-1, 1]]))
        self.assertEqual(q.nodes[0].v, matrix([[-1], [1]]))
        pair = stokes_matrices(q)
        self.assertEqual(pair.S_plus, matrix([[1, 2], [0, 1]]))
        self.assertEqual(pair.S_minus, matrix([[-1, 0], [-2, -1]]))

    def test_square_cover(self):
        monodromy = monodromy_permutations(CoverSpec.polynomial([0, 0, 1]), default_loops([0]))
        self.assertEqual(monodromy.permutations, ((1, 0),))


class RepeatedCriticalPointTests(SimpleTestCase):
    def test_single_five_cycle(self):
        quintic = CoverSpec.polynomial([-1, 5, -10, 10, -5, 1])
        monodromy = cover_monodromy(quintic)
        self.assertEqual(monodromy.exact_values, (ZERO,))
        self.assertEqual(len(monodromy.permutations), 1)
        self.assertEqual(cycle_type(monodromy.permutations[0]), [5])
        self.assertEqual([m for _, m in monodromy.fibers[0]], [5])


class SectorTests(SimpleTestCase):
    def test_airy_sectors(self):
        report = ramified_sector_multipliers('airy')
        sectors = dict(report.sectors)
        self.assertEqual(list(sectors), ['S1', 'S2', 'S3', 'S4', 'S5', 'S6'])
        for label in ('S1', 'S3', 'S5'):
            self.assertEqual(sectors[label], matrix([[1, -1], [0, 1]]))
        for label in ('S2', 'S4', 'S6'):
            self.assertEqual(sectors[label], matrix([[-1, 0], [-1, -1]]))
        self.assertEqual(
            [component.coefficient for component in report.pulled_back],
            [gauss(0, rational(-2, 3)), gauss(0, rational(2, 3))],
        )
        self.assertEqual({component.power for component in report.pulled_back}, {3})

    def test_elementary_sectors(self):
        report = ramified_sector_multipliers('elementary')
        self.assertEqual(dict(report.sectors), {
            'l+': matrix([[-1, 0], [-2, -1]]),
            'l-': matrix([[1, 2], [0, 1]]),
        })
        self.assertIsNone(report.pulled_back)

    def test_unknown_example(self):
        with self.assertRaises(ValueError):
            ramified_sector_multipliers('bessel')


class ContinuationOptionsTests(SimpleTestCase):
    def test_overrides(self):
        options = ContinuationOptions.from_settings(initial_step=0.01, workers=None)
        self.assertEqual(options.initial_step, 0.01)
        self.assertEqual(options.workers, 4)

    @override_settings(STOKESQUIVER_CONTINUATION={'matching_ratio': 20.0})
    def test_settings(self):
        self.assertEqual(ContinuationOptions.from_settings().matching_ratio, 20.0)

    @override_settings(STOKESQUIVER_CONTINUATION={'step': 0.1})
    def test_unknown_setting(self):
        with self.assertRaises(TypeError):
            ContinuationOptions.from_settings()
