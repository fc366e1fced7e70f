from django.test import SimpleTestCase

from app.exactnum import I, ONE, ZERO, MatrixQi, gauss, mat_inverse, rational
from app.exceptions import NotSinglePointAtZero
from app.quiver import DEFAULT_FRAME, Frame, QuiverNode, skyscraper_quiver, validate_and_order
from app.stokes import (
    ExponentialComponent, PulledBackComponent, exponential_components, fourier_quiver, fourier_sato_point,
    smash_quiver, stokes_matrices, stokes_plus_inverse, total_monodromy_phi, verify_theorem_identity,
)

from .helpers import load_quiver, matrix


class StokesMatrixTests(SimpleTestCase):
    def test_airy(self):
        pair = stokes_matrices(load_quiver('airy.json'))
        self.assertEqual(pair.order, (gauss(-2), gauss(2)))
        self.assertEqual(pair.S_plus, matrix([[1, 1], [0, 1]]))
        self.assertEqual(pair.S_minus, matrix([[-1, 0], [-1, -1]]))

    def test_elementary(self):
        pair = stokes_matrices(load_quiver('elementary.json'))
        self.assertEqual(pair.S_plus, matrix([[1, 2], [0, 1]]))
        self.assertEqual(pair.S_minus, matrix([[-1, 0], [-2, -1]]))

    def test_scalar(self):
        q = load_quiver('scalar.json')
        pair = stokes_matrices(q)
        self.assertEqual(pair.S_plus, matrix([[1, 3], [0, 1]]))
        self.assertEqual(pair.S_minus, matrix([[-1, 0], [-2, -2]]))
        self.assertEqual(pair.U_sigma, matrix([[-2], [1]]))
        self.assertEqual(pair.V_sigma, matrix([[2, 3]]))
        self.assertEqual(total_monodromy_phi(q), matrix([[5, 6], [-2, -2]]))
        self.assertEqual(MatrixQi.identity(1) - pair.V_sigma @ pair.U_sigma, matrix([[2]]))

    def test_airy_sigma_maps(self):
        pair = stokes_matrices(load_quiver('airy.json'))
        self.assertEqual(pair.U_sigma, matrix([[1, -1, 0], [0, 1, -1]]))
        self.assertEqual(pair.V_sigma, matrix([[1, 0], [0, 1], [-1, -1]]))

    def test_blocks(self):
        q = validate_and_order(DEFAULT_FRAME, 1, [
            QuiverNode(ZERO, matrix([[1], [2]]), matrix([[0, 1]])),
            QuiverNode(ONE, matrix([[3]]), matrix([[1]])),
        ])
        pair = stokes_matrices(q)
        self.assertEqual(pair.block_dims, (2, 1))
        self.assertEqual(pair.block(pair.S_plus, 0, 1), matrix([[1], [2]]))
        self.assertEqual(pair.block(pair.S_minus, 1, 0), matrix([[0, -3]]))
        self.assertEqual(pair.block(pair.S_plus, 1, 0), MatrixQi.zeros(1, 2))

    def test_no_points(self):
        q = validate_and_order(DEFAULT_FRAME, 2, [])
        pair = stokes_matrices(q)
        self.assertEqual(pair.S_plus.shape, (0, 0))
        self.assertEqual(pair.U_sigma.shape, (0, 2))
        self.assertTrue(verify_theorem_identity(q).passed)


class InverseTests(SimpleTestCase):
    def test_closed_form_matches_inverse(self):
        for name in ('airy.json', 'elementary.json', 'scalar.json'):
            with self.subTest(name=name):
                q = load_quiver(name)
                self.assertEqual(stokes_plus_inverse(q), mat_inverse(stokes_matrices(q).S_plus))

    def test_airy_inverse(self):
        self.assertEqual(stokes_plus_inverse(load_quiver('airy.json')), matrix([[1, -1], [0, 1]]))


class IdentityTests(SimpleTestCase):
    def test_examples_satisfy_both_identities(self):
        for name in ('airy.json', 'elementary.json', 'scalar.json'):
            with self.subTest(name=name):
                report = verify_theorem_identity(load_quiver(name))
                self.assertTrue(report.passed)
                self.assertIsNone(report.phi.mismatch)

    def test_airy_phi_monodromy(self):
        q = load_quiver('airy.json')
        inverse = stokes_plus_inverse(q)
        self.assertEqual(inverse @ stokes_matrices(q).S_minus, matrix([[0, 1], [-1, -1]]))
        self.assertEqual(total_monodromy_phi(q), matrix([[0, 1], [-1, -1]]))


class SmashTests(SimpleTestCase):
    def test_single_node_at_zero(self):
        q = load_quiver('scalar.json')
        smash = smash_quiver(q)
        self.assertEqual(smash.points, (ZERO,))
        node = smash.nodes[0]
        self.assertEqual(node.u, matrix([[-2], [1]]))
        self.assertEqual(node.v, matrix([[2, 3]]))
        self.assertEqual(node.monodromies()[1], total_monodromy_phi(q))

    def test_psi_monodromy_is_total(self):
        q = load_quiver('airy.json')
        self.assertEqual(smash_quiver(q).nodes[0].monodromies()[0], matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]]))


class FourierTests(SimpleTestCase):
    def test_point_swap(self):
        q = validate_and_order(DEFAULT_FRAME, 1, [QuiverNode(ZERO, matrix([[1]]), matrix([[2]]))])
        dual = fourier_sato_point(q)
        self.assertEqual(dual.frame, Frame(ONE, -I))
        self.assertEqual(dual.nodes[0].u, matrix([[2]]))
        self.assertEqual(dual.nodes[0].v, matrix([[1]]))
        twice = fourier_sato_point(dual)
        self.assertEqual(twice.frame, Frame(-I, -ONE))
        self.assertEqual(twice.nodes, q.nodes)

    def test_point_swap_needs_single_node_at_zero(self):
        with self.assertRaises(NotSinglePointAtZero):
            fourier_sato_point(load_quiver('scalar.json'))
        q = validate_and_order(DEFAULT_FRAME, 1, [QuiverNode(ONE, matrix([[1]]), matrix([[2]]))])
        with self.assertRaises(NotSinglePointAtZero):
            fourier_sato_point(q)

    def test_fourier_quiver(self):
        q = load_quiver('scalar.json')
        transformed = fourier_quiver(q)
        self.assertEqual(transformed.frame, DEFAULT_FRAME.dual())
        self.assertEqual(transformed.psi_dim, 2)
        self.assertEqual(transformed.nodes[0].u, matrix([[2, 3]]))
        self.assertEqual(transformed.nodes[0].v, matrix([[-2], [1]]))
        self.assertEqual(transformed.nodes[0].monodromies()[1], matrix([[2]]))

    def test_fourier_is_point_swap_of_smash(self):
        q = load_quiver('airy.json')
        self.assertEqual(fourier_quiver(q), fourier_sato_point(smash_quiver(q)))


class ExponentTests(SimpleTestCase):
    def test_components_follow_beta_order(self):
        report = exponential_components(load_quiver('airy.json'))
        self.assertEqual(report.components, (
            ExponentialComponent(gauss(-2), 1), ExponentialComponent(gauss(2), 1),
        ))

    def test_empty_blocks_are_dropped(self):
        q = skyscraper_quiver(DEFAULT_FRAME, [ZERO, ONE], [0, 2])
        self.assertEqual(exponential_components(q).components, (ExponentialComponent(ONE, 2),))

    def test_substitution(self):
        report = exponential_components(load_quiver('airy.json'))
        pulled_back = report.substituted(I * rational(1, 3), 3)
        self.assertEqual(pulled_back, (
            PulledBackComponent(gauss(0, rational(-2, 3)), 3, 1),
            PulledBackComponent(gauss(0, rational(2, 3)), 3, 1),
        ))
