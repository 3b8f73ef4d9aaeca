import math
import random
import unittest
from fractions import Fraction

import numpy as np

from boogr import Undecided
from dynamics import CubicParam, eval_P
from green import (GROWTH_C, THETA, arch_bounds, canonical_height, finite_bounds, g0g1G, green_arch, green_finite,
                   green_grid, height_report, weighted_green_finite)


class TestArchimedean( unittest.TestCase ):

	def setUp( self ):
		self.rng = random.Random( 0 )
		self.origin = CubicParam.complex( 0, 0 )


	def test_pure_cube_is_exact( self ):
		value = green_arch( self.origin, 1e6 )
		self.assertAlmostEqual( value.value, math.log( 1e6 ) - math.log( 3 ) / 2, places=12 )
		self.assertEqual( value.iterations_used, 0 )


	def test_bounded_orbit_certified_zero( self ):
		value = green_arch( self.origin, 0.5 )
		self.assertEqual( value.value, 0.0 )
		self.assertLessEqual( value.error_bound, 1e-12 )


	def test_functional_equation( self ):
		p = CubicParam.complex( 1, 1 )
		for z in ( 20.0, 3 + 4j, -2.5 ):
			lhs = green_arch( p, eval_P( p, complex( z ) ) ).value
			rhs = 3 * green_arch( p, z ).value
			self.assertAlmostEqual( lhs, rhs, delta=1e-9 )


	def test_undecided_with_short_cap( self ):
		with self.assertRaises( Undecided ):
			green_arch( self.origin, 0.5, tol=1e-12, cap=2 )


	def test_bounded_certificate_includes_theta( self ):
		bounds = arch_bounds( 0, 0 )
		bound = 3.0 ** -5 * ( math.log( bounds.escape_radius ) + bounds.theta )
		value = green_arch( self.origin, 0.0, tol=1.01 * bound, cap=5 )
		self.assertEqual( value.value, 0.0 )
		self.assertAlmostEqual( value.error_bound, bound, places=15 )
		with self.assertRaises( Undecided ) as raised:
			green_arch( self.origin, 0.0, tol=3.0 ** -5 * math.log( bounds.escape_radius ) * 1.01, cap=5 )
		self.assertIn( 'R=10', str( raised.exception ) )
		self.assertIn( f'theta={THETA:.6g}', str( raised.exception ) )


	def test_negative_tau_rejected( self ):
		with self.assertRaises( ValueError ):
			arch_bounds( 0, 0, tau=-1.0 )


	def test_growth_envelope( self ):
		for _ in range( 50 ):
			c = complex( self.rng.uniform( -30, 30 ), self.rng.uniform( -30, 30 ) )
			a = complex( self.rng.uniform( -30, 30 ), self.rng.uniform( -30, 30 ) )
			_, _, G = g0g1G( CubicParam.complex( c, a ), tol=1e-10 )
			top = math.log( max( 1.0, abs( c ), abs( a ) ) )
			self.assertLessEqual( abs( G.value - top ), GROWTH_C + 1e-9 )


	def test_critical_values_at_origin( self ):
		g0, g1, G = g0g1G( self.origin )
		self.assertEqual( ( g0.value, g1.value, G.value ), ( 0.0, 0.0, 0.0 ) )


	def test_grid_matches_pointwise( self ):
		c = np.array( [ 0.0, 1.0, 2 + 1j ] )
		a = np.array( [ 0.0, 1.5, -1.0 ] )
		values, undecided = green_grid( c, a, c, tol=1e-12 )
		self.assertFalse( undecided.any( ) )
		for k in range( 3 ):
			expected = green_arch( CubicParam.complex( c[ k ], a[ k ] ), c[ k ], tol=1e-12 ).value
			self.assertAlmostEqual( values[ k ], expected, delta=1e-9 )


class TestFinite( unittest.TestCase ):

	def test_large_primes_read_valuations( self ):
		self.assertAlmostEqual( green_finite( 5, Fraction( 1, 5 ), 0 ), math.log( 5 ) )
		self.assertAlmostEqual( green_finite( 7, 1, Fraction( 1, 49 ) ), 2 * math.log( 7 ) )
		self.assertEqual( green_finite( 11, 3, 4 ), 0.0 )


	def test_small_primes_at_origin( self ):
		self.assertEqual( green_finite( 2, 0, 0 ), 0.0 )
		self.assertEqual( green_finite( 3, 0, 0 ), 0.0 )


	def test_weighted_formula_at_a_pole( self ):
		for q in ( 1, 2 ):
			iterated, formula = weighted_green_finite( 5, Fraction( 1, 5 ), 0, 2, 1, q )
			self.assertAlmostEqual( iterated, math.log( 5 ) )
			self.assertAlmostEqual( formula, math.log( 5 ) )


	def test_weighted_formula_on_random_parameters( self ):
		rng = random.Random( 8 )
		for _ in range( 20 ):
			prime = rng.choice( ( 5, 7, 11 ) )
			c = Fraction( rng.randint( -20, 20 ), rng.choice( ( 1, 2, prime, prime * prime, 3 * prime ) ) )
			a = Fraction( rng.randint( -20, 20 ), rng.choice( ( 1, 3, prime, prime * prime ) ) )
			s0, s1 = rng.randint( 1, 4 ), rng.randint( 1, 4 )
			iterated, formula = weighted_green_finite( prime, c, a, s0, s1, 2 )
			self.assertAlmostEqual( iterated, formula, places=12, msg=( prime, c, a, s0, s1 ) )
			G = green_finite( prime, c, a )
			self.assertLessEqual( min( s0, s1 ) * G, iterated + 1e-12 )
			self.assertLessEqual( iterated, max( s0, s1 ) * G + 1e-12 )


	def test_finite_bounds_vanish_for_large_primes( self ):
		bounds = finite_bounds( 7 )
		self.assertEqual( ( bounds.theta, bounds.rho, bounds.growth_C ), ( 0.0, 0.0, 0.0 ) )


class TestHeight( unittest.TestCase ):

	def test_origin_has_height_zero( self ):
		self.assertAlmostEqual( canonical_height( 0, 0 ), 0.0, delta=1e-9 )


	def test_report_lists_denominator_primes( self ):
		report = height_report( Fraction( 1, 5 ), 0 )
		self.assertEqual( len( report.terms ), 4 )
		self.assertTrue( all( v >= 0 for v in report.terms.values( ) ) )
		self.assertAlmostEqual( report.value, sum( report.terms.values( ) ) )


	def test_weights_must_be_positive( self ):
		with self.assertRaises( ValueError ):
			height_report( 0, 0, s0=0 )


if __name__ == '__main__':
	unittest.main( )
