import cmath
import math
import random
import unittest
from fractions import Fraction

import numpy as np

from boogr import EscapeOverflow
from dynamics import (CubicParam, critical_points, derivative, derivative_n, dynatomic_degree, escapes,
                      eval_P, eval_Pn, exact_period, find_cycles, julia_radius, orbit, polyroots)
from exactalg import QOmega


class TestMap( unittest.TestCase ):

	def setUp( self ):
		self.origin = CubicParam.exact( 0, 0 )
		self.sample = CubicParam.exact( 2, 1 )


	def test_critical_points( self ):
		self.assertEqual( critical_points( self.sample ), ( QOmega( ), QOmega( 2 ) ) )
		for z in critical_points( self.sample ):
			self.assertEqual( derivative( self.sample, z ), 0 )


	def test_critical_values( self ):
		self.assertEqual( eval_P( self.sample, 0 ), 1 )
		self.assertEqual( eval_P( self.sample, 2 ), Fraction( -1, 3 ) )


	def test_second_iterate_at_origin( self ):
		self.assertEqual( eval_Pn( self.origin, 3, 2 ), 243 )
		self.assertEqual( eval_Pn( self.origin, Fraction( 1, 2 ), 2 ), Fraction( 1, 2 ** 9 * 81 ) )


	def test_orbit_and_chain_rule( self ):
		self.assertEqual( orbit( self.origin, 3, 2 ), [ 3, QOmega( 9 ), QOmega( 243 ) ] )
		self.assertEqual( derivative_n( self.origin, QOmega( 1 ), 2 ), Fraction( 1, 9 ) )


	def test_exact_and_complex_agree( self ):
		rng = random.Random( 0 )
		for _ in range( 20 ):
			c = Fraction( rng.randint( -4, 4 ), rng.randint( 1, 3 ) )
			a = Fraction( rng.randint( -4, 4 ), rng.randint( 1, 3 ) )
			z = Fraction( rng.randint( -3, 3 ), 2 )
			exact = eval_Pn( CubicParam.exact( c, a ), z, 2 )
			approx = eval_Pn( CubicParam.complex( c, a ), complex( z ), 2 )
			self.assertTrue( cmath.isclose( exact.to_complex( ), approx, rel_tol=1e-9, abs_tol=1e-9 ) )


	def test_omega_parameter_embeds( self ):
		p = CubicParam.exact( QOmega.omega( ), 0 )
		self.assertAlmostEqual( p.embed( ).c.real, 1 / math.sqrt( 3 ) )


class TestEscape( unittest.TestCase ):

	def setUp( self ):
		self.p = CubicParam.complex( 0, 0 )


	def test_overflow_signals_escape( self ):
		with self.assertRaises( EscapeOverflow ):
			eval_Pn( self.p, 1000.0, 10 )


	def test_escape_time( self ):
		self.assertEqual( escapes( self.p, 10.0 ), 0 )
		self.assertIsNone( escapes( self.p, 0.0 ) )
		self.assertIsNone( escapes( self.p, 1.5 ) )


	def test_julia_radius_expands( self ):
		r = julia_radius( self.p )
		self.assertGreaterEqual( r, math.sqrt( 3 ) )
		self.assertGreaterEqual( abs( eval_P( self.p, r ) ), 1.01 * r )


class TestCycles( unittest.TestCase ):

	def setUp( self ):
		self.p = CubicParam.complex( 0, 0 )


	def test_dynatomic_degrees( self ):
		self.assertEqual( [ dynatomic_degree( m ) for m in range( 1, 5 ) ], [ 3, 6, 24, 72 ] )


	def test_polyroots( self ):
		roots = sorted( polyroots( [ -1, 0, 1 ] ), key=lambda z: z.real )
		self.assertTrue( np.allclose( roots, [ -1, 1 ] ) )
		self.assertEqual( len( polyroots( [ 0, 0, 1 ] ) ), 2 )
		self.assertTrue( np.allclose( polyroots( [ 0, 0, 1 ] ), 0 ) )


	def test_fixed_points_at_origin( self ):
		cycles = find_cycles( self.p, 1 )
		self.assertEqual( len( cycles ), 3 )
		points = sorted( ( c.points[ 0 ] for c in cycles ), key=lambda z: z.real )
		self.assertTrue( np.allclose( points, [ -math.sqrt( 3 ), 0, math.sqrt( 3 ) ], atol=1e-9 ) )
		multipliers = sorted( abs( c.multiplier ) for c in cycles )
		self.assertTrue( np.allclose( multipliers, [ 0, 3, 3 ], atol=1e-9 ) )


	def test_two_cycles_at_origin( self ):
		cycles = find_cycles( self.p, 2 )
		self.assertEqual( len( cycles ), 3 )
		for cycle in cycles:
			self.assertEqual( exact_period( self.p, cycle.points[ 0 ], 2 ), 2 )
			self.assertAlmostEqual( abs( cycle.multiplier ), 9.0, places=6 )


	def test_multiplier_matches_finite_difference( self ):
		rng = random.Random( 4 )
		h = 1e-6
		for _ in range( 5 ):
			c = complex( rng.uniform( -1, 1 ), rng.uniform( -1, 1 ) )
			a = complex( rng.uniform( -1, 1 ), rng.uniform( -1, 1 ) )
			p = CubicParam.complex( c, a )
			for m in ( 1, 2, 3 ):
				cycles = find_cycles( p, m )
				self.assertEqual( sum( len( cycle.points ) for cycle in cycles ), dynatomic_degree( m ) )
				for cycle in cycles:
					z = complex( cycle.points[ 0 ] )
					slope = ( eval_Pn( p, z + h, m ) - eval_Pn( p, z - h, m ) ) / ( 2 * h )
					scale = max( 1.0, abs( cycle.multiplier ) )
					self.assertLess( abs( slope - cycle.multiplier ), 1e-5 * scale )
					for w in cycle.points:
						self.assertLess( abs( derivative_n( p, complex( w ), m ) - cycle.multiplier ), 1e-8 * scale )


	def test_period_out_of_range( self ):
		with self.assertRaises( ValueError ):
			find_cycles( self.p, 7 )


if __name__ == '__main__':
	unittest.main( )
