import random
import unittest
from fractions import Fraction

from dynamics import CubicParam, dynatomic_degree, eval_Pn, find_cycles
from exactalg import A, C, QOmega, UniPoly
from periodic import (critical_relation, dynatomic, has_cycle, iterate_uni, leading_form, perm_factors, perm_poly,
                      perm_sample)


class TestDynatomic( unittest.TestCase ):

	def test_iterate_degrees( self ):
		self.assertEqual( iterate_uni( 1 ).degree( ), 3 )
		self.assertEqual( iterate_uni( 2 ).degree( ), 9 )


	def test_dynatomic_degrees( self ):
		for m in range( 1, 4 ):
			self.assertEqual( dynatomic( m ).poly.degree( ), dynatomic_degree( m ) )


	def test_divisor_product_is_the_iterate( self ):
		rng = random.Random( 6 )
		for m in ( 2, 3 ):
			for _ in range( 3 ):
				c = Fraction( rng.randint( -9, 9 ), rng.randint( 1, 6 ) )
				a = Fraction( rng.randint( -9, 9 ), rng.randint( 1, 6 ) )
				shifted = iterate_uni( m ).specialize( c, a ) - UniPoly.x( )
				product = UniPoly( [ QOmega( 1 ) ], QOmega( ) )
				for d in ( k for k in range( 1, m + 1 ) if m % k == 0 ):
					product = product * dynatomic( d ).specialize( c, a )
				self.assertEqual( product, shifted )
				_, remainder = shifted.divmod( dynatomic( m ).specialize( c, a ) )
				self.assertTrue( remainder.is_zero( ) )


	def test_roots_are_cycle_points( self ):
		for c, a in ( ( complex( 0.7, 0.2 ), complex( -0.4, 0.3 ) ), ( complex( -0.3, -0.5 ), complex( 0.6, 0.1 ) ) ):
			p = CubicParam.complex( c, a )
			for m in ( 2, 3 ):
				roots = [ complex( r ) for r in dynatomic( m ).roots( c, a ) ]
				points = [ complex( w ) for cycle in find_cycles( p, m ) for w in cycle.points ]
				self.assertEqual( len( roots ), len( points ) )
				for r in roots:
					self.assertLess( min( abs( r - w ) for w in points ), 1e-6 )
					self.assertLess( abs( eval_Pn( p, r, m ) - r ), 1e-6 )


	def test_period_range( self ):
		with self.assertRaises( ValueError ):
			dynatomic( 7 )


class TestMultiplierCurves( unittest.TestCase ):

	def setUp( self ):
		self.fixed_critical = A ** 3 - ( C ** 3 ).scale( Fraction( 1, 6 ) ) - C


	def test_superattracting_fixed_points( self ):
		factors = perm_factors( 1, 0 )
		self.assertEqual( len( factors ), 2 )
		self.assertTrue( any( f.associates( A ) and k == 3 for f, k in factors ) )
		self.assertTrue( any( f.associates( self.fixed_critical ) and k == 1 for f, k in factors ) )


	def test_symbolic_multiplier( self ):
		result = perm_poly( 1 )
		self.assertTrue( result.is_symbolic( ) )
		self.assertEqual( max( result.poly ), 3 )
		self.assertEqual( result.to_json( )[ 'lambda' ], None )


	def test_specializing_c_commutes_with_elimination( self ):
		rng = random.Random( 7 )
		for _ in range( 8 ):
			c = Fraction( rng.randint( -6, 6 ), rng.randint( 1, 4 ) )
			lam = Fraction( rng.randint( -6, 6 ), rng.randint( 1, 3 ) )
			late = perm_poly( 1, lam ).poly.specialize( 'c', c )
			early = perm_poly( 1, lam, c ).poly
			self.assertTrue( early.associates( late ), ( c, lam ) )


	def test_argument_checks( self ):
		with self.assertRaises( ValueError ):
			perm_poly( 5 )
		with self.assertRaises( TypeError ):
			perm_poly( 1, 0.5 + 0.1j )


	def test_sample_on_unicritical_line( self ):
		self.assertEqual( len( perm_sample( 1, 0, 0 ) ), 6 )
		kept = perm_sample( 1, 0, 0, filter_exact=True )
		self.assertEqual( len( kept ), 1 )
		self.assertAlmostEqual( abs( kept[ 0 ] ), 0.0, places=6 )


	def test_sample_beyond_symbolic_periods( self ):
		lam = complex( 0.3, 0.1 )
		found = perm_sample( 5, lam, 0.5 )
		self.assertGreater( len( found ), 0 )
		for a in found:
			self.assertTrue( has_cycle( 0.5, a, 5, lam ) )
		with self.assertRaises( ValueError ):
			perm_sample( 7, lam, 0.5 )


	def test_has_cycle( self ):
		self.assertTrue( has_cycle( 0, 0, 1, 3 ) )
		self.assertTrue( has_cycle( 0, 0, 1, 0 ) )
		self.assertFalse( has_cycle( 0, 0, 1, 0.5 ) )


class TestCriticalRelations( unittest.TestCase ):

	def test_first_relations( self ):
		self.assertEqual( critical_relation( 1, 0 ), A ** 3 )
		self.assertEqual( critical_relation( 1, 1 ), A ** 3 - ( C ** 3 ).scale( Fraction( 1, 6 ) ) - C )


	def test_leading_forms( self ):
		for n in range( 1, 4 ):
			for i in ( 0, 1 ):
				report = leading_form( n, i )
				self.assertTrue( report.matches, ( n, i ) )
				self.assertEqual( report.raw.total_degree( ), 3 ** n )


	def test_leading_form_scale( self ):
		report = leading_form( 2, 0 )
		self.assertEqual( report.raw_coefficient, Fraction( 1, 3 ) )
		self.assertEqual( report.scale_ratio, 27 )


if __name__ == '__main__':
	unittest.main( )
