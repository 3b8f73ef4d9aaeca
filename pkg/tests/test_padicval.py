import random
import unittest
from fractions import Fraction

from boogr import DegreeCapExceeded
from padicval import (bridge_t_minpoly, multiplier_poly, newton_polygon, rational_coefficients, valuation_table,
                      verify_conjugacy, verify_prop_multiplier)


class TestNewtonPolygon( unittest.TestCase ):

	def test_single_side( self ):
		polygon = newton_polygon( [ 4, 0, 1 ], 2 )
		self.assertEqual( polygon.root_valuations( ), [ ( 1, 2 ) ] )
		self.assertEqual( polygon.length, 2 )


	def test_negative_valuation( self ):
		polygon = newton_polygon( [ Fraction( -1, 9 ), 1 ], 3 )
		self.assertEqual( polygon.root_valuations( ), [ ( -2, 1 ) ] )


	def test_zero_roots_are_skipped( self ):
		polygon = newton_polygon( [ 0, 0, 5, 1 ], 5 )
		self.assertEqual( polygon.zero_order, 2 )
		self.assertEqual( polygon.root_valuations( ), [ ( 1, 1 ) ] )


	def test_polygon_matches_root_valuations( self ):
		rng = random.Random( 5 )
		for _ in range( 50 ):
			p = rng.choice( ( 2, 3, 5 ) )
			units = [ u for u in range( 1, 12 ) if u % p ]
			coeffs = [ Fraction( 1 ) ]
			expected = [ ]
			for _ in range( rng.randint( 1, 6 ) ):
				e = rng.randint( -3, 3 )
				root = rng.choice( ( -1, 1 ) ) * Fraction( p ) ** e * Fraction( rng.choice( units ), rng.choice( units ) )
				expected.append( e )
				coeffs = [ ( coeffs[ i - 1 ] if i else 0 ) - ( root * coeffs[ i ] if i < len( coeffs ) else 0 )
				           for i in range( len( coeffs ) + 1 ) ]
			polygon = newton_polygon( coeffs, p )
			found = [ v for v, n in polygon.root_valuations( ) for _ in range( n ) ]
			self.assertEqual( polygon.zero_order, 0 )
			self.assertEqual( sorted( found ), sorted( expected ) )


	def test_arguments( self ):
		with self.assertRaises( ValueError ):
			newton_polygon( [ 1, 1 ], 4 )
		with self.assertRaises( ValueError ):
			newton_polygon( [ 0, 0 ], 2 )


class TestMultipliers( unittest.TestCase ):

	def test_square_map_fixed_points( self ):
		spec = multiplier_poly( 2, [ 0, 1 ], 1 )
		self.assertEqual( rational_coefficients( spec.lambda_poly ), [ 0, -2, 1 ] )
		report = verify_prop_multiplier( spec )
		self.assertTrue( report.passed )
		self.assertEqual( report.zero_roots, 1 )


	def test_superattracting_two_cycle( self ):
		spec = multiplier_poly( 2, [ 1, 1 ], 2 )
		self.assertEqual( rational_coefficients( spec.lambda_poly ), [ 0, 0, 1 ] )
		self.assertEqual( verify_prop_multiplier( spec ).zero_roots, 2 )


	def test_non_integral_parameter_fails( self ):
		report = verify_prop_multiplier( multiplier_poly( 2, [ Fraction( -1, 3 ), 1 ], 1 ) )
		self.assertFalse( report.passed )
		self.assertIn( 3, [ row.prime for row in report.failures( ) ] )


	def test_degree_cap( self ):
		with self.assertRaises( DegreeCapExceeded ):
			multiplier_poly( 3, [ 0, 1 ], 5 )


	def test_table( self ):
		reports = valuation_table( [ ( 2, [ 0, 1 ], 1 ), ( 3, [ 0, 1 ], 1 ) ], primes=( 2, 3 ) )
		self.assertEqual( [ r.d for r in reports ], [ 2, 3 ] )
		self.assertTrue( all( r.passed for r in reports ) )


class TestUnicriticalBridge( unittest.TestCase ):

	def test_conjugacy( self ):
		self.assertTrue( verify_conjugacy( ) )


	def test_bridge_at_zero( self ):
		self.assertEqual( rational_coefficients( bridge_t_minpoly( [ 0, 1 ] ) ), [ 0, 1 ] )


if __name__ == '__main__':
	unittest.main( )
