import cmath
import math
import random
import unittest
from fractions import Fraction

from boettcher import (KNOWN_BOUND_EXCEPTIONS, bottcher_coeffs, bottcher_eval, bottcher_numeric,
                       coefficient_bounds_report, domain_radius, verify_functional_equation)
from boogr import OutOfDomain
from dynamics import CubicParam, eval_P
from exactalg import A, BiPoly, C, QOmega
from green import green_arch


class TestCoefficients( unittest.TestCase ):

	def setUp( self ):
		self.expansion = bottcher_coeffs( 8 )
		self.omega = QOmega.omega( )


	def test_closed_forms( self ):
		a1 = ( C ** 2 ).scale( self.omega * Fraction( -1, 4 ) )
		a2 = ( C ** 3 ).scale( self.omega * Fraction( -5, 24 ) ) + ( A ** 3 - C.scale( Fraction( 1, 2 ) ) ).scale( self.omega )
		self.assertEqual( self.expansion.coefficient( 1 ), a1 )
		self.assertEqual( self.expansion.coefficient( 2 ), a2 )


	def test_total_degrees( self ):
		for k in range( 1, 9 ):
			self.assertEqual( self.expansion.coefficient( k ).total_degree( ), k + 1 )


	def test_orders_share_prefix( self ):
		short = bottcher_coeffs( 4 )
		self.assertEqual( short.coeffs, self.expansion.coeffs[ :4 ] )


	def test_coefficient_index_checked( self ):
		with self.assertRaises( IndexError ):
			self.expansion.coefficient( 9 )
		with self.assertRaises( ValueError ):
			bottcher_coeffs( 0 )


	def test_functional_equation( self ):
		report = verify_functional_equation( 8, self.expansion )
		self.assertTrue( report.passed )
		self.assertEqual( report.window, [ -6, 3 ] )


	def test_functional_equation_detects_perturbation( self ):
		broken = self.expansion.with_coefficient( 3, self.expansion.coefficient( 3 ) + 1 )
		report = verify_functional_equation( 8, broken )
		self.assertFalse( report.passed )
		self.assertIsNotNone( report.first_failure )


	def test_coefficient_bounds( self ):
		report = coefficient_bounds_report( 8, self.expansion )
		self.assertTrue( report.passed )
		self.assertEqual( report.undocumented( ), [ ] )
		self.assertEqual( report.exceptions, [ [ 2, 3, 0 ], [ 8, 9, 0 ] ] )
		failing = { ( r.k, tuple( r.monomial ) ) for r in report.failures( ) }
		self.assertEqual( failing, set( KNOWN_BOUND_EXCEPTIONS ) )
		self.assertEqual( { r.k for r in report.rows }, set( range( 1, 9 ) ) )


	def test_bound_exceptions_are_top_c_terms( self ):
		report = coefficient_bounds_report( 8, self.expansion )
		rows = { ( r.k, tuple( r.monomial ) ): r for r in report.rows }
		self.assertEqual( rows[ (2, (3, 0)) ].v3_basis, '-3/2' )
		self.assertEqual( rows[ (8, (9, 0)) ].v3_basis, '-9/2' )
		self.assertTrue( rows[ (2, (3, 0)) ].ok2 )
		self.assertEqual( self.expansion.coefficient( 8 ).coefficient( 9, 0 ), QOmega( 0, Fraction( -21505, 41472 ) ) )
		for k, _ in KNOWN_BOUND_EXCEPTIONS:
			top = rows[ (k, (k + 1, 0)) ]
			self.assertGreaterEqual( Fraction( top.v3_basis ), Fraction( -( k + 1 ), 2 ) )


	def test_bounds_flag_new_violations( self ):
		broken = self.expansion.with_coefficient( 1, self.expansion.coefficient( 1 ) + Fraction( 1, 27 ) )
		report = coefficient_bounds_report( 8, broken )
		self.assertFalse( report.passed )
		self.assertEqual( [ ( r.k, r.monomial ) for r in report.undocumented( ) ], [ (1, [ 0, 0 ]) ] )


	def test_phi_series_head( self ):
		phi = self.expansion.phi_series( )
		self.assertEqual( phi.lo, -1 )
		self.assertEqual( phi.prec, 9 )
		self.assertEqual( phi.coeffs[ 0 ], BiPoly.constant( self.omega ) )
		self.assertEqual( phi.coeffs[ 1 ], C.scale( self.omega * Fraction( -1, 2 ) ) )
		self.assertEqual( phi.coeffs[ 2: ], self.expansion.coeffs )


	def test_json_carries_every_coefficient( self ):
		data = self.expansion.to_json( )
		self.assertEqual( data[ 'order' ], 8 )
		self.assertEqual( [ entry[ 'k' ] for entry in data[ 'coeffs' ] ], list( range( 1, 9 ) ) )
		self.assertEqual( BiPoly.from_json( data[ 'coeffs' ][ 0 ] ), self.expansion.coefficient( 1 ) )


class TestEvaluation( unittest.TestCase ):

	def setUp( self ):
		self.p = CubicParam.complex( 0.5, 0.3 )


	def test_guard_radius( self ):
		radius = domain_radius( 0.5, 0.3 )
		self.assertEqual( radius, 2.0 )
		with self.assertRaises( OutOfDomain ):
			bottcher_eval( self.p, 4.0 * radius )


	def test_series_matches_orbit_product( self ):
		for z in ( 50.0, 40j, -30 + 30j ):
			value = bottcher_eval( self.p, z )
			self.assertLess( value.tail_bound, 1e-10 )
			self.assertTrue( cmath.isclose( value.value, bottcher_numeric( self.p, z ), rel_tol=1e-9 ) )


	def test_functional_equation_on_random_points( self ):
		rng = random.Random( 9 )
		for _ in range( 25 ):
			c = complex( rng.uniform( -1, 1 ), rng.uniform( -1, 1 ) )
			a = complex( rng.uniform( -1, 1 ), rng.uniform( -1, 1 ) )
			p = CubicParam.complex( c, a )
			z = 60.0 * cmath.exp( 2j * math.pi * rng.random( ) )
			inner = bottcher_eval( p, z )
			outer = bottcher_eval( p, eval_P( p, z ) )
			self.assertTrue( cmath.isclose( outer.value, inner.value ** 3, rel_tol=1e-10 ), ( c, a, z ) )


	def test_log_modulus_is_green( self ):
		for z in ( 200.0, 150j ):
			phi = bottcher_eval( self.p, z ).value
			self.assertAlmostEqual( math.log( abs( phi ) ), green_arch( self.p, z ).value, delta=1e-9 )


if __name__ == '__main__':
	unittest.main( )
