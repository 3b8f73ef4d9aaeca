import math
import random
import unittest
from fractions import Fraction

import sympy

from boogr import LeadingRootUnavailable, ZeroLinearTerm
from exactalg import (A, BiPoly, C, PAdic, PuiseuxSeries, QOmega, UniPoly, abs_p, lower_convex_hull,
                      newton_puiseux, reduce_mod_curve, resultant, series_inverse, series_kth_root,
                      series_right_root, squarefree_part, valuation)


def series( coeffs, lo=0 ):
	return PuiseuxSeries( [ QOmega( v ) for v in coeffs ], lo=lo )


def z_poly( *coeffs ):
	return UniPoly( [ BiPoly.coerce( v ) for v in coeffs ], BiPoly( ) )


class TestQOmega( unittest.TestCase ):

	def setUp( self ):
		self.rng = random.Random( 0 )


	def _random( self ):
		r = lambda: Fraction( self.rng.randint( -9, 9 ), self.rng.randint( 1, 9 ) )
		return QOmega( r( ), r( ) )


	def test_ring_axioms( self ):
		for _ in range( 1000 ):
			x, y, z = self._random( ), self._random( ), self._random( )
			self.assertEqual( ( x * y ) * z, x * ( y * z ) )
			self.assertEqual( x * ( y + z ), x * y + x * z )
			self.assertEqual( ( x + y ) + z, x + ( y + z ) )


	def test_omega_squared( self ):
		w = QOmega.omega( )
		self.assertEqual( w * w, QOmega( Fraction( 1, 3 ) ) )
		self.assertAlmostEqual( w.to_complex( ).real, 1 / math.sqrt( 3 ), places=15 )


	def test_norm_and_inverse( self ):
		x = QOmega( 1, 1 )
		self.assertEqual( x.norm( ), Fraction( 2, 3 ) )
		self.assertEqual( x * x.inverse( ), QOmega( 1 ) )


	def test_three_adic_valuation_of_omega( self ):
		self.assertEqual( QOmega.omega( ).basis_valuation( 3 ), Fraction( -1, 2 ) )
		self.assertEqual( QOmega.omega( ).field_valuation( 3 ), Fraction( -1, 2 ) )
		self.assertEqual( QOmega( 4 ).basis_valuation( 2 ), 2 )


	def test_kth_root( self ):
		self.assertEqual( QOmega( 4 ).kth_root( 2 ), QOmega( 2 ) )
		self.assertEqual( QOmega( Fraction( -8, 27 ) ).kth_root( 3 ), QOmega( Fraction( -2, 3 ) ) )
		self.assertEqual( QOmega( Fraction( 1, 3 ) ).kth_root( 2 ), QOmega.omega( ) )
		with self.assertRaises( LeadingRootUnavailable ):
			QOmega( 2 ).kth_root( 3 )


class TestValuations( unittest.TestCase ):

	def test_rational_valuation( self ):
		self.assertEqual( valuation( 12, 2 ), 2 )
		self.assertEqual( valuation( Fraction( 5, 18 ), 3 ), -2 )
		self.assertEqual( valuation( 0, 7 ), math.inf )
		self.assertEqual( abs_p( Fraction( 1, 4 ), 2 ), 4.0 )


	def test_padic_arithmetic( self ):
		x = PAdic( 12, 2 )
		self.assertEqual( x.valuation( ), 2 )
		self.assertEqual( ( PAdic( Fraction( 1, 2 ), 2 ) * PAdic( 4, 2 ) ).valuation( ), 1 )
		self.assertEqual( ( PAdic( 3, 3 ) / PAdic( 9, 3 ) ).valuation( ), -1 )


	def test_lower_convex_hull_drops_collinear_points( self ):
		self.assertEqual( lower_convex_hull( [ (0, 0), (1, 1), (2, 0) ] ), [ (0, 0), (2, 0) ] )
		self.assertEqual( lower_convex_hull( [ (0, 0), (1, 1), (2, 2) ] ), [ (0, 0), (2, 2) ] )


class TestSeries( unittest.TestCase ):

	def test_square_root_of_monomial( self ):
		beta = series_kth_root( series( [ 1 ], lo=2 ), 2, order=4 )
		self.assertEqual( beta.coefficient( 1 ), 1 )
		self.assertEqual( beta.coefficient( 2 ), 0 )


	def test_square_root( self ):
		beta = series_kth_root( series( [ 1, 1 ], lo=2 ), 2, order=4 )
		self.assertEqual( beta.coefficient( 1 ), 1 )
		self.assertEqual( beta.coefficient( 2 ), Fraction( 1, 2 ) )
		self.assertEqual( beta.coefficient( 3 ), Fraction( -1, 8 ) )


	def test_cube_root_needs_extension( self ):
		with self.assertRaises( LeadingRootUnavailable ):
			series_kth_root( series( [ 4 ], lo=6 ), 3, order=8 )


	def test_right_root( self ):
		beta = series_right_root( series( [ 1, 1 ], lo=2 ), 2, order=4 )
		self.assertEqual( beta.coefficient( 1 ), 1 )
		self.assertEqual( beta.coefficient( 2 ), Fraction( -1, 2 ) )
		self.assertEqual( beta.coefficient( 3 ), Fraction( 5, 8 ) )


	def test_inverse_without_linear_term( self ):
		with self.assertRaises( ZeroLinearTerm ):
			series_inverse( series( [ 1 ], lo=2 ) )


	def test_inverse_of_quadratic_shift( self ):
		beta = series_inverse( series( [ 1, 1 ], lo=1 ), order=6 )
		self.assertEqual( beta.prec, 6 )
		self.assertEqual( [ beta.coefficient( e ) for e in range( 1, 6 ) ], [ 1, -1, 2, -5, 14 ] )


	def test_inverse_composes_to_identity( self ):
		rng = random.Random( 1 )
		for _ in range( 10 ):
			alpha = series( [ 1 ] + [ rng.randint( -3, 3 ) for _ in range( 4 ) ], lo=1 )
			beta = series_inverse( alpha, order=6 )
			self.assertEqual( beta.coefficient( 1 ), 1 )
			self.assertEqual( beta.coefficient( 2 ), -alpha.coefficient( 2 ) )
			composed = alpha.compose( beta, order=6 )
			self.assertEqual( composed.coefficient( 1 ), 1 )
			for e in range( 2, 6 ):
				self.assertEqual( composed.coefficient( e ), 0 )


class TestElimination( unittest.TestCase ):

	def test_resultant_of_equal_factors_vanishes( self ):
		self.assertTrue( resultant( z_poly( -1, 1 ), z_poly( -1, 1 ) ).is_zero( ) )


	def test_resultant_z_squared( self ):
		self.assertEqual( resultant( z_poly( 0, 0, 1 ), z_poly( -C, 1 ) ), C ** 2 )


	def test_fixed_critical_resultant( self ):
		fixed = z_poly( A ** 3, -1, C.scale( Fraction( -1, 2 ) ), Fraction( 1, 3 ) )
		critical = z_poly( 0, -C, 1 )
		expected = A ** 3 * ( A ** 3 - ( C ** 3 ).scale( Fraction( 1, 6 ) ) - C )
		self.assertTrue( resultant( fixed, critical ).associates( expected ) )


	def test_resultant_detects_common_roots( self ):
		rng = random.Random( 2 )
		z = sympy.Symbol( 'z' )
		res = resultant( z_poly( A, -C, 1 ), z_poly( -A, 1 ) )
		for _ in range( 100 ):
			c, a = rng.randint( -3, 3 ), rng.randint( -3, 3 )
			shared = sympy.degree( sympy.gcd( z ** 2 - c * z + a, z - a ), z ) > 0
			self.assertEqual( res.evaluate( c, a ) == 0, shared )


	def test_reduce_mod_curve( self ):
		curve = A ** 3 * 12 - C ** 3 - C * 6
		self.assertTrue( reduce_mod_curve( curve, curve ).is_zero( ) )
		reduced = reduce_mod_curve( A * curve + 1, curve )
		self.assertTrue( reduced.remainder.is_constant( ) )
		self.assertFalse( reduced.is_zero( ) )


	def test_squarefree_part( self ):
		self.assertTrue( squarefree_part( A ** 3 * ( C - 1 ) ** 2 ).associates( A * ( C - 1 ) ) )


	def test_json_round_trip( self ):
		p = C ** 2 * A + A.scale( QOmega.omega( ) ) - Fraction( 1, 6 )
		self.assertEqual( BiPoly.from_json( p.to_json( ) ), p )


class TestNewtonPuiseux( unittest.TestCase ):

	def test_line_a_zero( self ):
		branches = newton_puiseux( A )
		self.assertEqual( len( branches ), 1 )
		self.assertEqual( branches[ 0 ].c.valuation( ), -1 )
		self.assertTrue( branches[ 0 ].a.is_zero( ) )
		self.assertTrue( branches[ 0 ].exact )


	def test_line_c_zero( self ):
		branches = newton_puiseux( C )
		self.assertEqual( len( branches ), 1 )
		self.assertTrue( branches[ 0 ].c.is_zero( ) )
		self.assertEqual( branches[ 0 ].a.valuation( ), -1 )


	def test_branch_satisfies_curve( self ):
		curve = A ** 3 * 27 - C ** 3 - C * 9
		branches = newton_puiseux( curve, center=( QOmega( 1 ), QOmega( Fraction( 1, 3 ) ) ), order=6 )
		self.assertEqual( len( branches ), 1 )
		self.assertTrue( branches[ 0 ].exact )
		self.assertEqual( branches[ 0 ].a.coefficient( -1 ), Fraction( 1, 3 ) )
		self.assertEqual( branches[ 0 ].a.coefficient( 1 ), 1 )
		residual = curve.evaluate_series( branches[ 0 ].c, branches[ 0 ].a )
		self.assertTrue( residual.is_zero( ) )
		self.assertGreaterEqual( residual.prec, 4 )


	def test_complex_branches_satisfy_curve( self ):
		curve = A ** 3 - ( C ** 3 ).scale( Fraction( 1, 6 ) ) - C
		with self.assertLogs( 'exactalg', level='WARNING' ):
			branches = newton_puiseux( curve, order=6 )
		self.assertEqual( len( branches ), 3 )
		for branch in branches:
			self.assertFalse( branch.exact )
			residual = curve.evaluate_series( branch.c, branch.a )
			self.assertGreaterEqual( residual.prec, 4 )
			self.assertTrue( all( abs( v ) < 1e-10 for v in residual.coeffs ) )


if __name__ == '__main__':
	unittest.main( )
