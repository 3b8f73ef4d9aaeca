import cmath
import math
import unittest
from fractions import Fraction

from boogr import DegreeCapExceeded
from classify import (branch_growth, collision_check, collision_curve, commutator_on_curve, critical_set,
                      critical_set_permutation_check, root_order, symmetry_check, symmetry_curve, symmetry_order,
                      z_membership, z_probe, z_search)
from exactalg import A, C


CUBE_ROOT = cmath.exp( 2j * math.pi / 3 )


class TestRootsOfUnity( unittest.TestCase ):

	def test_orders( self ):
		self.assertEqual( root_order( 1 ), 1 )
		self.assertEqual( root_order( -1 ), 2 )
		self.assertEqual( root_order( 1j ), 4 )
		self.assertEqual( root_order( CUBE_ROOT ), 3 )


	def test_symmetry_orders( self ):
		self.assertEqual( symmetry_order( -1 ), 1 )
		self.assertEqual( symmetry_order( 1j ), 2 )
		self.assertIsNone( symmetry_order( CUBE_ROOT ) )


	def test_not_a_root_of_unity( self ):
		with self.assertRaises( ValueError ):
			root_order( 2 )


class TestSymmetryCurve( unittest.TestCase ):

	def setUp( self ):
		self.curve = symmetry_curve( )
		self.a_real = ( 7 / 12 ) ** ( 1 / 3 )


	def test_equation( self ):
		self.assertEqual( self.curve, A ** 3 * 12 - C ** 3 - C * 6 )


	def test_reflection_commutes_on_curve( self ):
		self.assertTrue( all( r.is_zero( ) for r in commutator_on_curve( 0, -1, self.curve ) ) )
		self.assertFalse( all( r.is_zero( ) for r in commutator_on_curve( 0, -1, A ) ) )


	def test_exact_membership( self ):
		on_curve = z_membership( 0, 0, -1, 0, 0, mode='exact' )
		self.assertTrue( on_curve.member )
		self.assertEqual( on_curve.pair, ( 0, 1 ) )
		off_curve = z_membership( 0, 0, -1, 1, 1, mode='exact' )
		self.assertFalse( off_curve.member )
		self.assertFalse( off_curve.commutes )


	def test_numeric_search( self ):
		found = z_search( 0, -1, 1, self.a_real )
		self.assertEqual( found.found, 0 )
		self.assertEqual( found.witness.pair, ( 0, 1 ) )
		missed = z_search( 0, -1, 1, 1 )
		self.assertIsNone( missed.found )
		self.assertTrue( missed.to_json( )[ 'exhausted' ] )


	def test_probe_finds_curve( self ):
		probe = z_probe( 0, 0, -1 )
		self.assertEqual( probe.kind, 'curve' )
		self.assertTrue( probe.exact )
		self.assertTrue( probe.curve.associates( self.curve ) )


	def test_probe_without_symmetry_order( self ):
		self.assertEqual( z_probe( 1, 1, CUBE_ROOT ).kind, 'empty' )


	def test_critical_sets_permuted( self ):
		self.assertTrue( critical_set_permutation_check( 1, self.a_real, 0, 2 ) )


	def test_green_symmetry( self ):
		check = symmetry_check( count=5, seed=1 )
		self.assertEqual( check.samples, 5 )
		self.assertTrue( check.passed )


class TestCollisions( unittest.TestCase ):

	def test_collision_curves( self ):
		self.assertEqual( collision_curve( 1, 1 ), ( C ** 3 ).scale( Fraction( -1, 6 ) ) )
		self.assertEqual( collision_curve( 0, 1 ), C - A ** 3 )
		with self.assertRaises( DegreeCapExceeded ):
			collision_curve( 5, 0 )


	def test_green_on_collision_curve( self ):
		check = collision_check( 1, 2, count=5 )
		self.assertTrue( check.passed, check.max_deviation )


class TestCriticalSets( unittest.TestCase ):

	def test_small_sets( self ):
		self.assertEqual( critical_set( 0, 0, 1 ), [ 0j ] )
		self.assertEqual( len( critical_set( 1, 0, 1 ) ), 2 )
		self.assertEqual( critical_set( 1, 0, 0 ), [ ] )


class TestBranchGrowth( unittest.TestCase ):

	def test_line_a_zero( self ):
		growth = branch_growth( A, steps=4 )
		self.assertEqual( growth.bound, 1 )
		self.assertEqual( growth.classification( 0 ), 'Bounded' )
		self.assertEqual( growth.classification( 1 ), 'Escaping' )
		self.assertEqual( growth.rate( 1 ), 1 )
		self.assertEqual( growth.critical[ 1 ].orders[ :2 ], ( -3, -9 ) )


	def test_growth_stable_under_more_steps( self ):
		fixed_critical = A ** 3 - ( C ** 3 ).scale( Fraction( 1, 6 ) ) - C
		for curve in ( A, C, fixed_critical ):
			short = branch_growth( curve, steps=6 )
			long = branch_growth( curve, steps=8 )
			for i in ( 0, 1 ):
				self.assertEqual( short.classification( i ), long.classification( i ) )
				self.assertEqual( short.rate( i ), long.rate( i ) )
				if long.classification( i ) == 'Escaping':
					self.assertTrue( long.critical[ i ].stable )
		growth = branch_growth( fixed_critical, steps=8 )
		self.assertEqual( growth.classification( 0 ), 'Escaping' )
		self.assertEqual( growth.classification( 1 ), 'Bounded' )
		self.assertEqual( growth.rate( 0 ), 1 )


	def test_steps_checked( self ):
		with self.assertRaises( ValueError ):
			branch_growth( A, steps=9 )


if __name__ == '__main__':
	unittest.main( )
