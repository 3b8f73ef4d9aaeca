import math
import unittest

from boogr import CurveDetected, DegreeCapExceeded
from exactalg import A, C, QOmega
from pcf import certify_pcf, newton_oracle, orbit_relation, pcf_enumerate, pcf_solve, relation_catalog


class TestRelations( unittest.TestCase ):

	def test_fixed_critical_points( self ):
		self.assertEqual( orbit_relation( 0, 0, 1 ).poly, A ** 3 )
		self.assertEqual( orbit_relation( 1, 0, 1 ).degree, 3 )
		self.assertEqual( orbit_relation( 1, 1, 1 ).witness( ), ( 1, 1, 1 ) )


	def test_degree_cap( self ):
		with self.assertRaises( DegreeCapExceeded ):
			orbit_relation( 0, 3, 2 )
		with self.assertRaises( ValueError ):
			orbit_relation( 2, 0, 1 )


	def test_catalog_size( self ):
		catalog = relation_catalog( 9 )
		self.assertEqual( len( catalog ), 6 )
		self.assertTrue( all( r.degree <= 9 for r in catalog ) )


class TestSolve( unittest.TestCase ):

	def setUp( self ):
		self.points = pcf_solve( orbit_relation( 0, 0, 1 ), orbit_relation( 1, 0, 1 ) )


	def test_fixed_critical_solutions( self ):
		self.assertEqual( len( self.points ), 3 )
		targets = [ -1j * math.sqrt( 6 ), 0j, 1j * math.sqrt( 6 ) ]
		for point, target in zip( sorted( self.points, key=lambda p: p.c.imag ), targets ):
			self.assertAlmostEqual( abs( point.c - target ), 0.0, places=9 )
			self.assertAlmostEqual( abs( point.a ), 0.0, places=9 )
			self.assertTrue( point.certified )


	def test_exact_origin( self ):
		exact = [ p for p in self.points if p.exact is not None ]
		self.assertEqual( len( exact ), 1 )
		self.assertEqual( exact[ 0 ].exact, ( QOmega( ), QOmega( ) ) )


	def test_newton_oracle_agrees( self ):
		found = newton_oracle( orbit_relation( 0, 0, 1 ).poly, orbit_relation( 1, 0, 1 ).poly, 3.0, seeds=20 )
		self.assertEqual( len( found ), 3 )
		for ( c, a ), point in zip( found, sorted( self.points, key=lambda p: p.c.imag ) ):
			self.assertAlmostEqual( abs( c - point.c ), 0.0, places=8 )
			self.assertAlmostEqual( abs( a ), 0.0, places=6 )


	def test_common_component( self ):
		with self.assertRaises( CurveDetected ):
			pcf_solve( A, A * C )


class TestCertify( unittest.TestCase ):

	def test_exact_escape( self ):
		self.assertFalse( certify_pcf( QOmega( 0 ), QOmega( 2 ) ) )


	def test_exact_origin( self ):
		self.assertTrue( certify_pcf( QOmega( ), QOmega( ) ) )


	def test_orbit_cap_checked( self ):
		with self.assertRaises( ValueError ):
			certify_pcf( 0j, 0j, orbit_cap=0 )


class TestEnumerate( unittest.TestCase ):

	def test_smallest_cap( self ):
		found = pcf_enumerate( 3 )
		self.assertEqual( found.pairs, 1 )
		self.assertEqual( len( found.points ), 3 )
		self.assertAlmostEqual( found.box, math.sqrt( 6 ), places=9 )
		for point in found.points:
			self.assertAlmostEqual( point.green, 0.0, delta=1e-9 )
		self.assertEqual( len( found.to_json( )[ 'points' ] ), 3 )


	def test_cap_floor( self ):
		with self.assertRaises( ValueError ):
			pcf_enumerate( 2 )


if __name__ == '__main__':
	unittest.main( )
