import math
import os
import tempfile
import unittest
from fractions import Fraction

import numpy as np
import pandas as pd

from boogr import DegreeCapExceeded
from charts import Window
from equidist import (EmpiricalMeasure, DensityGrid, EquidistReport, EquidistRow, LINE_A_ZERO, LINE_C_ZERO,
                      ParameterLine, bifurcation_density, compare, density_from_values, experiment,
                      line_orbit, line_relation_roots, pcf_on_line, probe_dictionary, write_csv, write_pgm,
                      write_png, write_svg)
from exactalg import QOmega
from pcf import orbit_relation


def uniform_grid( resolution: int=4 ) -> DensityGrid:
	shape = ( resolution, resolution )
	values = np.full( shape, 1.0 / resolution ** 2 )
	return DensityGrid( Window( -2, 2, -2, 2 ), resolution, values, values.copy( ),
	                    np.zeros( shape, dtype=bool ), 1.0, 'test' )


class TestParameterLine( unittest.TestCase ):

	def test_parse_named_lines( self ):
		self.assertIs( ParameterLine.parse( 'c=0' ), LINE_C_ZERO )
		self.assertIs( ParameterLine.parse( ' a = 0 ' ), LINE_A_ZERO )


	def test_parse_affine( self ):
		line = ParameterLine.parse( 'affine:0,1,1/2,0' )
		self.assertEqual( line.a_coeffs, ( QOmega( Fraction( 1, 2 ) ), QOmega( ) ) )
		c, a = line.point( 2.0 )
		self.assertAlmostEqual( complex( c ), 2.0 )
		self.assertAlmostEqual( complex( a ), 0.5 )


	def test_invalid_lines( self ):
		with self.assertRaises( ValueError ):
			ParameterLine.parse( 'b=0' )
		with self.assertRaises( ValueError ):
			ParameterLine.parse( 'affine:1,2,3' )
		with self.assertRaises( ValueError ):
			ParameterLine.of( 'constant', (1,), (2,) )
		with self.assertRaises( ValueError ):
			ParameterLine.of( 'cubic', (0, 0, 0, 1), (0,) )


class TestLineRelations( unittest.TestCase ):

	def test_restriction_commutes_with_iteration( self ):
		line = ParameterLine.affine( 1, 2, Fraction( 1, 3 ), -1 )
		for i in ( 0, 1 ):
			orbit = line_orbit( line, i, 3 )
			for n, k in ( ( 0, 1 ), ( 1, 1 ), ( 0, 2 ), ( 1, 2 ) ):
				restricted = line.restrict( orbit_relation( i, n, k ).poly )
				self.assertEqual( restricted, orbit[ n + k ] - orbit[ n ], ( i, n, k ) )


	def test_vanishing_relation( self ):
		self.assertIsNone( line_relation_roots( LINE_A_ZERO, 0, 0, 1 ) )


	def test_arguments( self ):
		with self.assertRaises( ValueError ):
			line_orbit( LINE_C_ZERO, 2, 1 )
		with self.assertRaises( ValueError ):
			line_relation_roots( LINE_C_ZERO, 0, 0, 0 )
		with self.assertRaises( DegreeCapExceeded ):
			line_relation_roots( LINE_C_ZERO, 0, 2, 3 )


class TestEmpiricalMeasures( unittest.TestCase ):

	def test_unicritical_counts( self ):
		first = pcf_on_line( LINE_C_ZERO, 1 )
		self.assertEqual( len( first ), 1 )
		self.assertAlmostEqual( abs( first.atoms[ 0 ] ), 0.0, places=9 )
		second = pcf_on_line( LINE_C_ZERO, 2 )
		self.assertEqual( len( second ), 7 )
		self.assertLess( len( second ), len( pcf_on_line( LINE_C_ZERO, 3 ) ) )


	def test_second_cap_atoms( self ):
		# s^6 = -3 together with the origin
		radius = 3 ** ( 1 / 6 )
		moduli = sorted( abs( z ) for z in pcf_on_line( LINE_C_ZERO, 2 ).atoms )
		self.assertAlmostEqual( moduli[ 0 ], 0.0, places=9 )
		for m in moduli[ 1: ]:
			self.assertAlmostEqual( m, radius, places=9 )


	def test_cap_checks( self ):
		with self.assertRaises( ValueError ):
			pcf_on_line( LINE_C_ZERO, 0 )
		with self.assertRaises( DegreeCapExceeded ):
			pcf_on_line( LINE_C_ZERO, 5 )


	def test_weights( self ):
		measure = EmpiricalMeasure( ( 0j, 1j ) )
		self.assertEqual( measure.weights, ( 0.5, 0.5 ) )
		with self.assertRaises( ValueError ):
			EmpiricalMeasure( ( ) )
		with self.assertRaises( ValueError ):
			EmpiricalMeasure( ( 0j, 1j ), ( 1.0, ) )
		with self.assertRaises( ValueError ):
			EmpiricalMeasure( ( 0j, 1j ), ( 0.5, 0.6 ) )


class TestDensity( unittest.TestCase ):

	def setUp( self ):
		x = np.arange( 5 ) * 0.5
		self.x, self.y = np.meshgrid( x, x )


	def test_constant_laplacian( self ):
		normalized, raw, mask = density_from_values( self.x ** 2 + self.y ** 2, spacing=( 0.5, 0.5 ) )
		self.assertEqual( raw.shape, ( 3, 3 ) )
		self.assertTrue( np.allclose( raw, 4 * 0.25 / ( 2 * math.pi ) ) )
		self.assertTrue( np.allclose( normalized, 1 / 9 ) )
		self.assertFalse( mask.any( ) )


	def test_harmonic_input_has_no_mass( self ):
		_, raw, _ = density_from_values( self.x ** 2 - self.y ** 2, spacing=( 0.5, 0.5 ) )
		self.assertTrue( np.allclose( raw, 0.0, atol=1e-12 ) )


	def test_normalization_ignores_scale( self ):
		values = self.x ** 2 + 3 * self.y ** 2 + self.x * self.y
		first, _, _ = density_from_values( values, spacing=( 0.5, 0.5 ) )
		second, _, _ = density_from_values( 7 * values, spacing=( 0.5, 0.5 ) )
		self.assertTrue( np.allclose( first, second ) )


	def test_mask_spreads_to_neighbours( self ):
		undecided = np.zeros( ( 5, 5 ), dtype=bool )
		undecided[ 0, 2 ] = True
		_, _, mask = density_from_values( self.x ** 2, undecided )
		self.assertEqual( int( mask.sum( ) ), 1 )
		self.assertTrue( mask[ 0, 1 ] )
		undecided[ 0, 2 ] = False
		undecided[ 2, 2 ] = True
		normalized, _, mask = density_from_values( self.x ** 2, undecided )
		self.assertEqual( int( mask.sum( ) ), 5 )
		self.assertEqual( float( normalized[ 1, 1 ] ), 0.0 )


	def test_padding_required( self ):
		with self.assertRaises( ValueError ):
			density_from_values( np.zeros( ( 2, 5 ) ) )
		with self.assertRaises( ValueError ):
			density_from_values( np.zeros( 9 ) )


	def test_unicritical_density( self ):
		grid = bifurcation_density( LINE_C_ZERO, resolution=16 )
		self.assertEqual( grid.values.shape, ( 16, 16 ) )
		self.assertGreater( grid.mass, 0.0 )
		self.assertAlmostEqual( float( grid.values.sum( ) ), 1.0, places=9 )
		self.assertTrue( ( grid.values >= 0 ).all( ) )
		hx, hy = grid.spacing
		corner = grid.cell_centers( )[ 0, 0 ]
		self.assertAlmostEqual( corner, complex( -1.5 + hx / 2, -1.5 + hy / 2 ) )


	def test_density_defaults_to_first_critical_point( self ):
		line = ParameterLine.parse( 'affine:0,1,1/2,0' )
		default = bifurcation_density( line, resolution=8 )
		explicit = bifurcation_density( line, resolution=8, critical='g0' )
		self.assertTrue( np.array_equal( default.raw, explicit.raw ) )
		self.assertTrue( np.array_equal( default.mask, explicit.mask ) )


	def test_density_arguments( self ):
		with self.assertRaises( ValueError ):
			bifurcation_density( LINE_C_ZERO, resolution=0 )
		with self.assertRaises( ValueError ):
			bifurcation_density( LINE_C_ZERO, resolution=8, critical='g2' )


class TestComparison( unittest.TestCase ):

	def setUp( self ):
		self.grid = uniform_grid( )


	def test_dictionary_size( self ):
		self.assertEqual( len( probe_dictionary( self.grid.window ) ), 64 )


	def test_density_against_itself( self ):
		measure = EmpiricalMeasure.from_density( self.grid )
		self.assertEqual( len( measure ), 16 )
		self.assertAlmostEqual( compare( measure, self.grid ), 0.0, places=12 )


	def test_translation_is_detected( self ):
		measure = EmpiricalMeasure.from_density( self.grid )
		self.assertGreater( compare( measure.translated( 1.5 ), self.grid ), 0.01 )


class TestReport( unittest.TestCase ):

	def test_monotone_verdict( self ):
		rows = [ EquidistRow( cap=2, atoms=7, distance=0.3 ), EquidistRow( cap=3, atoms=40, distance=0.1 ) ]
		report = EquidistReport( line='c=0', resolution=16, critical='max', seed=0, mass=1.0,
		                         masked_fraction=0.0, rows=rows )
		self.assertTrue( report.monotone )
		report.rows.append( EquidistRow( cap=4, atoms=200, distance=0.2 ) )
		self.assertFalse( report.monotone )
		self.assertEqual( len( report.to_json( )[ 'rows' ] ), 3 )


	def test_small_experiment( self ):
		report, grid, measures = experiment( LINE_C_ZERO, caps=( 1, 2 ), resolution=16 )
		self.assertEqual( report.critical, 'g0' )
		self.assertEqual( [ row.atoms for row in report.rows ], [ 1, 7 ] )
		self.assertEqual( [ m.cap for m in measures ], [ 1, 2 ] )
		self.assertEqual( report.mass, grid.mass )
		self.assertTrue( all( row.distance >= 0 for row in report.rows ) )


class TestWriters( unittest.TestCase ):

	def setUp( self ):
		self.grid = uniform_grid( )
		self.folder = tempfile.TemporaryDirectory( )


	def tearDown( self ):
		self.folder.cleanup( )


	def test_pgm_header( self ):
		path = os.path.join( self.folder.name, 'density.pgm' )
		write_pgm( self.grid, path )
		with open( path, encoding='ascii' ) as f:
			lines = f.read( ).splitlines( )
		self.assertEqual( lines[ :3 ], [ 'P2', '4 4', '255' ] )
		self.assertEqual( len( lines ), 7 )
		self.assertEqual( lines[ 3 ].split( ), [ '255' ] * 4 )


	def test_csv_rows( self ):
		path = os.path.join( self.folder.name, 'density.csv' )
		write_csv( self.grid, path )
		frame = pd.read_csv( path )
		self.assertEqual( list( frame.columns ), [ 're', 'im', 'density', 'raw', 'masked' ] )
		self.assertEqual( len( frame ), 16 )


	def test_images( self ):
		png = os.path.join( self.folder.name, 'density.png' )
		svg = os.path.join( self.folder.name, 'density.svg' )
		write_png( self.grid, png )
		write_svg( self.grid, svg, atoms=[ 0j ] )
		self.assertGreater( os.path.getsize( png ), 0 )
		with open( svg, encoding='utf-8' ) as f:
			self.assertIn( '<svg', f.read( ) )


if __name__ == '__main__':
	unittest.main( )
