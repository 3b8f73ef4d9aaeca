import cmath
import io
import json
import math
import os
import tempfile
import unittest
from fractions import Fraction

from pydantic import ValidationError

from cli import (EXIT_ERROR, EXIT_OK, RunConfig, build_parser, load_config, parse_ints, parse_number, parse_zeta,
                 run)


class TestParsing( unittest.TestCase ):

	def test_numbers( self ):
		self.assertEqual( parse_number( '1/2' ), Fraction( 1, 2 ) )
		self.assertEqual( parse_number( ' -3 ' ), Fraction( -3 ) )
		self.assertEqual( parse_number( '1+2i' ), complex( 1, 2 ) )
		self.assertEqual( parse_ints( '2,3,,4' ), [ 2, 3, 4 ] )


	def test_roots_of_unity( self ):
		self.assertEqual( parse_zeta( '-1' ), Fraction( -1 ) )
		self.assertEqual( parse_zeta( 'i' ), 1j )
		self.assertAlmostEqual( parse_zeta( 'root:1/3' ), cmath.exp( 2j * math.pi / 3 ) )
		with self.assertRaises( ValueError ):
			parse_zeta( 'omega' )


class TestConfig( unittest.TestCase ):

	def test_defaults( self ):
		config = RunConfig( )
		self.assertEqual( config.float_mode, 'double' )
		self.assertEqual( config.exact_degree_cap, 81 )
		self.assertEqual( config.iteration_cap, 300 )


	def test_validation( self ):
		with self.assertRaises( ValidationError ):
			RunConfig( float_mode='quad' )
		with self.assertRaises( ValidationError ):
			RunConfig( dps=0 )
		with self.assertRaises( ValidationError ):
			RunConfig( tol=0.0 )


	def test_flags_override_file( self ):
		with tempfile.TemporaryDirectory( ) as folder:
			path = os.path.join( folder, 'run.json' )
			with open( path, 'w', encoding='utf-8' ) as f:
				json.dump( { 'seed': 5, 'threads': 3, 'q_cap': 2 }, f )
			args = build_parser( ).parse_args( [ 'bottcher', '--config', path, '--seed', '7' ] )
			config = load_config( args )
		self.assertEqual( ( config.seed, config.threads, config.q_cap ), ( 7, 3, 2 ) )


	def test_equidist_uses_first_critical_point( self ):
		self.assertEqual( build_parser( ).parse_args( [ 'equidist' ] ).critical, 'g0' )
		args = build_parser( ).parse_args( [ 'equidist', '--critical', 'max' ] )
		self.assertEqual( args.critical, 'max' )


class TestRun( unittest.TestCase ):

	def setUp( self ):
		self.stream = io.StringIO( )


	def test_unknown_command( self ):
		self.assertEqual( run( [ 'bogus' ], self.stream ), EXIT_ERROR )
		self.assertEqual( self.stream.getvalue( ), '' )


	def test_bottcher_report( self ):
		self.assertEqual( run( [ 'bottcher', '--order', '4', '--verify' ], self.stream ), EXIT_OK )
		payload = json.loads( self.stream.getvalue( ) )
		self.assertEqual( payload[ 'expansion' ][ 'order' ], 4 )
		self.assertTrue( payload[ 'functional_equation' ][ 'passed' ] )
		self.assertTrue( payload[ 'bounds' ][ 'passed' ] )
		self.assertEqual( payload[ 'bounds' ][ 'exceptions' ], [ [ 2, 3, 0 ] ] )


	def test_green_at_origin( self ):
		self.assertEqual( run( [ 'green', '--c', '0', '--a', '0' ], self.stream ), EXIT_OK )
		record = json.loads( self.stream.getvalue( ) )
		self.assertAlmostEqual( float( record[ 'G' ] ), 0.0, delta=1e-9 )


	def test_height( self ):
		self.assertEqual( run( [ 'green', '--c', '1/5', '--a', '0', '--height' ], self.stream ), EXIT_OK )
		self.assertIn( 'height', json.loads( self.stream.getvalue( ) ) )


	def test_multiplier_valuations( self ):
		argv = [ 'multiplier-valuations', '--d', '2', '--m', '1', '--t-minpoly', '0,1', '--primes', '2,3' ]
		self.assertEqual( run( argv, self.stream ), EXIT_OK )
		self.assertTrue( json.loads( self.stream.getvalue( ) )[ 'passed' ] )


	def test_branch_growth( self ):
		argv = [ 'classify', '--check', 'branch', '--curve', 'a=0', '--steps', '4' ]
		self.assertEqual( run( argv, self.stream ), EXIT_OK )
		self.assertIn( 'growth', json.loads( self.stream.getvalue( ) ) )


	def test_handler_errors( self ):
		self.assertEqual( run( [ 'pcf', '--max-orbit', '0' ], self.stream ), EXIT_ERROR )
		self.assertEqual( self.stream.getvalue( ), '' )


	def test_output_file( self ):
		with tempfile.TemporaryDirectory( ) as folder:
			path = os.path.join( folder, 'bottcher.json' )
			self.assertEqual( run( [ 'bottcher', '--order', '2', '--out', path ], self.stream ), EXIT_OK )
			with open( path, encoding='utf-8' ) as f:
				self.assertEqual( json.load( f )[ 'expansion' ][ 'order' ], 2 )
		self.assertEqual( self.stream.getvalue( ), '' )


if __name__ == '__main__':
	unittest.main( )
