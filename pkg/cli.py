'''
  ******************************************************************************************
      Assembly:                Cubo
      Filename:                cli.py
      Author:                  Terry D. Eppler
      Created:                 05-31-2022

      Last Modified By:        Terry D. Eppler
      Last Modified On:        10-17-2026
  ******************************************************************************************
  <copyright file="cli.py" company="Terry D. Eppler">

	 Cubo is a computational toolkit for the arithmetic dynamics of cubic polynomials

     Permission is hereby granted, free of charge, to any person obtaining a copy
     of this software and associated documentation files (the “Software”),
     to deal in the Software without restriction,
     including without limitation the rights to use,
     copy, modify, merge, publish, distribute, sublicense,
     and/or sell copies of the Software,
     and to permit persons to whom the Software is furnished to do so,
     subject to the following conditions:

     The above copyright notice and this permission notice shall be included in all
     copies or substantial portions of the Software.

     THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED,
     INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
     FITNESS FOR A PARTICULAR PURPOSE AND NON-INFRINGEMENT.
     IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM,
     DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE,
     ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
     DEALINGS IN THE SOFTWARE.

     You can contact me at:  terryeppler@gmail.com or eppler.terry@epa.gov

  </copyright>
  <summary>
    cli.py

    Command line entry point: python cli.py <subcommand> [options]. Subcommands bottcher,
    green, perm, pcf, classify, multiplier-valuations, equidist and selftest write sorted
    JSON (CSV for grids) to stdout or --out.
  </summary>
  ******************************************************************************************
'''
from __future__ import annotations
import argparse
import cmath
import io
import json
import logging
import math
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import mpmath
import numpy as np
import pandas as pd
from pydantic import BaseModel, field_validator

import boettcher
import classify
import equidist
import green
import padicval
import pcf
import periodic
from boogr import Error, ErrorDialog, Undecided
from dynamics import CubicParam
from exactalg import A, BiPoly, C, QOmega, rational_str, valuation

logger = logging.getLogger( __name__ )

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDECIDED = 2
FLOAT_MODES = ('double', 'extended')
CSV_FORMAT = '%.12e'
LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'


class RunConfig( BaseModel ):
	'''

		Purpose:
		--------
		Settings shared by every subcommand. Loaded from --config JSON, explicit flags win.

	'''
	float_mode: str='double'
	dps: int=40
	exact_degree_cap: int=81
	iteration_cap: int=300
	orbit_cap: int=64
	tol: float=1e-12
	tau: float=0.0
	q_cap: int=4
	out: Optional[ str ]=None
	seed: int=0
	threads: int=1
	resolution: int=512

	@field_validator( 'float_mode' )
	@classmethod
	def _mode( cls, value: str ) -> str:
		if value not in FLOAT_MODES:
			raise ValueError( f'float_mode must be one of {FLOAT_MODES}' )
		return value


	@field_validator( 'dps', 'exact_degree_cap', 'iteration_cap', 'orbit_cap', 'q_cap', 'threads', 'resolution' )
	@classmethod
	def _positive( cls, value: int ) -> int:
		if value < 1:
			raise ValueError( 'caps must be positive' )
		return value


	@field_validator( 'tol' )
	@classmethod
	def _tol( cls, value: float ) -> float:
		if value <= 0:
			raise ValueError( 'tol must be positive' )
		return value


class CuboParser( argparse.ArgumentParser ):
	'''Usage errors exit with status 1 and nothing on stdout.'''

	def error( self, message: str ) -> None:
		self.print_usage( sys.stderr )
		self.exit( EXIT_ERROR, f'{self.prog}: error: {message}\n' )


# ------------------------------------------------------------------------------------------
# argument parsing
# ------------------------------------------------------------------------------------------

def parse_number( text: str ) -> object:
	'''Rational strings stay exact ('1/2', '-3'); anything else is read as a complex number.'''
	text = text.strip( )
	try:
		return Fraction( text )
	except ValueError:
		return complex( text.replace( 'i', 'j' ) )


def parse_zeta( text: str ) -> object:
	'''1, -1, i, -i or root:r/n for exp(2 pi i r / n).'''
	text = text.strip( )
	if text in ('1', '-1'):
		return Fraction( text )
	if text == 'i':
		return 1j
	if text == '-i':
		return -1j
	if text.startswith( 'root:' ):
		angle = Fraction( text[ len( 'root:' ): ] )
		return cmath.exp( 2j * math.pi * angle.numerator / angle.denominator )
	raise ValueError( f'cannot read root of unity "{text}"' )


def parse_ints( text: str ) -> List[ int ]:
	return [ int( v ) for v in text.split( ',' ) if v.strip( ) ]


def _common( ) -> argparse.ArgumentParser:
	common = argparse.ArgumentParser( add_help=False )
	common.add_argument( '--config', default=None, help='JSON file with RunConfig fields' )
	common.add_argument( '--out', default=None, help='output path, stdout when absent' )
	common.add_argument( '--seed', type=int, default=None )
	common.add_argument( '--threads', type=int, default=None )
	common.add_argument( '--tol', type=float, default=None )
	common.add_argument( '--cap', type=int, default=None, help='iteration cap' )
	common.add_argument( '--dps', type=int, default=None )
	common.add_argument( '--float-mode', dest='float_mode', choices=FLOAT_MODES, default=None )
	common.add_argument( '--resolution', type=int, default=None )
	common.add_argument( '--log-level', dest='log_level', default='WARNING',
	                     choices=('DEBUG', 'INFO', 'WARNING', 'ERROR') )
	return common


def build_parser( ) -> CuboParser:
	common = _common( )
	parser = CuboParser( prog='cubo', description='Arithmetic dynamics of z^3/3 - c z^2/2 + a^3' )
	sub = parser.add_subparsers( dest='command', required=True, parser_class=CuboParser )

	p = sub.add_parser( 'bottcher', parents=[ common ], help='Boettcher coefficients' )
	p.add_argument( '--order', type=int, default=boettcher.DEFAULT_ORDER )
	p.add_argument( '--verify', action='store_true' )

	p = sub.add_parser( 'green', parents=[ common ], help='escape rates g0, g1, G' )
	p.add_argument( '--c', default='0' )
	p.add_argument( '--a', default='0' )
	p.add_argument( '--height', action='store_true', help='canonical height of a rational parameter' )
	p.add_argument( '--grid', type=int, default=None, help='N x N real grid of (c, a)' )
	p.add_argument( '--box', type=float, default=2.0 )

	p = sub.add_parser( 'perm', parents=[ common ], help='Per_m(lambda) samples' )
	p.add_argument( '--m', type=int, required=True )
	p.add_argument( '--lambda', dest='lam', default='0' )
	p.add_argument( '--c-grid', dest='c_grid', type=int, default=None )
	p.add_argument( '--box', type=float, default=2.0 )

	p = sub.add_parser( 'pcf', parents=[ common ], help='PCF parameter enumeration' )
	p.add_argument( '--max-orbit', dest='max_orbit', type=int, default=2 )

	p = sub.add_parser( 'classify', parents=[ common ], help='special curve checks' )
	p.add_argument( '--check', required=True, choices=('symmetry', 'collision', 'zset', 'branch') )
	p.add_argument( '--m', type=int, default=1 )
	p.add_argument( '--k', type=int, default=1 )
	p.add_argument( '--q', type=int, default=0 )
	p.add_argument( '--zeta', default='-1' )
	p.add_argument( '--curve', default='a=0', choices=('a=0', 'c=0', 'symmetry') )
	p.add_argument( '--steps', type=int, default=6 )
	p.add_argument( '--count', type=int, default=20 )
	p.add_argument( '--at', default=None, help='c,a point for the q search of --check zset' )

	p = sub.add_parser( 'multiplier-valuations', parents=[ common ], help='Newton polygon check' )
	p.add_argument( '--d', type=int, required=True )
	p.add_argument( '--m', type=int, required=True )
	p.add_argument( '--t-minpoly', dest='t_minpoly', required=True,
	                help='rational coefficients, lowest degree first, comma separated' )
	p.add_argument( '--primes', default='2,3,5,7,11' )

	p = sub.add_parser( 'equidist', parents=[ common ], help='equidistribution experiment' )
	p.add_argument( '--line', default='c=0' )
	p.add_argument( '--caps', default='2,3,4' )
	p.add_argument( '--critical', default='g0', choices=equidist.CRITICAL_MODES )
	p.add_argument( '--png', default=None )
	p.add_argument( '--svg', default=None )
	p.add_argument( '--pgm', default=None )
	p.add_argument( '--csv', default=None )

	p = sub.add_parser( 'selftest', parents=[ common ], help='acceptance checks' )
	p.add_argument( '--full', action='store_true' )
	return parser


def load_config( args: argparse.Namespace ) -> RunConfig:
	values: Dict[ str, object ] = { }
	if args.config:
		with open( args.config, 'r', encoding='utf-8' ) as f:
			values.update( json.load( f ) )
	flags = { 'out': args.out, 'seed': args.seed, 'threads': args.threads, 'tol': args.tol,
	          'iteration_cap': args.cap, 'dps': args.dps, 'float_mode': args.float_mode,
	          'resolution': args.resolution }
	values.update( { k: v for k, v in flags.items( ) if v is not None } )
	return RunConfig( **values )


# ------------------------------------------------------------------------------------------
# output
# ------------------------------------------------------------------------------------------

def to_json_text( payload: object ) -> str:
	return json.dumps( payload, sort_keys=True, indent=2 ) + '\n'


def to_csv_text( frame: pd.DataFrame ) -> str:
	buffer = io.StringIO( )
	frame.to_csv( buffer, index=False, float_format=CSV_FORMAT, lineterminator='\n' )
	return buffer.getvalue( )


def emit( text: str, config: RunConfig, stream=None ) -> None:
	if config.out:
		with open( config.out, 'w', encoding='utf-8', newline='\n' ) as f:
			f.write( text )
	else:
		( stream or sys.stdout ).write( text )


def _pair( z: complex ) -> List[ str ]:
	z = complex( z )
	return [ repr( z.real ), repr( z.imag ) ]


def _scalar( value: object ) -> object:
	if isinstance( value, Fraction ):
		return rational_str( value )
	return _pair( value )


# ------------------------------------------------------------------------------------------
# handlers: each returns (text, undecided, total)
# ------------------------------------------------------------------------------------------

Outcome = Tuple[ str, int, int ]


def run_bottcher( args: argparse.Namespace, config: RunConfig ) -> Outcome:
	expansion = boettcher.bottcher_coeffs( args.order )
	payload: Dict[ str, object ] = { 'expansion': expansion.to_json( ), 'seed': config.seed }
	if args.verify:
		payload[ 'functional_equation' ] = boettcher.verify_functional_equation( args.order, expansion ).model_dump( )
		payload[ 'bounds' ] = boettcher.coefficient_bounds_report( args.order, expansion ).model_dump( )
	return to_json_text( payload ), 0, 1


def _green_record( c: object, a: object, config: RunConfig ) -> Tuple[ Dict[ str, object ], bool ]:
	p = CubicParam.complex( complex( c ), complex( a ), extended=config.float_mode == 'extended' )
	bounds = green.arch_bounds( p.c, p.a, config.tau )
	record: Dict[ str, object ] = { 'c': _scalar( c ), 'a': _scalar( a ) }
	try:
		g0 = green.green_arch( p, 0j, config.tol, config.iteration_cap, bounds )
		g1 = green.green_arch( p, complex( p.c ), config.tol, config.iteration_cap, bounds )
	except Undecided as e:
		record.update( { 'g0': None, 'g1': None, 'G': None, 'err': None, 'undecided': e.heading } )
		return record, True
	record.update( { 'g0': repr( g0.value ), 'g1': repr( g1.value ), 'G': repr( max( g0.value, g1.value ) ),
	                 'err': repr( max( g0.error_bound, g1.error_bound ) ) } )
	return record, False


def run_green( args: argparse.Namespace, config: RunConfig ) -> Outcome:
	if args.grid:
		axis = np.linspace( -args.box, args.box, args.grid )
		cc, aa = np.meshgrid( axis, axis )
		g0, u0 = green.green_grid( cc, aa, 0j, max( config.tol, 1e-12 ), config.iteration_cap )
		g1, u1 = green.green_grid( cc, aa, cc, max( config.tol, 1e-12 ), config.iteration_cap )
		frame = pd.DataFrame( { 're_c': cc.ravel( ), 'im_c': 0.0, 're_a': aa.ravel( ), 'im_a': 0.0,
		                        'g0': g0.ravel( ), 'g1': g1.ravel( ) } )
		undecided = int( ( u0 | u1 ).sum( ) )
		return to_csv_text( frame ), undecided, frame.shape[ 0 ]
	c, a = parse_number( args.c ), parse_number( args.a )
	record, undecided = _green_record( c, a, config )
	if args.height:
		if not ( isinstance( c, Fraction ) and isinstance( a, Fraction ) ):
			raise ValueError( 'heights need rational c and a' )
		report = green.height_report( c, a, tol=max( config.tol, 1e-12 ), cap=config.iteration_cap )
		record[ 'height' ] = report.model_dump( )
	record[ 'seed' ] = config.seed
	return to_json_text( record ), int( undecided ), 1


def run_perm( args: argparse.Namespace, config: RunConfig ) -> Outcome:
	lam = parse_number( args.lam )
	if not args.c_grid:
		factors = periodic.perm_factors( args.m, lam ) if isinstance( lam, Fraction ) else [ ]
		poly = periodic.perm_poly( args.m, lam if isinstance( lam, Fraction ) else None )
		payload = { 'perm': poly.to_json( ), 'seed': config.seed,
		            'factors': [ { 'factor': f.to_json( ), 'multiplicity': k } for f, k in factors ] }
		return to_json_text( payload ), 0, 1
	rows = [ ]
	for c in np.linspace( -args.box, args.box, args.c_grid ):
		for a in periodic.perm_sample( args.m, lam, float( c ) ):
			ok = periodic.has_cycle( float( c ), a, args.m, complex( lam ) )
			rows.append( { 're_c': float( c ), 'im_c': 0.0, 're_a': a.real, 'im_a': a.imag,
			               'exact_period_ok': int( ok ) } )
	frame = pd.DataFrame( rows, columns=[ 're_c', 'im_c', 're_a', 'im_a', 'exact_period_ok' ] )
	return to_csv_text( frame ), 0, max( 1, len( rows ) )


def run_pcf( args: argparse.Namespace, config: RunConfig ) -> Outcome:
	if args.max_orbit < 1:
		raise ValueError( 'max-orbit must be positive' )
	maxdeg = min( 3 ** args.max_orbit, config.exact_degree_cap )
	result = pcf.pcf_enumerate( maxdeg, config.orbit_cap, config.threads )
	payload = result.to_json( )
	payload[ 'seed' ] = config.seed
	undecided = sum( 1 for p in result.points if not p.certified )
	return to_json_text( payload ), undecided, max( 1, len( result.points ) )


def _named_curve( name: str ) -> BiPoly:
	if name == 'a=0':
		return A
	if name == 'c=0':
		return C
	return classify.symmetry_curve( )


def run_classify( args: argparse.Namespace, config: RunConfig ) -> Outcome:
	payload: Dict[ str, object ] = { 'check': args.check, 'seed': config.seed }
	if args.check == 'symmetry':
		on_curve = classify.commutator_on_curve( 0, -1, classify.symmetry_curve( ) )
		off_curve = classify.commutator_on_curve( 0, -1, A )
		check = classify.symmetry_check( args.count, config.seed )
		payload.update( { 'remainders_on_curve': [ r.to_json( ) for r in on_curve ],
		                  'vanishes_on_curve': all( r.is_zero( ) for r in on_curve ),
		                  'vanishes_on_a_zero': all( r.is_zero( ) for r in off_curve ),
		                  'green': check.to_json( ) } )
	elif args.check == 'collision':
		curve = classify.collision_curve( args.m, args.k, config.exact_degree_cap )
		check = classify.collision_check( args.m, args.k, args.count, config.seed )
		payload.update( { 'curve': curve.to_json( ), 'green': check.to_json( ) } )
	elif args.check == 'zset':
		zeta = parse_zeta( args.zeta )
		probe = classify.z_probe( args.q, args.m, zeta, config.seed )
		payload[ 'probe' ] = probe.to_json( )
		if args.at:
			c, a = ( parse_number( v ) for v in args.at.split( ',' ) )
			payload[ 'search' ] = classify.z_search( args.m, zeta, c, a, config.q_cap ).to_json( )
	else:
		growth = classify.branch_growth( _named_curve( args.curve ), 0, args.steps )
		payload[ 'growth' ] = growth.to_json( )
	return to_json_text( payload ), 0, 1


def run_multiplier( args: argparse.Namespace, config: RunConfig ) -> Outcome:
	t_minpoly = [ Fraction( v ) for v in args.t_minpoly.split( ',' ) ]
	spec = padicval.multiplier_poly( args.d, t_minpoly, args.m )
	report = padicval.verify_prop_multiplier( spec, parse_ints( args.primes ) )
	reduced = padicval.rational_coefficients( spec.lambda_poly )[ report.zero_roots: ]
	polygons = [ padicval.newton_polygon( reduced, p ).to_json( ) for p in parse_ints( args.primes ) ] \
		if len( reduced ) > 1 else [ ]
	payload = { 'spec': spec.to_json( ), 'report': report.model_dump( ), 'passed': report.passed,
	            'polygons': polygons, 'seed': config.seed }
	return to_json_text( payload ), 0, 1


def run_equidist( args: argparse.Namespace, config: RunConfig ) -> Outcome:
	line = equidist.ParameterLine.parse( args.line )
	report, grid, measures = equidist.experiment( line, parse_ints( args.caps ), None, config.resolution,
	                                              args.critical, config.threads, config.seed )
	atoms = measures[ -1 ].atoms if measures else ( )
	if args.png:
		equidist.write_png( grid, args.png )
	if args.svg:
		equidist.write_svg( grid, args.svg, atoms )
	if args.pgm:
		equidist.write_pgm( grid, args.pgm )
	if args.csv:
		equidist.write_csv( grid, args.csv )
	undecided = int( grid.mask.sum( ) )
	return to_json_text( report.to_json( ) ), undecided, grid.mask.size


# ------------------------------------------------------------------------------------------
# selftest
# ------------------------------------------------------------------------------------------

def _check_closed_forms( config: RunConfig ) -> bool:
	expansion = boettcher.bottcher_coeffs( 2 )
	omega = QOmega.omega( )
	a1 = ( C ** 2 ).scale( omega * Fraction( -1, 4 ) )
	a2 = ( C ** 3 ).scale( omega * Fraction( -5, 24 ) ) + ( A ** 3 - C.scale( Fraction( 1, 2 ) ) ).scale( omega )
	return expansion.coefficient( 1 ) == a1 and expansion.coefficient( 2 ) == a2


def _check_functional_equation( config: RunConfig ) -> bool:
	return boettcher.verify_functional_equation( 12 ).passed


def _check_degrees( config: RunConfig ) -> bool:
	expansion = boettcher.bottcher_coeffs( 12 )
	return all( expansion.coefficient( k ).total_degree( ) == k + 1 for k in range( 1, 13 ) )


def _check_bounds( config: RunConfig ) -> bool:
	report = boettcher.coefficient_bounds_report( 12 )
	failing = { ( r.k, tuple( r.monomial ) ) for r in report.failures( ) }
	return report.passed and failing == set( boettcher.KNOWN_BOUND_EXCEPTIONS )


def _check_log_phi( config: RunConfig ) -> bool:
	rng = np.random.default_rng( config.seed )
	expansion = boettcher.bottcher_coeffs( 12 )
	for _ in range( 100 ):
		c, a = complex( rng.uniform( -2, 2 ) ), complex( rng.uniform( -2, 2 ) )
		p = CubicParam.complex( c, a )
		bounds = green.arch_bounds( c, a )
		_, _, G = green.g0g1G( p )
		radius = max( 50.0 * boettcher.domain_radius( c, a ), math.exp( bounds.rho + G.value ) * 2.0 )
		z = radius * cmath.exp( 2j * math.pi * rng.random( ) )
		phi = boettcher.bottcher_eval( p, z, 12, expansion ).value
		if abs( green.green_arch( p, z ).value - math.log( abs( phi ) ) ) >= 1e-9:
			return False
	return True


def _check_envelope( config: RunConfig ) -> bool:
	axis = np.linspace( -2, 2, 50 )
	cc, aa = np.meshgrid( axis, axis )
	g0, _ = green.green_grid( cc, aa, 0j, 1e-10 )
	g1, _ = green.green_grid( cc, aa, cc, 1e-10 )
	top = np.log( np.maximum( 1.0, np.maximum( np.abs( cc ), np.abs( aa ) ) ) )
	if np.max( np.abs( np.maximum( g0, g1 ) - top ) ) > green.GROWTH_C:
		return False
	rng = np.random.default_rng( config.seed )
	for _ in range( 50 ):
		c = Fraction( int( rng.integers( -50, 51 ) ), int( rng.integers( 1, 50 ) ) )
		a = Fraction( int( rng.integers( -50, 51 ) ), int( rng.integers( 1, 50 ) ) )
		for prime in (5, 7, 11):
			expected = max( 0.0, -min( valuation( c, prime ), valuation( a, prime ) ) * math.log( prime ) )
			if abs( green.green_finite( prime, c, a ) - expected ) > 1e-12:
				return False
	return True


def _check_symmetry( config: RunConfig ) -> bool:
	on_curve = classify.commutator_on_curve( 0, -1, classify.symmetry_curve( ) )
	off_curve = classify.commutator_on_curve( 0, -1, A )
	return ( all( r.is_zero( ) for r in on_curve ) and not all( r.is_zero( ) for r in off_curve )
	         and classify.symmetry_check( 20, config.seed ).passed )


def _check_collision( config: RunConfig ) -> bool:
	return all( classify.collision_check( m, k, 20, config.seed ).passed for m, k in ((1, 1), (2, 1)) )


def _check_pcf( config: RunConfig ) -> bool:
	points = pcf.pcf_solve( pcf.orbit_relation( 0, 0, 1 ), pcf.orbit_relation( 1, 0, 1 ) )
	expected = [ (0j, 0j), (1j * math.sqrt( 6 ), 0j), (-1j * math.sqrt( 6 ), 0j) ]
	if len( points ) != 3:
		return False
	for c, a in expected:
		if not any( abs( p.c - c ) < 1e-10 and abs( p.a - a ) < 1e-10 for p in points ):
			return False
	if green.canonical_height( 0, 0 ) >= 1e-6:
		return False
	return all( green.g0g1G( CubicParam.complex( p.c, p.a ) )[ 2 ].value < 1e-6 for p in points )


def _check_per1( config: RunConfig ) -> bool:
	factors = [ f for f, _ in periodic.perm_factors( 1, 0 ) ]
	targets = [ A, A ** 3 - ( C ** 3 ).scale( Fraction( 1, 6 ) ) - C ]
	return all( any( f.associates( t ) for f in factors ) for t in targets ) and all(
		any( f.associates( t ) for t in targets ) for f in factors )


def _check_valuations( config: RunConfig ) -> bool:
	cases = [ (2, [ -t, 1 ], m) for t in (0, -1, -2) for m in (1, 2) ] + [ (3, [ 0, 1 ], 1) ]
	reports = padicval.valuation_table( cases )
	reports.append( padicval.verify_prop_multiplier( padicval.unicritical_spec( [ 3, 0, 1 ], 1 ) ) )
	return all( r.passed for r in reports )


def _check_zsets( config: RunConfig ) -> bool:
	target = classify.symmetry_curve( )
	for q in (0, 1):
		probe = classify.z_probe( q, 0, -1, config.seed )
		if probe.kind != 'curve' or not probe.curve.associates( target ):
			return False
	probe = classify.z_probe( 1, 0, 1, config.seed )
	return probe.kind == 'curve' and probe.curve.associates( C )


def _check_branches( config: RunConfig ) -> bool:
	for steps in (6, 8):
		on_a = classify.branch_growth( A, 0, steps )
		on_c = classify.branch_growth( C, 0, steps )
		if on_a.classification( 0 ) != 'Bounded' or on_a.classification( 1 ) != 'Escaping':
			return False
		if on_a.rate( 1 ) != 1:
			return False
		if any( on_c.classification( i ) != 'Escaping' or on_c.rate( i ) != 1 for i in (0, 1) ):
			return False
	return True


def _check_trend( config: RunConfig ) -> bool:
	report, _, _ = equidist.experiment( equidist.LINE_C_ZERO, (2, 3, 4), None, config.resolution,
	                                    'g0', config.threads, config.seed )
	return report.monotone


def _check_determinism( config: RunConfig ) -> bool:
	texts = [ ]
	for threads in (1, max( 2, config.threads )):
		report, _, _ = equidist.experiment( equidist.LINE_C_ZERO, (2, 3), None, min( 128, config.resolution ),
		                                    'g0', threads, config.seed )
		texts.append( to_json_text( report.to_json( ) ) )
	return texts[ 0 ] == texts[ 1 ]


SELFTEST: Tuple[ Tuple[ str, Callable[ [ RunConfig ], bool ], bool ], ... ] = (
	('bottcher_closed_forms', _check_closed_forms, False),
	('functional_equation', _check_functional_equation, False),
	('coefficient_degrees', _check_degrees, False),
	('coefficient_bounds', _check_bounds, False),
	('green_log_phi', _check_log_phi, False),
	('green_envelope', _check_envelope, False),
	('symmetry_curve', _check_symmetry, False),
	('collision_curves', _check_collision, False),
	('pcf_solver', _check_pcf, False),
	('per1_factors', _check_per1, False),
	('multiplier_valuations', _check_valuations, False),
	('z_probes', _check_zsets, False),
	('branch_growth', _check_branches, False),
	('equidistribution_trend', _check_trend, True),
	('determinism', _check_determinism, True),
)


def run_selftest( args: argparse.Namespace, config: RunConfig ) -> Outcome:
	rows = [ ]
	for name, check, full_only in SELFTEST:
		if full_only and not args.full:
			continue
		try:
			passed = bool( check( config ) )
			detail = None
		except Error as e:
			passed, detail = False, f'{type( e ).__name__}: {e.heading}'
		logger.info( 'selftest: %s %s', name, 'pass' if passed else 'FAIL' )
		rows.append( { 'check': name, 'passed': passed, 'detail': detail } )
	payload = { 'checks': rows, 'passed': all( r[ 'passed' ] for r in rows ), 'seed': config.seed,
	            'full': args.full }
	return to_json_text( payload ), 0, len( rows )


HANDLERS: Dict[ str, Callable[ [ argparse.Namespace, RunConfig ], Outcome ] ] = {
	'bottcher': run_bottcher,
	'green': run_green,
	'perm': run_perm,
	'pcf': run_pcf,
	'classify': run_classify,
	'multiplier-valuations': run_multiplier,
	'equidist': run_equidist,
	'selftest': run_selftest,
}


def run( argv: Sequence[ str ]=None, stream=None ) -> int:
	'''

		Purpose:
		--------
		Parses argv, runs one subcommand and writes its report.

		Returns:
		---------
		int - 0 success, 2 undecided-dominated, 1 error

	'''
	parser = build_parser( )
	try:
		args = parser.parse_args( argv )
	except SystemExit as e:
		return EXIT_ERROR if e.code else EXIT_OK
	logging.basicConfig( level=getattr( logging, args.log_level ), format=LOG_FORMAT, stream=sys.stderr )
	try:
		config = load_config( args )
		dps = config.dps if config.float_mode == 'extended' else mpmath.mp.dps
		with mpmath.workdps( dps ):
			text, undecided, total = HANDLERS[ args.command ]( args, config )
		emit( text, config, stream )
		if args.command == 'selftest':
			return EXIT_OK if json.loads( text )[ 'passed' ] else EXIT_ERROR
		return EXIT_UNDECIDED if total and 2 * undecided > total else EXIT_OK
	except Undecided as e:
		ErrorDialog( e ).show( )
		return EXIT_UNDECIDED
	except Exception as e:
		exception = Error( e )
		exception.module = 'cli'
		exception.cause = 'CuboParser'
		exception.method = HANDLERS[ args.command ].__name__
		error = ErrorDialog( exception )
		error.show( )
		return EXIT_ERROR


if __name__ == '__main__':
	sys.exit( run( ) )
