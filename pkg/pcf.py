'''
  ******************************************************************************************
      Assembly:                Cubo
      Filename:                pcf.py
      Author:                  Terry D. Eppler
      Created:                 05-31-2022

      Last Modified By:        Terry D. Eppler
      Last Modified On:        10-17-2026
  ******************************************************************************************
  <copyright file="pcf.py" company="Terry D. Eppler">

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
    pcf.py

    Post-critically finite parameters of the cubic family: critical orbit relations,
    elimination solver for pairs of relations, exact and interval certification,
    enumeration within a degree cap and an independent grid-seeded Newton oracle.
  </summary>
  ******************************************************************************************
'''
from __future__ import annotations
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import mpmath
import numpy as np

from boogr import CurveDetected, DegreeCapExceeded, Error, Undecided, throw_if
from dynamics import CubicParam, eval_P, polyroots
from exactalg import (A, BiPoly, C, QOmega, bipoly_gcd, factor_bipoly, resultant, squarefree_part,
                      univariate_coefficients)
from green import ITERATION_CAP, escape_radius, g0g1G

logger = logging.getLogger( __name__ )

DEGREE_CAP = 81
ORBIT_CAP = 64
SOLVE_TOL = 1e-10
PAIR_TOL = 1e-6
POLISH_DPS = 40
BOX_WIDTH = 1e-6
BOX_FLOOR = 1e-12
EXACT_DIGITS_CAP = 4000
COMPACT_RADIUS = 10.0


@dataclass( frozen=True )
class OrbitRelation( ):
	'''

		Purpose:
		--------
		P^(n+k)(c_i) - P^n(c_i) with c_0 = 0 and c_1 = c; coefficients lie in Z[1/2, 1/3].

	'''
	critical_index: int
	n: int
	k: int
	poly: BiPoly

	@property
	def degree( self ) -> int:
		return self.poly.total_degree( )


	def witness( self ) -> Tuple[ int, int, int ]:
		return (self.critical_index, self.n, self.k)


	def to_json( self ) -> Dict[ str, object ]:
		return { 'i': self.critical_index, 'n': self.n, 'k': self.k, 'degree': self.degree,
		         'poly': self.poly.to_json( ) }


@dataclass( frozen=True )
class PcfPoint( ):
	'''

		Purpose:
		--------
		A solution of two orbit relations. exact carries Q(w) coordinates when both come from
		rational factors of the eliminants.

	'''
	c: complex
	a: complex
	radius: float
	relations: Tuple[ Tuple[ int, int, int ], ... ]
	certified: bool
	exact: Optional[ Tuple[ QOmega, QOmega ] ]=None
	green: Optional[ float ]=None

	def key( self, digits: int=8 ) -> Tuple[ float, float, float, float ]:
		c, a = complex( self.c ), complex( self.a )
		return ( round( c.real, digits ) + 0.0, round( c.imag, digits ) + 0.0,
		         round( a.real, digits ) + 0.0, round( a.imag, digits ) + 0.0 )


	def to_json( self ) -> Dict[ str, object ]:
		out = { 'c': [ repr( self.c.real ), repr( self.c.imag ) ],
		        'a': [ repr( self.a.real ), repr( self.a.imag ) ],
		        'radius': repr( self.radius ), 'certified': self.certified,
		        'witness': [ list( r ) for r in self.relations ],
		        'G': None if self.green is None else repr( self.green ) }
		if self.exact is not None:
			out[ 'exact' ] = { 'c': self.exact[ 0 ].to_json( ), 'a': self.exact[ 1 ].to_json( ) }
		return out


@dataclass
class PcfEnumeration( ):
	points: List[ PcfPoint ]
	box: float
	pairs: int
	errors: List[ Dict[ str, object ] ]=field( default_factory=list )

	def to_json( self ) -> Dict[ str, object ]:
		return { 'points': [ p.to_json( ) for p in self.points ], 'box': repr( self.box ),
		         'pairs': self.pairs, 'errors': self.errors }


def _step( z: BiPoly ) -> BiPoly:
	return z * z * ( z.scale( Fraction( 1, 3 ) ) - C.scale( Fraction( 1, 2 ) ) ) + A ** 3


def orbit_relation( i: int, n: int, k: int, cap: int=DEGREE_CAP ) -> OrbitRelation:
	'''

		Purpose:
		--------
		Exact relation P^(n+k)(c_i) = P^n(c_i) as a BiPoly.

		Parameters:
		----------
		i: int - critical index, 0 or 1
		n: int - preperiod
		k: int - period
		cap: int - largest admissible 3^(n+k)

		Returns:
		---------
		OrbitRelation

	'''
	if i not in (0, 1):
		raise ValueError( 'critical index is 0 or 1' )
	if n < 0 or k < 1:
		raise ValueError( 'need n >= 0 and k >= 1' )
	if 3 ** ( n + k ) > cap:
		raise DegreeCapExceeded( f'3^{n + k} exceeds the degree cap {cap}', cause='orbit_relation',
		                         method='orbit_relation', module='pcf' )
	z = BiPoly( ) if i == 0 else C
	marker = z
	for step in range( n + k ):
		if step == n:
			marker = z
		z = _step( z )
	return OrbitRelation( i, n, k, z - marker )


def _as_poly( relation: Union[ OrbitRelation, BiPoly ] ) -> Tuple[ BiPoly, Tuple[ Tuple[ int, int, int ], ... ] ]:
	if isinstance( relation, OrbitRelation ):
		return relation.poly, ( relation.witness( ), )
	return BiPoly.coerce( relation ), ( )


def _scaled_residual( poly: BiPoly, c: complex, a: complex ) -> float:
	value = abs( complex( poly.evaluate( c, a ) ) )
	scale = sum( abs( v.to_complex( ) ) * abs( c ) ** i * abs( a ) ** j for (i, j), v in poly.terms.items( ) )
	return value / max( scale, 1e-300 )


def _exact_roots( poly: BiPoly, var: str ) -> List[ QOmega ]:
	roots: List[ QOmega ] = [ ]
	if poly.is_constant( ):
		return roots
	_, factors = factor_bipoly( poly )
	for f, _ in factors:
		if f.degree( var ) == 1:
			coeffs = univariate_coefficients( f, var )
			roots.append( -coeffs[ 0 ] / coeffs[ 1 ] )
	return roots


def _numeric_roots( poly: BiPoly, var: str ) -> List[ complex ]:
	if poly.is_constant( ):
		return [ ]
	coeffs = [ v.to_complex( ) for v in univariate_coefficients( poly, var ) ]
	found: List[ complex ] = [ ]
	for r in polyroots( coeffs, polish=True ):
		r = complex( r )
		if not any( abs( r - w ) <= 1e-9 * max( 1.0, abs( w ) ) for w in found ):
			found.append( r )
	return found


def _polish( f: BiPoly, g: BiPoly, c: complex, a: complex ) -> Tuple[ complex, complex, float ]:
	'''Two-variable Newton in extended precision; returns the point and the last step size.'''
	fc, fa, gc, ga = f.partial( 'c' ), f.partial( 'a' ), g.partial( 'c' ), g.partial( 'a' )
	step = 0.0
	with mpmath.workdps( POLISH_DPS ):
		x, y = mpmath.mpc( c ), mpmath.mpc( a )
		for _ in range( 40 ):
			F, G = f.evaluate( x, y ), g.evaluate( x, y )
			J = mpmath.matrix( [ [ fc.evaluate( x, y ), fa.evaluate( x, y ) ],
			                     [ gc.evaluate( x, y ), ga.evaluate( x, y ) ] ] )
			try:
				delta = mpmath.lu_solve( J, mpmath.matrix( [ F, G ] ) )
			except ZeroDivisionError:
				break
			x, y = x - delta[ 0 ], y - delta[ 1 ]
			step = float( max( abs( delta[ 0 ] ), abs( delta[ 1 ] ) ) )
			if step < 1e-30:
				break
		return complex( x ), complex( y ), step


def pcf_solve( rel0: Union[ OrbitRelation, BiPoly ], rel1: Union[ OrbitRelation, BiPoly ],
               orbit_cap: int=ORBIT_CAP, tol: float=SOLVE_TOL ) -> List[ PcfPoint ]:
	'''

		Purpose:
		--------
		Finite solution set of two relations. The square-free eliminants Res_a and Res_c give
		the candidate coordinates; pairs with small scaled residual are polished by Newton
		and certified. A common factor raises CurveDetected with the component attached.

		Parameters:
		----------
		rel0, rel1: OrbitRelation or BiPoly
		orbit_cap: int - certification depth
		tol: float - pairing tolerance after polishing

		Returns:
		---------
		List[ PcfPoint ]

	'''
	throw_if( 'rel0', rel0 )
	throw_if( 'rel1', rel1 )
	f, w0 = _as_poly( rel0 )
	g, w1 = _as_poly( rel1 )
	if f.is_zero( ) or g.is_zero( ):
		raise ValueError( 'relations must be nonzero' )
	common = bipoly_gcd( f, g )
	if not common.is_constant( ):
		raise CurveDetected( f'relations share the component {common}', component=common,
		                     cause='pcf_solve', method='bipoly_gcd', module='pcf' )
	in_c = squarefree_part( resultant( f, g, eliminate='a' ) )
	in_a = squarefree_part( resultant( f, g, eliminate='c' ) )
	if in_c.is_zero( ) or in_a.is_zero( ):
		raise CurveDetected( 'eliminant vanished identically', component=common,
		                     cause='pcf_solve', method='resultant', module='pcf' )
	witness = w0 + w1
	points: List[ PcfPoint ] = [ ]
	exact_c, exact_a = _exact_roots( in_c, 'c' ), _exact_roots( in_a, 'a' )
	for c in exact_c:
		for a in exact_a:
			if not f.evaluate( c, a ) and not g.evaluate( c, a ):
				try:
					certified = certify_pcf( c, a, orbit_cap )
				except Undecided:
					certified = False
				points.append( PcfPoint( c.to_complex( ), a.to_complex( ), 0.0, witness, certified, (c, a) ) )
	for c in _numeric_roots( in_c, 'c' ):
		for a in _numeric_roots( in_a, 'a' ):
			if max( _scaled_residual( f, c, a ), _scaled_residual( g, c, a ) ) > PAIR_TOL:
				continue
			x, y, radius = _polish( f, g, c, a )
			if max( _scaled_residual( f, x, y ), _scaled_residual( g, x, y ) ) > tol:
				logger.debug( 'pcf_solve: candidate (%s, %s) rejected after polishing', c, a )
				continue
			if any( abs( x - p.c ) <= 1e-8 and abs( y - p.a ) <= 1e-8 for p in points ):
				continue
			try:
				certified = certify_pcf( x, y, orbit_cap, radius=max( radius, BOX_FLOOR * max( 1.0, abs( x ), abs( y ) ) ) )
			except Undecided as e:
				logger.info( 'pcf_solve: %s at (%s, %s)', e.heading, x, y )
				certified = False
			points.append( PcfPoint( x, y, radius, witness, certified ) )
	return sorted( points, key=lambda p: p.key( ) )


def _orbit_revisits_exact( p: CubicParam, start: QOmega, cap: int ) -> bool:
	radius = escape_radius( p.c.to_complex( ), p.a.to_complex( ) )
	seen = { start }
	z = start
	for _ in range( cap ):
		z = eval_P( p, z )
		if z in seen:
			return True
		if abs( z.to_complex( ) ) > radius:
			return False
		if max( len( str( z.x.denominator ) ), len( str( z.y.denominator ) ) ) > EXACT_DIGITS_CAP:
			break
		seen.add( z )
	raise Undecided( f'exact orbit neither closed nor escaped within {cap} steps', cause='certify_pcf',
	                 method='_orbit_revisits_exact', module='pcf' )


def _disjoint( x: object, y: object ) -> bool:
	return bool( ( x.real < y.real ) is True or ( x.real > y.real ) is True or
	             ( x.imag < y.imag ) is True or ( x.imag > y.imag ) is True )


def _orbit_revisits_interval( c: object, a: object, start: object, radius: float, cap: int ) -> bool:
	a3 = a * a * a
	boxes = [ start ]
	z = start
	for _ in range( cap ):
		z = z * z * ( z / 3 - c / 2 ) + a3
		size = z.real * z.real + z.imag * z.imag
		if ( size > radius * radius ) is True:
			return False
		if ( z.real.delta > BOX_WIDTH ) is not False or ( z.imag.delta > BOX_WIDTH ) is not False:
			break
		if any( not _disjoint( z, w ) for w in boxes ):
			return True
		boxes.append( z )
	raise Undecided( f'interval orbit too coarse after {len( boxes )} steps', cause='certify_pcf',
	                 method='_orbit_revisits_interval', module='pcf' )


def certify_pcf( c: object, a: object, orbit_cap: int=ORBIT_CAP, radius: float=BOX_FLOOR,
                 dps: int=POLISH_DPS ) -> bool:
	'''

		Purpose:
		--------
		True when both critical orbits revisit an earlier point within orbit_cap steps:
		exact equality over Q(w), or overlap of interval boxes around (c, a) of the given
		radius. An orbit leaving the escape radius certifies False; an inconclusive run raises
		Undecided.

	'''
	if orbit_cap < 1:
		raise ValueError( 'orbit_cap must be positive' )
	if isinstance( c, QOmega ) and isinstance( a, QOmega ):
		p = CubicParam.exact( c, a )
		return all( _orbit_revisits_exact( p, start, orbit_cap ) for start in ( QOmega( ), c ) )
	c, a = complex( c ), complex( a )
	bound = escape_radius( c, a ) + 1.0
	iv = mpmath.iv
	saved = iv.dps
	iv.dps = dps
	try:
		def box( v: complex ) -> object:
			return iv.mpc( iv.mpf( [ v.real - radius, v.real + radius ] ),
			               iv.mpf( [ v.imag - radius, v.imag + radius ] ) )

		cb, ab = box( c ), box( a )
		zero = iv.mpc( 0, 0 )
		return all( _orbit_revisits_interval( cb, ab, start, bound, orbit_cap ) for start in ( zero, cb ) )
	finally:
		iv.dps = saved


def relation_catalog( maxdeg: int ) -> List[ OrbitRelation ]:
	'''All (n, k) with 3^(n+k) <= maxdeg, for both critical points, in a fixed order.'''
	out: List[ OrbitRelation ] = [ ]
	for i in (0, 1):
		for total in range( 1, 40 ):
			if 3 ** total > maxdeg:
				break
			for k in range( 1, total + 1 ):
				out.append( orbit_relation( i, total - k, k, cap=maxdeg ) )
	return out


def pcf_enumerate( maxdeg: int=9, orbit_cap: int=ORBIT_CAP, threads: int=1,
                   tol: float=SOLVE_TOL ) -> PcfEnumeration:
	'''

		Purpose:
		--------
		Union of pcf_solve over every pair (relation for c_0, relation for c_1) within the
		degree cap, deduplicated by rounded coordinates in lexicographic order. Each point
		carries the Archimedean G(c, a).

	'''
	if maxdeg < 3:
		raise ValueError( 'maxdeg must be at least 3' )
	catalog = relation_catalog( maxdeg )
	pairs = [ (r0, r1) for r0 in catalog if r0.critical_index == 0
	          for r1 in catalog if r1.critical_index == 1 ]

	def solve( pair: Tuple[ OrbitRelation, OrbitRelation ] ) -> Tuple[ List[ PcfPoint ], Optional[ Dict[ str, object ] ] ]:
		r0, r1 = pair
		try:
			return pcf_solve( r0, r1, orbit_cap, tol ), None
		except Error as e:
			logger.info( 'pcf_enumerate: skipped pair %s/%s: %s', r0.witness( ), r1.witness( ), e.heading )
			return [ ], { 'pair': [ list( r0.witness( ) ), list( r1.witness( ) ) ],
			              'error': type( e ).__name__, 'message': e.heading }

	with ThreadPoolExecutor( max_workers=max( 1, threads ) ) as pool:
		results = list( pool.map( solve, pairs ) )
	merged: Dict[ Tuple[ float, ...], PcfPoint ] = { }
	errors = [ err for _, err in results if err is not None ]
	for found, _ in results:
		for point in found:
			key = point.key( 7 )
			previous = merged.get( key )
			if previous is None:
				merged[ key ] = point
			else:
				merged[ key ] = PcfPoint( previous.c, previous.a, max( previous.radius, point.radius ),
				                          previous.relations + point.relations,
				                          previous.certified or point.certified, previous.exact or point.exact )
	points: List[ PcfPoint ] = [ ]
	for key in sorted( merged ):
		point = merged[ key ]
		_, _, G = g0g1G( CubicParam( point.c, point.a ), 1e-9, ITERATION_CAP )
		points.append( PcfPoint( point.c, point.a, point.radius, point.relations, point.certified,
		                         point.exact, G.value ) )
	box = max( [ max( abs( p.c ), abs( p.a ) ) for p in points ], default=0.0 )
	if box > COMPACT_RADIUS:
		logger.warning( 'pcf_enumerate: point outside the compact radius %g', COMPACT_RADIUS )
	return PcfEnumeration( points, box, len( pairs ), errors )


def newton_oracle( f: BiPoly, g: BiPoly, box: float, seeds: int=200, seed: int=0,
                   iterations: int=120, tol: float=1e-12 ) -> List[ Tuple[ complex, complex ] ]:
	'''

		Purpose:
		--------
		Independent solver: vectorised two-variable Newton from seeds x seeds random starts with
		real and imaginary parts of c and a uniform in [-box, box], deduplicated at 1e-6.

	'''
	rng = np.random.default_rng( seed )
	count = seeds * seeds
	c = rng.uniform( -box, box, count ) + 1j * rng.uniform( -box, box, count )
	a = rng.uniform( -box, box, count ) + 1j * rng.uniform( -box, box, count )
	fc, fa, gc, ga = f.partial( 'c' ), f.partial( 'a' ), g.partial( 'c' ), g.partial( 'a' )
	with np.errstate( all='ignore' ):
		for _ in range( iterations ):
			F, G = f.evaluate( c, a ), g.evaluate( c, a )
			j11, j12, j21, j22 = fc.evaluate( c, a ), fa.evaluate( c, a ), gc.evaluate( c, a ), ga.evaluate( c, a )
			det = j11 * j22 - j12 * j21
			c = c - ( F * j22 - j12 * G ) / det
			a = a - ( j11 * G - j21 * F ) / det
		F, G = f.evaluate( c, a ), g.evaluate( c, a )
	good = np.isfinite( c ) & np.isfinite( a ) & ( np.abs( F ) < tol ) & ( np.abs( G ) < tol )
	found: List[ Tuple[ complex, complex ] ] = [ ]
	for x, y in zip( c[ good ], a[ good ] ):
		x, y = complex( x ), complex( y )
		if not any( abs( x - u ) < 1e-6 and abs( y - v ) < 1e-6 for u, v in found ):
			found.append( (x, y) )
	return sorted( found, key=lambda t: (round( t[ 0 ].real, 6 ), round( t[ 0 ].imag, 6 ),
	                                     round( t[ 1 ].real, 6 ), round( t[ 1 ].imag, 6 )) )
