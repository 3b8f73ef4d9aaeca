'''
  ******************************************************************************************
      Assembly:                Cubo
      Filename:                green.py
      Author:                  Terry D. Eppler
      Created:                 05-31-2022

      Last Modified By:        Terry D. Eppler
      Last Modified On:        10-17-2026
  ******************************************************************************************
  <copyright file="green.py" company="Terry D. Eppler">

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
    green.py

    Escape-rate (Green) functions of the cubic family at the archimedean place and at the
    p-adic places, the critical values g0, g1, G, the weighted maxima and the canonical
    height of a rational parameter.
  </summary>
  ******************************************************************************************
'''
from __future__ import annotations
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np
import sympy
from pydantic import BaseModel

from boogr import PrecisionExhausted, Undecided, throw_if
from dynamics import CubicParam, critical_points, eval_P
from exactalg import PAdic, Place, to_rational, valuation

logger = logging.getLogger( __name__ )

ITERATION_CAP = 300
FINITE_CAP = 40
ESCAPE_FLOOR = 10.0
MAGNITUDE_CEILING = 1e100
LOG_SQRT3 = math.log( 3.0 ) / 2
THETA = math.log( 6.0 ) / 2
GROWTH_C = math.log( 12.0 )
RHO = math.log( 8.0 ) + GROWTH_C


@dataclass( frozen=True )
class GreenBounds( ):
	'''

		Purpose:
		--------
		Constants of one place for one parameter: escape radius, the |g - log+|z|| bound theta,
		the Bottcher domain offset rho, the configurable domain offset tau and the growth
		constant of G against log+ max(|c|, |a|).

	'''
	escape_radius: float
	theta: float
	rho: float
	tau: float
	growth_C: float
	place: Place=field( default_factory=Place.archimedean )


@dataclass( frozen=True )
class GreenValue( ):
	value: float
	error_bound: float
	iterations_used: int

	def to_json( self ) -> Dict[ str, object ]:
		return { 'value': repr( self.value ), 'err': repr( self.error_bound ), 'iterations': self.iterations_used }


class HeightReport( BaseModel ):
	'''Canonical height with its per-place terms.'''
	c: str
	a: str
	s0: int
	s1: int
	value: float
	error_bound: float
	terms: Dict[ str, float ]


def escape_radius( c: object, a: object ) -> float:
	return max( ESCAPE_FLOOR, 4.0 * ( 1.0 + abs( complex( c ) ) + abs( complex( a ) ) ) )


def arch_bounds( c: object, a: object, tau: float=0.0 ) -> GreenBounds:
	'''

		Purpose:
		--------
		Beyond R = max(10, 4(1 + |c| + |a|)) one has |z|^3/6 <= |P(z)| <= |z|^3/2, so
		|g - log|z|| <= log(6)/2. Some critical value has modulus at least max(1,|c|,|a|)^3/12,
		which gives |G - log+ max(|c|,|a|)| <= log 12.

	'''
	if tau < 0:
		raise ValueError( 'tau must be non-negative' )
	return GreenBounds( escape_radius( c, a ), THETA, RHO, tau, GROWTH_C, Place.archimedean( ) )


def finite_bounds( prime: int, tau: float=None ) -> GreenBounds:
	'''Constants at a p-adic place; all vanish in residual characteristic at least 5.'''
	place = Place.finite( prime )
	if prime >= 5:
		return GreenBounds( 1.0, 0.0, 0.0, 0.0, 0.0, place )
	log_p = math.log( prime )
	if prime == 3:
		return GreenBounds( 3.0, log_p / 2, log_p, log_p / 2 if tau is None else tau, log_p, place )
	return GreenBounds( 2.0, log_p, log_p, log_p if tau is None else tau, log_p, place )


def green_arch( p: CubicParam, z: complex, tol: float=1e-12, cap: int=ITERATION_CAP,
                bounds: GreenBounds=None ) -> GreenValue:
	'''

		Purpose:
		--------
		g(z) = lim 3^-n log+|P^n(z)|. Once |z_n| > R the value 3^-n (log|z_n| - log(3)/2) is
		within 3^-n e/(2(1 - e)) of g, e = 3|c|/(2|z_n|) + 3|a|^3/|z_n|^3; a bounded orbit
		certifies g <= 3^-cap (log R + theta), theta from the bounds.

		Parameters:
		----------
		p: CubicParam - complex context
		z: complex
		tol: float - requested accuracy

		Returns:
		---------
		GreenValue

	'''
	throw_if( 'p', p )
	if tol <= 0:
		raise ValueError( 'tol must be positive' )
	p = p.embed( ) if p.context == 'exact' else p
	c, a = abs( complex( p.c ) ), abs( complex( p.a ) )
	if bounds is None:
		bounds = arch_bounds( p.c, p.a )
	radius = bounds.escape_radius
	z = complex( z )
	q = CubicParam( complex( p.c ), complex( p.a ) ) if p.is_extended( ) else p
	scale = 1.0
	for n in range( cap + 1 ):
		magnitude = abs( z )
		if magnitude > radius:
			eps = 1.5 * c / magnitude + 3.0 * a ** 3 / magnitude ** 3
			error = scale * eps / ( 2.0 * ( 1.0 - eps ) )
			if error <= tol or magnitude > MAGNITUDE_CEILING:
				value = scale * ( math.log( magnitude ) - LOG_SQRT3 )
				return GreenValue( max( value, 0.0 ), error, n )
		z = eval_P( q, z )
		scale /= 3.0
	bound = 3.0 ** ( -cap ) * ( math.log( radius ) + bounds.theta )
	if bound <= tol:
		return GreenValue( 0.0, bound, cap )
	raise Undecided( f'escape rate undecided after {cap} iterations: orbit stays within R={radius:.6g}, '
	                 f'g <= 3^-{cap} (log R + theta) = {bound:.3e} with theta={bounds.theta:.6g}', cause='green_arch',
	                 method='green_arch', module='green' )


def g0g1G( p: CubicParam, tol: float=1e-12, cap: int=ITERATION_CAP ) -> Tuple[ GreenValue, GreenValue, GreenValue ]:
	'''Green function at the critical points 0 and c, and their maximum G.'''
	p = p.embed( ) if p.context == 'exact' else p
	bounds = arch_bounds( p.c, p.a )
	c0, c1 = critical_points( p )
	g0 = green_arch( p, complex( c0 ), tol, cap, bounds )
	g1 = green_arch( p, complex( c1 ), tol, cap, bounds )
	top = g0 if g0.value >= g1.value else g1
	G = GreenValue( top.value, max( g0.error_bound, g1.error_bound ), max( g0.iterations_used, g1.iterations_used ) )
	return g0, g1, G


def green_grid( c: object, a: object, z: object, tol: float=1e-9,
                cap: int=ITERATION_CAP ) -> Tuple[ np.ndarray, np.ndarray ]:
	'''

		Purpose:
		--------
		Vectorised escape rate over broadcast arrays of (c, a, z), with the same certificate
		as green_arch. Returns (values, undecided mask).

	'''
	c, a, z = np.broadcast_arrays( np.asarray( c, dtype=complex ), np.asarray( a, dtype=complex ),
	                               np.asarray( z, dtype=complex ) )
	c, a, z = c.copy( ), a.copy( ), z.copy( )
	radius = np.maximum( ESCAPE_FLOOR, 4.0 * ( 1.0 + np.abs( c ) + np.abs( a ) ) )
	abs_c, abs_a3 = np.abs( c ), np.abs( a ) ** 3
	a3 = a ** 3
	values = np.zeros( z.shape, dtype=float )
	active = np.ones( z.shape, dtype=bool )
	scale = 1.0
	with np.errstate( all='ignore' ):
		for _ in range( cap + 1 ):
			magnitude = np.abs( z )
			outside = active & ( magnitude > radius )
			if np.any( outside ):
				eps = 1.5 * abs_c / magnitude + 3.0 * abs_a3 / magnitude ** 3
				error = scale * eps / ( 2.0 * ( 1.0 - eps ) )
				done = outside & ( ( error <= tol ) | ( magnitude > MAGNITUDE_CEILING ) )
				values[ done ] = np.maximum( scale * ( np.log( magnitude[ done ] ) - LOG_SQRT3 ), 0.0 )
				active &= ~done
			if not np.any( active ):
				break
			z = np.where( active, z * z * ( z / 3 - c / 2 ) + a3, z )
			scale /= 3.0
	undecided = active & ( np.abs( z ) > radius )
	undecided |= active & ( 3.0 ** ( -cap ) * ( np.log( radius ) + THETA ) > tol )
	return values, undecided


# ------------------------------------------------------------------------------------------
# p-adic places
# ------------------------------------------------------------------------------------------

def green_finite( prime: int, c: object, a: object, tol: float=1e-12, cap: int=FINITE_CAP ) -> float:
	'''

		Purpose:
		--------
		G at a p-adic place. For p >= 5 this is max(0, -v(c), -v(a)) log p exactly; for
		p in {2, 3} the maximum of the iterated critical escape rates.

	'''
	if prime >= 5:
		c, a = to_rational( c ), to_rational( a )
		top = max( 0, -valuation( c, prime ), -valuation( a, prime ) )
		return float( top ) * math.log( prime )
	g0, g1 = green_finite_pair( prime, c, a, tol, cap )
	return max( g0.value, g1.value )


def _escape_threshold( prime: int, c: Fraction, a: Fraction ) -> Fraction:
	'''

		Purpose:
		--------
		e0 such that -v(z) > e0 forces v(P(z)) = 3 v(z) - v(3) from then on.

	'''
	v2, v3 = valuation( 2, prime ), valuation( 3, prime )
	bounds = [ Fraction( -1, 2 ) if prime == 3 else Fraction( 0 ) ]
	if c:
		bounds.append( Fraction( v2 - v3 - valuation( c, prime ) ) )
	if a:
		bounds.append( Fraction( -v3, 3 ) - valuation( a, prime ) )
	return max( bounds )


def _finite_exponent( prime: int, c: Fraction, a: Fraction, start: object, tol: float,
                      cap: int ) -> Tuple[ Fraction, float, int ]:
	'''

		Purpose:
		--------
		g(start)/log p at the p-adic place, as an exact rational once escape is certified,
		otherwise 0 with the bound 3^-cap (e0 + 1).

	'''
	p = CubicParam.padic( c, a, prime )
	shift = Fraction( 1, 2 ) if prime == 3 else Fraction( 0 )
	recurrence = 1 if prime == 3 else 0
	threshold = _escape_threshold( prime, c, a )
	z = p.c if start == 'c' else PAdic( 0, prime )
	for n in range( cap + 1 ):
		if not z.is_zero( ) and -z.valuation( ) > threshold:
			e = -z.valuation( )
			w, expected = z, e
			for _ in range( 3 ):
				w = eval_P( p, w )
				expected = 3 * expected + recurrence
				if w.is_zero( ) or -w.valuation( ) != expected:
					raise Undecided( f'valuation growth unstable at p={prime}', cause='green_finite',
					                 method='_finite_exponent', module='green' )
			return ( Fraction( e ) + shift ) / 3 ** n, 0.0, n
		try:
			z = eval_P( p, z )
		except PrecisionExhausted:
			break
	bound = ( float( max( threshold, 0 ) ) + 1.0 ) * math.log( prime ) / 3.0 ** cap
	if bound <= tol:
		return Fraction( 0 ), bound, cap
	raise Undecided( f'p-adic escape undecided at p={prime} after {cap} steps', cause='green_finite',
	                 method='_finite_exponent', module='green' )


def green_finite_pair( prime: int, c: object, a: object, tol: float=1e-12,
                       cap: int=FINITE_CAP ) -> Tuple[ GreenValue, GreenValue ]:
	'''(g0, g1) at the p-adic place by exact iteration of valuations.'''
	c, a = to_rational( c ), to_rational( a )
	log_p = math.log( prime )
	out = [ ]
	for start in ( '0', 'c' ):
		exponent, bound, used = _finite_exponent( prime, c, a, start, tol, cap )
		out.append( GreenValue( float( exponent ) * log_p, bound, used ) )
	return out[ 0 ], out[ 1 ]


def weighted_green_finite( prime: int, c: object, a: object, s0: int, s1: int,
                           q: int ) -> Tuple[ float, float ]:
	'''

		Purpose:
		--------
		The weighted value max(s0 g0, s1 g1) at a p-adic place, beside the truncated formula
		3^-q max(s0 log+|P^q(0)|, s1 log+|P^q(c)|). Both are computed as exact exponents.

		Returns:
		---------
		(iterated, formula) as floats

	'''
	c, a = to_rational( c ), to_rational( a )
	exponents = [ _finite_exponent( prime, c, a, start, 1e-12, FINITE_CAP )[ 0 ] for start in ( '0', 'c' ) ]
	iterated = max( s0 * exponents[ 0 ], s1 * exponents[ 1 ] )
	p = CubicParam.padic( c, a, prime )
	tops = [ ]
	for z in ( PAdic( 0, prime ), p.c ):
		for _ in range( q ):
			z = eval_P( p, z )
		tops.append( Fraction( 0 ) if z.is_zero( ) else max( Fraction( 0 ), Fraction( -z.valuation( ) ) ) )
	formula = max( s0 * tops[ 0 ], s1 * tops[ 1 ] ) / 3 ** q
	log_p = math.log( prime )
	return float( iterated ) * log_p, float( formula ) * log_p


# ------------------------------------------------------------------------------------------
# heights
# ------------------------------------------------------------------------------------------

def height_places( c: object, a: object ) -> List[ Place ]:
	'''The archimedean place, 2, 3 and the primes dividing a denominator of c or a.'''
	c, a = to_rational( c ), to_rational( a )
	primes = { 2, 3 }
	for value in ( c, a ):
		primes.update( _prime_factors( value.denominator ) )
	return [ Place.archimedean( ) ] + [ Place.finite( p ) for p in sorted( primes ) ]


def _prime_factors( n: int ) -> List[ int ]:
	return list( sympy.primefactors( n ) )


def height_report( c: object, a: object, s0: int=1, s1: int=1, tol: float=1e-9,
                   cap: int=ITERATION_CAP ) -> HeightReport:
	'''

		Purpose:
		--------
		h_s(c, a) = sum over places of max(s0 g0_v, s1 g1_v) for a rational parameter.

	'''
	if s0 < 1 or s1 < 1:
		raise ValueError( 'weights must be positive integers' )
	c, a = to_rational( c ), to_rational( a )
	places = height_places( c, a )
	share = tol / ( 2 * len( places ) * max( s0, s1 ) )
	terms: Dict[ str, float ] = { }
	total, error = 0.0, 0.0
	for place in places:
		if place.is_archimedean( ):
			g0, g1, _ = g0g1G( CubicParam( float( c ), float( a ) ), share, cap )
		else:
			g0, g1 = green_finite_pair( place.prime, c, a, share )
		term = max( s0 * g0.value, s1 * g1.value )
		terms[ str( place ) ] = term
		total += term
		error += max( s0, s1 ) * max( g0.error_bound, g1.error_bound )
	logger.debug( 'height_report: (%s, %s) -> %s', c, a, terms )
	return HeightReport( c=str( c ), a=str( a ), s0=s0, s1=s1, value=total, error_bound=error, terms=terms )


def canonical_height( c: object, a: object, s0: int=1, s1: int=1, tol: float=1e-9,
                      cap: int=ITERATION_CAP ) -> float:
	return height_report( c, a, s0, s1, tol, cap ).value
