'''
  ******************************************************************************************
      Assembly:                Cubo
      Filename:                dynamics.py
      Author:                  Terry D. Eppler
      Created:                 05-31-2022

      Last Modified By:        Terry D. Eppler
      Last Modified On:        10-17-2026
  ******************************************************************************************
  <copyright file="dynamics.py" company="Terry D. Eppler">

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
    dynamics.py

    The cubic family P(z) = z^3/3 - c z^2/2 + a^3 with critical points 0 and c, evaluated
    in exact, complex or p-adic contexts; orbits, multipliers, a general Aberth-Ehrlich
    root finder and periodic cycles.
  </summary>
  ******************************************************************************************
'''
from __future__ import annotations
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import mpmath
import numpy as np
import sympy

from boogr import EscapeOverflow, RootFindingFailure, throw_if
from exactalg import PAdic, PADIC_DIGITS, QOmega, is_exact_scalar, to_rational

logger = logging.getLogger( __name__ )

ITERATION_CAP = 300
ESCAPE_BOUND = 1e150
ABERTH_MAX_ITER = 200
ABERTH_TOL = 1e-14
REFINE_TOL = 1e-12
PERIOD_TOL = 1e-8
MAX_PERIOD = 6
POLISH_DPS = 30

_LOG_SWITCH = 1e30
_LOG3 = math.log( 3.0 )


class CubicParam( ):
	'''

		Purpose:
		--------
		A parameter (c, a) of P(z) = z^3/3 - c z^2/2 + a^3 in one evaluation context:
		'exact' (QOmega), 'complex' (complex or mpmath mpc) or 'padic' (PAdic over one prime).

		Constructor:
		-----------
		CubicParam( c, a, context='complex', prime=None )

	'''
	c: object
	a: object
	context: str
	prime: Optional[ int ]
	a_cubed: object

	def __init__( self, c: object, a: object, context: str='complex', prime: int=None ):
		throw_if( 'context', context )
		if context == 'exact':
			c, a = QOmega.coerce( c ), QOmega.coerce( a )
		elif context == 'padic':
			if prime is None:
				raise ValueError( 'p-adic context needs a prime' )
			c = c if isinstance( c, PAdic ) else PAdic( c, prime )
			a = a if isinstance( a, PAdic ) else PAdic( a, prime )
		elif context == 'complex':
			if not isinstance( c, mpmath.mpc ) and not isinstance( a, mpmath.mpc ):
				c, a = complex( c ), complex( a )
		else:
			raise ValueError( f'unknown context {context}' )
		self.c = c
		self.a = a
		self.context = context
		self.prime = prime
		self.a_cubed = a * a * a


	@classmethod
	def exact( cls, c: object, a: object ) -> CubicParam:
		return cls( c, a, 'exact' )


	@classmethod
	def complex( cls, c: object, a: object, extended: bool=False ) -> CubicParam:
		if extended:
			return cls( mpmath.mpc( c ), mpmath.mpc( a ), 'complex' )
		return cls( c, a, 'complex' )


	@classmethod
	def padic( cls, c: object, a: object, prime: int, digits: int=PADIC_DIGITS ) -> CubicParam:
		return cls( PAdic( to_rational( c ), prime, digits ), PAdic( to_rational( a ), prime, digits ),
		            'padic', prime )


	def embed( self ) -> CubicParam:
		'''Complex image of an exact parameter, with w sent to +1/sqrt(3).'''
		if self.context == 'complex':
			return self
		if self.context != 'exact':
			raise ValueError( 'only exact parameters embed into the complex numbers' )
		return CubicParam( self.c.to_complex( ), self.a.to_complex( ), 'complex' )


	def is_extended( self ) -> bool:
		return isinstance( self.c, mpmath.mpc )


	def __repr__( self ) -> str:
		return f'CubicParam({self.c}, {self.a}, {self.context})'


	def __dir__( self ) -> List[ str ] | None:
		return [ 'c', 'a', 'context', 'prime', 'a_cubed', 'exact', 'complex', 'padic', 'embed' ]


@dataclass( frozen=True )
class Cycle( ):
	'''A periodic cycle: points in orbit order, exact period and multiplier.'''
	points: Tuple[ complex, ... ]
	period: int
	multiplier: complex

	def to_json( self ) -> dict:
		return { 'points': [ [ repr( z.real ), repr( z.imag ) ] for z in map( complex, self.points ) ],
		         'period': self.period,
		         'multiplier': [ repr( complex( self.multiplier ).real ), repr( complex( self.multiplier ).imag ) ] }


def _zero( p: CubicParam ) -> object:
	if p.context == 'exact':
		return QOmega( )
	if p.context == 'padic':
		return PAdic( 0, p.prime )
	return p.c * 0


def critical_points( p: CubicParam ) -> Tuple[ object, object ]:
	'''Roots of P'(z) = z(z - c): (c0, c1) = (0, c).'''
	return _zero( p ), p.c


def eval_P( p: CubicParam, z: object ) -> object:
	'''Horner form z^2 (z/3 - c/2) + a^3.'''
	if p.context == 'exact' and is_exact_scalar( z ):
		z = QOmega.coerce( z )
	return z * z * ( z / 3 - p.c / 2 ) + p.a_cubed


def derivative( p: CubicParam, z: object ) -> object:
	return z * ( z - p.c )


def eval_Pn( p: CubicParam, z: object, n: int, bound: float=ESCAPE_BOUND ) -> object:
	'''

		Purpose:
		--------
		n-fold iterate of P. In the complex context an orbit magnitude above bound raises
		EscapeOverflow, which signals escape.

	'''
	if n < 0:
		raise ValueError( 'iteration count must be non-negative' )
	numeric = p.context == 'complex' and not isinstance( z, np.ndarray )
	for i in range( n ):
		z = eval_P( p, z )
		if numeric:
			magnitude = abs( z )
			if not magnitude <= bound:
				raise EscapeOverflow( f'orbit exceeded {bound:g} at iteration {i + 1}', iteration=i + 1,
				                      magnitude=float( magnitude ), cause='CubicParam',
				                      method='eval_Pn', module='dynamics' )
	return z


def orbit( p: CubicParam, z: object, n: int ) -> List[ object ]:
	'''z, P(z), ..., P^n(z).'''
	points = [ z ]
	for _ in range( n ):
		points.append( eval_P( p, points[ -1 ] ) )
	return points


def derivative_n( p: CubicParam, z: object, n: int ) -> object:
	'''(P^n)'(z) by the chain rule.'''
	total = 1
	for _ in range( n ):
		total = total * derivative( p, z )
		z = eval_P( p, z )
	return total


def escapes( p: CubicParam, z: complex, radius: float=None, cap: int=ITERATION_CAP ) -> Optional[ int ]:
	'''First iteration index with |P^n(z)| > radius, or None within the cap.'''
	if radius is None:
		radius = julia_radius( p )
	for n in range( cap + 1 ):
		if abs( z ) > radius:
			return n
		z = eval_P( p, z )
	return None


def julia_radius( p: CubicParam ) -> float:
	'''

		Purpose:
		--------
		A radius r with |P(z)| >= 1.01 |z| whenever |z| >= r; the filled Julia set and every
		periodic point lie inside.

	'''
	c, a3 = abs( complex( p.c ) ), abs( complex( p.a_cubed ) )
	r = math.sqrt( 3.0 )
	while r * r / 3 - c * r / 2 - a3 / r < 1.01:
		r *= 1.05
	return r


# ------------------------------------------------------------------------------------------
# Aberth-Ehrlich
# ------------------------------------------------------------------------------------------

def _aberth( newton_ratio, degree: int, radius: float, max_iter: int, tol: float ) -> Tuple[ np.ndarray, bool ]:
	angles = 2 * np.pi * np.arange( degree ) / degree + 0.4
	x = radius * np.exp( 1j * angles )
	converged = False
	for _ in range( max_iter ):
		with np.errstate( all='ignore' ):
			w = newton_ratio( x )
			diff = x[ :, None ] - x[ None, : ]
			np.fill_diagonal( diff, 1.0 )
			inverse = 1.0 / diff
			np.fill_diagonal( inverse, 0.0 )
			sums = inverse.sum( axis=1 )
			delta = w / ( 1.0 - w * sums )
		delta = np.where( np.isfinite( delta ), delta, 0.0 )
		x = x - delta
		if np.all( np.abs( delta ) <= tol * ( 1.0 + np.abs( x ) ) ):
			converged = True
			break
	return x, converged


def polyroots( coeffs: Sequence[ complex ], polish: bool=False, max_iter: int=ABERTH_MAX_ITER,
               tol: float=ABERTH_TOL ) -> np.ndarray:
	'''

		Purpose:
		--------
		All complex roots (with multiplicity) of sum coeffs[i] z^i by Aberth-Ehrlich iteration.
		Exact zero roots are stripped first; polish refines each root with mpmath Newton steps.

		Parameters:
		----------
		coeffs: Sequence[ complex ] - lowest degree first
		polish: bool - extended-precision refinement
		max_iter: int - iteration cap

		Returns:
		---------
		np.ndarray

	'''
	values = [ complex( v ) for v in coeffs ]
	while values and values[ -1 ] == 0:
		values.pop( )
	if not values:
		raise ValueError( 'the zero polynomial has no finite root set' )
	zeros = 0
	while values[ zeros ] == 0:
		zeros += 1
	monic = np.array( values[ zeros: ], dtype=complex ) / values[ -1 ]
	degree = len( monic ) - 1
	found = np.zeros( 0, dtype=complex )
	if degree == 1:
		found = np.array( [ -monic[ 0 ] ] )
	elif degree > 1:
		high_first = monic[ ::-1 ]
		slope = np.polyder( high_first )
		# Fujiwara bound
		radius = 2.0 * np.max( np.abs( monic[ :-1 ] ) ** ( 1.0 / np.arange( degree, 0, -1 ) ) ) + 1e-3
		found, converged = _aberth( lambda x: np.polyval( high_first, x ) / np.polyval( slope, x ),
		                            degree, radius, max_iter, tol )
		if not np.all( np.isfinite( found ) ):
			raise RootFindingFailure( 'Aberth iteration diverged', cause='polyroots',
			                          method='_aberth', module='dynamics' )
		if not converged:
			logger.debug( 'polyroots: degree %d not converged after %d iterations', degree, max_iter )
		if polish:
			found = _polish( list( values[ zeros: ] ), found )
	return np.concatenate( [ np.zeros( zeros, dtype=complex ), found ] )


def _polish( coeffs: List[ complex ], roots: np.ndarray ) -> np.ndarray:
	with mpmath.workdps( POLISH_DPS ):
		high_first = [ mpmath.mpc( v ) for v in reversed( coeffs ) ]
		out = [ ]
		for r in roots:
			z = mpmath.mpc( r )
			for _ in range( 8 ):
				value, slope = mpmath.polyval( high_first, z, derivative=True )
				if slope == 0:
					break
				step = value / slope
				z -= step
				if abs( step ) <= mpmath.mpf( 10 ) ** ( -POLISH_DPS + 5 ) * ( 1 + abs( z ) ):
					break
			out.append( complex( z ) )
	return np.array( out, dtype=complex )


# ------------------------------------------------------------------------------------------
# cycles
# ------------------------------------------------------------------------------------------

def mobius( n: int ) -> int:
	factors = sympy.factorint( n )
	if any( e > 1 for e in factors.values( ) ):
		return 0
	return -1 if len( factors ) % 2 else 1


def dynatomic_degree( m: int ) -> int:
	return sum( mobius( m // k ) * 3 ** k for k in sympy.divisors( m ) )


def _dynatomic_newton_ratio( p: CubicParam, z: np.ndarray, m: int ) -> np.ndarray:
	'''

		Purpose:
		--------
		Phi/Phi' for the dynatomic product Phi = prod_{k|m} (P^k(z) - z)^mu(m/k), from the
		iterated log-derivative. Orbits past the switch radius continue in log form
		(log z -> 3 log z - log 3) so high iterates never overflow.

	'''
	c, a3 = complex( p.c ), complex( p.a_cubed )
	z = np.asarray( z, dtype=complex )
	zk = z.copy( )
	slope = np.ones_like( z )
	log_z = np.zeros_like( z )
	log_slope = np.zeros_like( z )
	big = np.zeros( z.shape, dtype=bool )
	total = np.zeros_like( z )
	weights = { k: mobius( m // k ) for k in sympy.divisors( m ) }
	with np.errstate( all='ignore' ):
		for k in range( 1, m + 1 ):
			small = ~big
			slope[ small ] = slope[ small ] * zk[ small ] * ( zk[ small ] - c )
			zk[ small ] = zk[ small ] * zk[ small ] * ( zk[ small ] / 3 - c / 2 ) + a3
			log_slope[ big ] = log_slope[ big ] + 2 * log_z[ big ]
			log_z[ big ] = 3 * log_z[ big ] - _LOG3
			switch = small & ( np.abs( zk ) > _LOG_SWITCH )
			log_z[ switch ] = np.log( zk[ switch ] )
			log_slope[ switch ] = np.log( slope[ switch ] )
			big = big | switch
			weight = weights.get( k, 0 )
			if weight:
				ratio = np.where( big, np.exp( log_slope - log_z ), ( slope - 1 ) / ( zk - z ) )
				total = total + weight * ratio
		return 1.0 / total


def _refine( p: CubicParam, z: complex, m: int ) -> complex:
	for _ in range( 20 ):
		value, slope = z, 1 + 0j
		for _ in range( m ):
			slope *= derivative( p, value )
			value = eval_P( p, value )
		residual = value - z
		if abs( residual ) < REFINE_TOL * 1e-2 or slope == 1:
			break
		z = z - residual / ( slope - 1 )
	return z


def _residual( p: CubicParam, z: complex, m: int ) -> float:
	return abs( eval_Pn( p, z, m ) - z )


def exact_period( p: CubicParam, z: complex, m: int, tol: float=PERIOD_TOL ) -> Optional[ int ]:
	'''Least k dividing m with P^k(z) = z within tol, or None.'''
	for k in sympy.divisors( m ):
		if abs( eval_Pn( p, z, k ) - z ) <= tol * max( 1.0, abs( z ) ):
			return k
	return None


def find_cycles( p: CubicParam, m: int, max_period: int=MAX_PERIOD ) -> List[ Cycle ]:
	'''

		Purpose:
		--------
		All cycles of exact period m: roots of the dynatomic polynomial by Aberth iteration,
		refined by Newton steps on P^m(z) - z, filtered by exact period and grouped into
		orbits.

		Parameters:
		----------
		p: CubicParam - complex context
		m: int - period, at most max_period

		Returns:
		---------
		List[ Cycle ]

	'''
	throw_if( 'p', p )
	if m < 1 or m > max_period:
		raise ValueError( f'period must lie in 1..{max_period}' )
	p = p.embed( ) if p.context == 'exact' else p
	if p.context != 'complex':
		raise ValueError( 'find_cycles works in the complex context' )
	if p.is_extended( ):
		p = CubicParam( complex( p.c ), complex( p.a ) )
	degree = dynatomic_degree( m )
	radius = julia_radius( p )
	roots, converged = _aberth( lambda x: _dynatomic_newton_ratio( p, x, m ), degree, radius,
	                            ABERTH_MAX_ITER, ABERTH_TOL )
	if not np.all( np.isfinite( roots ) ):
		raise RootFindingFailure( f'Aberth iteration diverged for period {m}', cause='find_cycles',
		                          method='_aberth', module='dynamics' )
	if not converged:
		logger.debug( 'find_cycles: Aberth not converged for period %d; refining', m )
	refined = [ ]
	for r in roots:
		z = _refine( p, complex( r ), m )
		if _residual( p, z, m ) >= REFINE_TOL * max( 1.0, abs( z ) ):
			z = _polish_periodic( p, z, m )
		refined.append( z )
	candidates = [ z for z in refined if exact_period( p, z, m ) == m ]
	return _group_cycles( p, candidates, m )


def _polish_periodic( p: CubicParam, z: complex, m: int ) -> complex:
	with mpmath.workdps( POLISH_DPS ):
		q = CubicParam( mpmath.mpc( p.c ), mpmath.mpc( p.a ) )
		w = mpmath.mpc( z )
		for _ in range( 30 ):
			value, slope = w, mpmath.mpc( 1 )
			for _ in range( m ):
				slope *= derivative( q, value )
				value = eval_P( q, value )
			if slope == 1:
				break
			step = ( value - w ) / ( slope - 1 )
			w -= step
			if abs( step ) < mpmath.mpf( 10 ) ** ( -POLISH_DPS + 4 ):
				break
		result = complex( w )
	if _residual( p, result, m ) >= 1e-6 * max( 1.0, abs( result ) ):
		raise RootFindingFailure( f'periodic point near {z} did not converge', cause='find_cycles',
		                          method='_polish_periodic', module='dynamics' )
	return result


def _group_cycles( p: CubicParam, points: List[ complex ], m: int ) -> List[ Cycle ]:
	remaining = list( points )
	cycles: List[ Cycle ] = [ ]
	while remaining:
		start = remaining.pop( 0 )
		members = [ start ]
		z = start
		for _ in range( m - 1 ):
			z = eval_P( p, z )
			if remaining:
				nearest = min( range( len( remaining ) ), key=lambda i: abs( remaining[ i ] - z ) )
				if abs( remaining[ nearest ] - z ) <= 1e-6 * max( 1.0, abs( z ) ):
					z = remaining.pop( nearest )
			members.append( z )
		if any( _same_cycle( members, cycle.points ) for cycle in cycles ):
			continue
		multiplier = 1 + 0j
		for w in members:
			multiplier *= derivative( p, w )
		cycles.append( Cycle( tuple( members ), m, multiplier ) )
	return cycles


def _same_cycle( members: Sequence[ complex ], points: Sequence[ complex ] ) -> bool:
	return any( abs( members[ 0 ] - w ) <= 1e-6 * max( 1.0, abs( w ) ) for w in points )
