'''
  ******************************************************************************************
      Assembly:                Cubo
      Filename:                classify.py
      Author:                  Terry D. Eppler
      Created:                 05-31-2022

      Last Modified By:        Terry D. Eppler
      Last Modified On:        10-17-2026
  ******************************************************************************************
  <copyright file="classify.py" company="Terry D. Eppler">

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
    classify.py

    Checks on special parameter curves: the symmetry polynomials
    Q = zeta P^m + (1 - zeta) c/2, commutators reduced modulo a curve, collision curves of
    the two critical orbits, the sets Z(q, m, zeta), the critical set permutation and the
    growth of critical orbits along branches at infinity.
  </summary>
  ******************************************************************************************
'''
from __future__ import annotations
import cmath
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, List, Optional, Tuple

import mpmath
import numpy as np
import sympy

from boogr import DegreeCapExceeded, PrecisionExhausted, RootFindingFailure, throw_if
from dynamics import CubicParam, eval_Pn, polyroots
from exactalg import (A, A_SYMBOL, BiPoly, C, C_SYMBOL, NUMERIC_DPS, PuiseuxSeries, QOmega, UniPoly,
                      Z_SYMBOL, is_exact_scalar, newton_puiseux, reduce_mod_curve, squarefree_part)
from green import green_arch
from periodic import iterate_uni

logger = logging.getLogger( __name__ )

DEGREE_CAP = 81
Q_CAP = 4
MAX_BRANCH_STEPS = 8
MAX_ROOT_ORDER = 60
COMMUTE_TOL = 1e-9
COMMUTE_SAMPLES = 30
HAUSDORFF_TOL = 1e-7
POINT_TOL = 1e-8
LINE_TOL = 1e-6
PROBE_LINES = 3
FFT_CAP = 4096
RELATIVE_TERMS = 16
RETRIES = 3


def symmetry_curve( ) -> BiPoly:
	'''12a^3 - c^3 - 6c, where z -> -z + c commutes with P.'''
	return A ** 3 * 12 - C ** 3 - C * 6


# ------------------------------------------------------------------------------------------
# roots of unity
# ------------------------------------------------------------------------------------------

def _exact_sign( zeta: object ) -> Optional[ int ]:
	if is_exact_scalar( zeta ):
		value = QOmega.coerce( zeta )
		if value == QOmega( 1 ):
			return 1
		if value == QOmega( -1 ):
			return -1
		raise ValueError( f'{zeta} is not an exact root of unity' )
	value = complex( zeta )
	if abs( value - 1 ) < 1e-14:
		return 1
	if abs( value + 1 ) < 1e-14:
		return -1
	return None


def root_order( zeta: object ) -> int:
	'''Multiplicative order of a root of unity.'''
	sign = _exact_sign( zeta )
	if sign is not None:
		return 1 if sign == 1 else 2
	value = complex( zeta )
	for r in range( 1, MAX_ROOT_ORDER + 1 ):
		if abs( value ** r - 1 ) < 1e-10:
			return r
	raise ValueError( f'{zeta} is not a root of unity of order <= {MAX_ROOT_ORDER}' )


def symmetry_order( zeta: object ) -> Optional[ int ]:
	'''Least k >= 1 with zeta^(3^k) = zeta, or None when no such k exists.'''
	r = root_order( zeta )
	if math.gcd( r, 3 ) != 1:
		return None
	k = 1
	while pow( 3, k, r ) != 1 % r:
		k += 1
	return k


def _zeta_label( zeta: object ) -> str:
	sign = _exact_sign( zeta )
	if sign is not None:
		return str( sign )
	value = complex( zeta )
	return f'{value.real!r}{value.imag:+.17g}j'


def _sympy_zeta( zeta: object ) -> Optional[ sympy.Expr ]:
	sign = _exact_sign( zeta )
	if sign is not None:
		return sympy.Integer( sign )
	value = complex( zeta )
	if abs( value - 1j ) < 1e-14:
		return sympy.I
	if abs( value + 1j ) < 1e-14:
		return -sympy.I
	return None


# ------------------------------------------------------------------------------------------
# symmetry polynomials
# ------------------------------------------------------------------------------------------

@dataclass( frozen=True )
class SymmetryCandidate( ):
	'''

		Purpose:
		--------
		Q(z) = zeta P^m(z) + (1 - zeta) c/2 with the least k such that zeta^(3^k) = zeta.
		poly is a UniPoly over BiPoly for zeta = +1 or -1 and None otherwise.

	'''
	m: int
	zeta: object
	k: Optional[ int ]
	poly: Optional[ UniPoly ]

	@property
	def degree( self ) -> int:
		return 3 ** self.m


	def is_exact( self ) -> bool:
		return self.poly is not None


	def evaluate( self, c: complex, a: complex, z: object ) -> object:
		zeta = complex( self.zeta ) if not is_exact_scalar( self.zeta ) else QOmega.coerce( self.zeta ).to_complex( )
		return zeta * _iterate_np( z, c, a, self.m ) + ( 1 - zeta ) * c / 2


	def __dir__( self ) -> List[ str ] | None:
		return [ 'm', 'zeta', 'k', 'poly', 'degree', 'is_exact', 'evaluate' ]


def symmetry_candidate( m: int, zeta: object ) -> SymmetryCandidate:
	if m < 0:
		raise ValueError( 'm must be non-negative' )
	k = symmetry_order( zeta )
	sign = _exact_sign( zeta )
	poly = None
	if sign is not None:
		shift = UniPoly( [ C.scale( Fraction( 1 - sign, 2 ) ) ], BiPoly( ) )
		poly = iterate_uni( m ).scale( QOmega( sign ) ) + shift
	return SymmetryCandidate( m, zeta, k, poly )


def _p_np( z: object, c: object, a: object ) -> object:
	return z * z * ( z / 3 - c / 2 ) + a ** 3


def _iterate_np( z: object, c: object, a: object, n: int ) -> object:
	for _ in range( n ):
		z = _p_np( z, c, a )
	return z


@lru_cache( maxsize=None )
def _commutator( m: int, sign: int ) -> UniPoly:
	candidate = symmetry_candidate( m, sign )
	power = iterate_uni( candidate.k )
	return candidate.poly.compose( power ) - power.compose( candidate.poly )


def commutator( candidate: SymmetryCandidate ) -> UniPoly:
	'''Q o P^k - P^k o Q as a polynomial in z over BiPoly.'''
	if not candidate.is_exact( ):
		raise ValueError( 'the exact commutator needs zeta = +1 or -1' )
	return _commutator( candidate.m, _exact_sign( candidate.zeta ) )


def commutator_on_curve( m: int, zeta: object, curve: BiPoly ) -> List[ BiPoly ]:
	'''

		Purpose:
		--------
		Remainders of the z-coefficients of Q o P^k - P^k o Q modulo the curve. All zero
		exactly when the commutation holds identically on the curve.

		Parameters:
		----------
		m: int
		zeta: +1 or -1
		curve: BiPoly

		Returns:
		---------
		List[ BiPoly ]

	'''
	throw_if( 'curve', curve )
	if _exact_sign( zeta ) is None:
		raise ValueError( 'commutator_on_curve works with zeta = +1 or -1' )
	principal = 'a' if curve.degree( 'a' ) > 0 else 'c'
	remainders = [ ]
	for coefficient in commutator( symmetry_candidate( m, zeta ) ).coeffs:
		remainders.append( reduce_mod_curve( coefficient, curve, principal ).remainder )
	logger.debug( 'commutator_on_curve: m=%d zeta=%s, %d nonzero remainders', m, zeta,
	              sum( 1 for r in remainders if r ) )
	return remainders


def _orbit_value( i: int, n: int ) -> BiPoly:
	z = BiPoly( ) if i == 0 else C
	for _ in range( n ):
		z = z * z * ( z.scale( Fraction( 1, 3 ) ) - C.scale( Fraction( 1, 2 ) ) ) + A ** 3
	return z


def collision_curve( m: int, k: int, cap: int=DEGREE_CAP ) -> BiPoly:
	'''

		Purpose:
		--------
		P^m(c_1) - P^k(c_0) with c_0 = 0 and c_1 = c. The pair (1, 1) is flagged in the log
		and still returned.

	'''
	if m < 0 or k < 0:
		raise ValueError( 'iteration counts must be non-negative' )
	if 3 ** max( m, k ) > cap:
		raise DegreeCapExceeded( f'3^{max( m, k )} exceeds the degree cap {cap}', cause='collision_curve',
		                         method='collision_curve', module='classify' )
	if (m, k) == (1, 1):
		logger.warning( 'collision_curve: (1, 1) is the unicritical line c = 0, not a collision curve' )
	return _orbit_value( 1, m ) - _orbit_value( 0, k )


# ------------------------------------------------------------------------------------------
# membership in Z(q, m, zeta)
# ------------------------------------------------------------------------------------------

PAIRS = ( (0, 1), (1, 0) )


@dataclass( frozen=True )
class Membership( ):
	'''Outcome of a Z(q, m, zeta) test with its witness (k, (i, j)).'''
	member: bool
	q: int
	m: int
	zeta: str
	mode: str
	k: Optional[ int ]=None
	pair: Optional[ Tuple[ int, int ] ]=None
	commutes: bool=False

	def to_json( self ) -> Dict[ str, object ]:
		return { 'member': self.member, 'q': self.q, 'm': self.m, 'zeta': self.zeta, 'mode': self.mode,
		         'commutes': self.commutes,
		         'witness': None if self.pair is None else { 'k': self.k, 'pair': list( self.pair ) } }


def _commutes_exact( candidate: SymmetryCandidate, c: QOmega, a: QOmega ) -> bool:
	return all( not coefficient.evaluate( c, a ) for coefficient in commutator( candidate ).coeffs )


def _commutes_numeric( candidate: SymmetryCandidate, c: complex, a: complex,
                       samples: int=COMMUTE_SAMPLES, tol: float=COMMUTE_TOL ) -> bool:
	rng = np.random.default_rng( 0 )
	z = np.exp( 2j * np.pi * rng.random( samples ) ) * ( 0.5 + rng.random( samples ) )
	left = candidate.evaluate( c, a, _iterate_np( z, c, a, candidate.k ) )
	right = _iterate_np( candidate.evaluate( c, a, z ), c, a, candidate.k )
	scale = np.maximum( 1.0, np.maximum( np.abs( left ), np.abs( right ) ) )
	return bool( np.all( np.abs( left - right ) <= tol * scale ) )


def z_membership( q: int, m: int, zeta: object, c: object, a: object, mode: str='numeric' ) -> Membership:
	'''

		Purpose:
		--------
		(c, a) lies in Z(q, m, zeta) when Q commutes with P^k and Q(P^q(c_i)) = P^q(c_j) for
		(i, j) = (0, 1) or (1, 0). Exact mode works over Q(w) with zeta = +1 or -1; numeric
		mode checks the commutation on 30 sample points to 1e-9.

		Parameters:
		----------
		q: int - orbit depth
		m: int - iterate in Q
		zeta: root of unity
		c, a: parameter
		mode: str - 'exact' or 'numeric'

		Returns:
		---------
		Membership

	'''
	throw_if( 'mode', mode )
	if q < 0:
		raise ValueError( 'q must be non-negative' )
	candidate = symmetry_candidate( m, zeta )
	label = _zeta_label( zeta )
	if candidate.k is None:
		return Membership( False, q, m, label, mode )
	if mode == 'exact':
		if not candidate.is_exact( ):
			raise ValueError( 'exact mode needs zeta = +1 or -1' )
		c, a = QOmega.coerce( c ), QOmega.coerce( a )
		if not _commutes_exact( candidate, c, a ):
			return Membership( False, q, m, label, mode, candidate.k )
		p = CubicParam.exact( c, a )
		orbit = ( eval_Pn( p, QOmega( ), q ), eval_Pn( p, c, q ) )
		Q = candidate.poly.specialize( c, a )
		for i, j in PAIRS:
			if Q( orbit[ i ] ) == orbit[ j ]:
				return Membership( True, q, m, label, mode, candidate.k, (i, j), True )
		return Membership( False, q, m, label, mode, candidate.k, commutes=True )
	if mode != 'numeric':
		raise ValueError( f'unknown mode {mode}' )
	c = QOmega.coerce( c ).to_complex( ) if is_exact_scalar( c ) else complex( c )
	a = QOmega.coerce( a ).to_complex( ) if is_exact_scalar( a ) else complex( a )
	if not _commutes_numeric( candidate, c, a ):
		return Membership( False, q, m, label, mode, candidate.k )
	orbit = ( _iterate_np( 0j, c, a, q ), _iterate_np( c, c, a, q ) )
	for i, j in PAIRS:
		value = candidate.evaluate( c, a, orbit[ i ] )
		if abs( value - orbit[ j ] ) <= COMMUTE_TOL * max( 1.0, abs( value ), abs( orbit[ j ] ) ):
			return Membership( True, q, m, label, mode, candidate.k, (i, j), True )
	return Membership( False, q, m, label, mode, candidate.k, commutes=True )


@dataclass( frozen=True )
class ZSearch( ):
	'''First q <= q_cap with (c, a) in Z(q, m, zeta); found is None when the cap runs out.'''
	found: Optional[ int ]
	q_cap: int
	witness: Optional[ Membership ]

	def to_json( self ) -> Dict[ str, object ]:
		return { 'found': self.found, 'q_cap': self.q_cap, 'exhausted': self.found is None,
		         'witness': None if self.witness is None else self.witness.to_json( ) }


def z_search( m: int, zeta: object, c: object, a: object, q_cap: int=Q_CAP, mode: str='numeric' ) -> ZSearch:
	'''Searches q = 0..q_cap; a miss reports the cap, not non-membership.'''
	if q_cap < 0:
		raise ValueError( 'q_cap must be non-negative' )
	for q in range( q_cap + 1 ):
		result = z_membership( q, m, zeta, c, a, mode )
		if result.member:
			return ZSearch( q, q_cap, result )
		if result.k is None or not result.commutes:
			break
	logger.debug( 'z_search: no q <= %d found for m=%d', q_cap, m )
	return ZSearch( None, q_cap, None )


# ------------------------------------------------------------------------------------------
# probes of Z(q, m, zeta)
# ------------------------------------------------------------------------------------------

@dataclass( frozen=True )
class ZProbe( ):
	'''

		Purpose:
		--------
		Shape of Z(q, m, zeta): 'curve' with its square-free equation, 'finite' with the
		points found, 'empty', or 'plane' when no constraint survives.

	'''
	q: int
	m: int
	zeta: str
	kind: str
	exact: bool
	curve: Optional[ BiPoly ]=None
	points: Tuple[ Tuple[ complex, complex ], ... ]=( )
	notes: Tuple[ str, ... ]=field( default=( ) )

	def to_json( self ) -> Dict[ str, object ]:
		return { 'q': self.q, 'm': self.m, 'zeta': self.zeta, 'kind': self.kind, 'exact': self.exact,
		         'curve': None if self.curve is None else self.curve.to_json( ),
		         'points': [ [ [ repr( c.real ), repr( c.imag ) ], [ repr( a.real ), repr( a.imag ) ] ]
		                     for c, a in self.points ],
		         'notes': list( self.notes ) }


def _sympy_step( z: sympy.Expr ) -> sympy.Expr:
	return sympy.expand( z ** 3 / 3 - C_SYMBOL * z ** 2 / 2 + A_SYMBOL ** 3 )


def _sympy_iterate( z: sympy.Expr, n: int ) -> sympy.Expr:
	for _ in range( n ):
		z = _sympy_step( z )
	return z


def _sympy_q( z: sympy.Expr, m: int, zeta: sympy.Expr ) -> sympy.Expr:
	return sympy.expand( zeta * _sympy_iterate( z, m ) + ( 1 - zeta ) * C_SYMBOL / 2 )


def _is_ground( expr: sympy.Expr ) -> bool:
	return not expr.has( C_SYMBOL ) and not expr.has( A_SYMBOL )


def _gcd( exprs: List[ sympy.Expr ], options: Dict[ str, object ] ) -> sympy.Expr:
	return reduce( lambda x, y: sympy.gcd( x, y, C_SYMBOL, A_SYMBOL, **options ), exprs )


def _lcm( exprs: List[ sympy.Expr ], options: Dict[ str, object ] ) -> sympy.Expr:
	return reduce( lambda x, y: sympy.lcm( x, y, C_SYMBOL, A_SYMBOL, **options ), exprs )


def _terms( expr: sympy.Expr ) -> List[ Tuple[ int, int, complex ] ]:
	poly = sympy.Poly( expr, C_SYMBOL, A_SYMBOL )
	return [ (i, j, complex( sympy.N( v, 30 ) )) for (i, j), v in poly.terms( ) ]


def _scaled_value( terms: List[ Tuple[ int, int, complex ] ], c: complex, a: complex ) -> float:
	value = sum( v * c ** i * a ** j for i, j, v in terms )
	scale = sum( abs( v ) * abs( c ) ** i * abs( a ) ** j for i, j, v in terms )
	return abs( value ) / max( scale, 1e-300 )


def _roots_of_terms( terms: List[ Tuple[ int, int, complex ] ], var: int, fixed: complex ) -> Optional[ List[ complex ] ]:
	'''Roots in one variable with the other fixed; None when the restriction vanishes.'''
	degree = max( ( t[ var ] for t in terms ), default=0 )
	coeffs = [ 0j ] * ( degree + 1 )
	for t in terms:
		coeffs[ t[ var ] ] += t[ 2 ] * fixed ** t[ 1 - var ]
	top = max( ( abs( v ) for v in coeffs ), default=0.0 )
	scale = sum( abs( t[ 2 ] ) * abs( fixed ) ** t[ 1 - var ] for t in terms )
	if top <= 1e-12 * max( scale, 1e-300 ):
		return None
	while abs( coeffs[ -1 ] ) <= 1e-14 * top:
		coeffs.pop( )
	if len( coeffs ) < 2:
		return [ ]
	return [ complex( r ) for r in polyroots( coeffs, polish=True ) ]


def _common_points( exprs: List[ sympy.Expr ], options: Dict[ str, object ] ) -> List[ Tuple[ complex, complex ] ]:
	'''

		Purpose:
		--------
		Common zeros of finitely many polynomials in (c, a) with no common curve: the first
		coprime pair is eliminated by a resultant in a, and every candidate is checked
		against all of them by scaled residual.

	'''
	exprs = [ e for e in exprs if e != 0 ]
	if not exprs:
		return [ ]
	if any( _is_ground( e ) for e in exprs ):
		return [ ]
	ordered = sorted( exprs, key=lambda e: ( sympy.Poly( e, C_SYMBOL, A_SYMBOL ).total_degree( ), sympy.count_ops( e ) ) )
	pair = None
	for x in range( len( ordered ) ):
		for y in range( x + 1, len( ordered ) ):
			if _is_ground( _gcd( [ ordered[ x ], ordered[ y ] ], options ) ):
				pair = (ordered[ x ], ordered[ y ])
				break
		if pair is not None:
			break
	if pair is None:
		logger.warning( '_common_points: no coprime pair among %d constraints', len( exprs ) )
		return [ ]
	f, g = pair
	if not f.has( A_SYMBOL ):
		eliminant = f
	elif not g.has( A_SYMBOL ):
		eliminant = g
	else:
		eliminant = sympy.resultant( f, g, A_SYMBOL )
	eliminant = sympy.expand( eliminant )
	if _is_ground( eliminant ):
		return [ ]
	all_terms = [ _terms( e ) for e in exprs ]
	c_terms = [ (i, 0, v) for i, _, v in _terms( eliminant ) ]
	candidates = _roots_of_terms( c_terms, 0, 1.0 ) or [ ]
	points: List[ Tuple[ complex, complex ] ] = [ ]
	for c in candidates:
		roots = None
		for terms in ( _terms( f ), _terms( g ) ):
			roots = _roots_of_terms( terms, 1, c )
			if roots is not None:
				break
		for a in roots or [ ]:
			if all( _scaled_value( t, c, a ) < POINT_TOL for t in all_terms ):
				if all( abs( c - u ) + abs( a - v ) > 1e-7 for u, v in points ):
					points.append( (c, a) )
	points.sort( key=lambda p: ( round( p[ 0 ].real, 8 ), round( p[ 0 ].imag, 8 ),
	                             round( p[ 1 ].real, 8 ), round( p[ 1 ].imag, 8 ) ) )
	return points


def _probe_exact( q: int, m: int, zeta: sympy.Expr, k: int ) -> Tuple[ str, Optional[ sympy.Expr ], List ]:
	options = { } if zeta.is_real else { 'extension': sympy.I }
	z = Z_SYMBOL
	power = _sympy_iterate( z, k )
	difference = sympy.expand( _sympy_q( power, m, zeta ) - _sympy_iterate( _sympy_q( z, m, zeta ), k ) )
	constraints = [ ] if difference == 0 else [ sympy.expand( v ) for v in sympy.Poly( difference, z ).all_coeffs( ) ]
	constraints = [ v for v in constraints if v != 0 ]
	start = ( sympy.Integer( 0 ), C_SYMBOL )
	orbit = tuple( _sympy_iterate( s, q ) for s in start )
	relations = [ sympy.expand( _sympy_q( orbit[ i ], m, zeta ) - orbit[ j ] ) for i, j in PAIRS ]
	if not constraints:
		if any( r == 0 for r in relations ):
			return 'plane', None, [ ]
		return 'curve', _lcm( relations, options ), [ ]
	common = _gcd( constraints, options )
	components = [ ]
	for r in relations:
		g = common if r == 0 else _gcd( [ common, r ], options )
		if not _is_ground( g ):
			components.append( g )
	if components:
		return 'curve', _lcm( components, options ), [ ]
	points: List[ Tuple[ complex, complex ] ] = [ ]
	for r in relations:
		for point in _common_points( constraints + [ r ], options ):
			if all( abs( point[ 0 ] - u ) + abs( point[ 1 ] - v ) > 1e-7 for u, v in points ):
				points.append( point )
	return ( 'finite' if points else 'empty' ), None, points


def _line_relation_coeffs( values: np.ndarray, degree: int ) -> List[ complex ]:
	coeffs = np.fft.fft( values ) / len( values )
	coeffs = list( coeffs[ :degree + 1 ] )
	top = max( abs( v ) for v in coeffs )
	while coeffs and abs( coeffs[ -1 ] ) <= 1e-10 * top:
		coeffs.pop( )
	return coeffs


def _probe_numeric( q: int, m: int, zeta: complex, k: int, seed: int,
                    lines: int ) -> Tuple[ str, List[ str ] ]:
	'''

		Purpose:
		--------
		Numeric dimension test: a curve in Z meets every line, so a random line carrying no
		common zero of the relation and the commutation certifies finiteness numerically.

	'''
	candidate = symmetry_candidate( m, zeta )
	degree = 3 ** ( q + m )
	if degree > FFT_CAP // 2:
		raise DegreeCapExceeded( f'relation degree {degree} is too large for the line test',
		                         cause='z_probe', method='_probe_numeric', module='classify' )
	size = 16
	while size < 2 * ( degree + 1 ):
		size *= 2
	rng = np.random.default_rng( seed )
	s = np.exp( 2j * np.pi * np.arange( size ) / size )
	notes = [ ]
	for line in range( lines ):
		base = rng.normal( size=2 ) + 1j * rng.normal( size=2 )
		direction = rng.normal( size=2 ) + 1j * rng.normal( size=2 )
		c_line, a_line = base[ 0 ] + s * direction[ 0 ], base[ 1 ] + s * direction[ 1 ]
		orbit = ( _iterate_np( np.zeros( size, dtype=complex ), c_line, a_line, q ),
		          _iterate_np( c_line.copy( ), c_line, a_line, q ) )
		hit = False
		for i, j in PAIRS:
			values = candidate.evaluate( c_line, a_line, orbit[ i ] ) - orbit[ j ]
			coeffs = _line_relation_coeffs( values, degree )
			if not coeffs:
				hit = True
				break
			if len( coeffs ) < 2:
				continue
			for root in polyroots( coeffs, polish=True ):
				c, a = base[ 0 ] + root * direction[ 0 ], base[ 1 ] + root * direction[ 1 ]
				if _commutes_numeric( candidate, complex( c ), complex( a ), tol=LINE_TOL ):
					hit = True
					break
			if hit:
				break
		if not hit:
			notes.append( f'line {line} carries no common zero' )
			return 'finite', notes
	notes.append( f'all {lines} lines meet the set' )
	return 'curve', notes


def z_probe( q: int, m: int, zeta: object, seed: int=0, lines: int=PROBE_LINES ) -> ZProbe:
	'''

		Purpose:
		--------
		Classifies Z(q, m, zeta) as a curve or a finite set. zeta = +1, -1 use exact gcds
		over Q and +i, -i over Q(i) of the commutation constraints and the two orbit
		relations; primitive cube and sixth roots give the empty set; other roots of unity
		run the numeric line test.

		Parameters:
		----------
		q: int
		m: int
		zeta: root of unity
		seed: int - line sampling seed

		Returns:
		---------
		ZProbe

	'''
	if q < 0 or m < 0:
		raise ValueError( 'q and m must be non-negative' )
	label = _zeta_label( zeta )
	k = symmetry_order( zeta )
	if k is None:
		return ZProbe( q, m, label, 'empty', True, notes=( 'no k with zeta^(3^k) = zeta', ) )
	exact_zeta = _sympy_zeta( zeta )
	if exact_zeta is None:
		kind, notes = _probe_numeric( q, m, complex( zeta ), k, seed, lines )
		return ZProbe( q, m, label, kind, False, notes=tuple( notes ) )
	kind, curve, points = _probe_exact( q, m, exact_zeta, k )
	if kind == 'curve':
		if exact_zeta.is_real:
			polynomial = squarefree_part( BiPoly.from_sympy( sympy.expand( curve ) ) )
			logger.info( 'z_probe: Z(%d, %d, %s) contains the curve %s', q, m, label, polynomial )
			return ZProbe( q, m, label, 'curve', True, polynomial )
		return ZProbe( q, m, label, 'curve', True, notes=( str( sympy.expand( curve ) ), ) )
	return ZProbe( q, m, label, kind, True, points=tuple( points ) )


# ------------------------------------------------------------------------------------------
# critical sets
# ------------------------------------------------------------------------------------------

def _preimages( c: mpmath.mpc, a: mpmath.mpc, target: mpmath.mpc ) -> List[ mpmath.mpc ]:
	coeffs = [ mpmath.mpf( 1 ) / 3, -c / 2, 0, a ** 3 - target ]
	try:
		return list( mpmath.polyroots( coeffs, maxsteps=200, extraprec=60 ) )
	except mpmath.libmp.NoConvergence:
		roots = polyroots( [ complex( v ) for v in reversed( coeffs ) ], polish=True )
		return [ mpmath.mpc( complex( r ) ) for r in roots ]


def critical_set( c: complex, a: complex, n: int ) -> List[ complex ]:
	'''Distinct roots of (P^n)' = prod_j P'(P^j): the union of P^-j({0, c}) over j < n.'''
	if n < 0:
		raise ValueError( 'n must be non-negative' )
	points: List[ complex ] = [ ]
	with mpmath.workdps( NUMERIC_DPS ):
		cc, aa = mpmath.mpc( complex( c ) ), mpmath.mpc( complex( a ) )
		level = [ mpmath.mpc( 0 ), cc ]
		for j in range( n ):
			for w in level:
				value = complex( w )
				if all( abs( value - u ) > HAUSDORFF_TOL * max( 1.0, abs( u ) ) for u in points ):
					points.append( value )
			if j + 1 < n:
				level = [ root for w in level for root in _preimages( cc, aa, w ) ]
	return points


def _matched( left: List[ complex ], right: List[ complex ], tol: float ) -> bool:
	'''Mutual nearest neighbours within tol in both directions.'''
	if not left or not right:
		return not left and not right
	for source, target in ( (left, right), (right, left) ):
		for u in source:
			nearest = min( target, key=lambda v: abs( u - v ) )
			back = min( source, key=lambda v: abs( nearest - v ) )
			if abs( u - nearest ) > tol * max( 1.0, abs( u ) ) or abs( back - u ) > tol * max( 1.0, abs( u ) ):
				return False
	return True


def critical_set_permutation_check( c: complex, a: complex, m: int, k: int, zeta: object=-1 ) -> bool:
	'''

		Purpose:
		--------
		Q(crit(P^(k+m))) = Q(crit(P^m)) u crit(P^k) as point sets, matched within 1e-7.

	'''
	candidate = symmetry_candidate( m, zeta )
	if candidate.k is None:
		raise ValueError( f'no k with zeta^(3^k) = zeta for {zeta}' )
	if k < 1:
		raise ValueError( 'k must be positive' )
	c, a = complex( c ), complex( a )
	try:
		left = [ complex( candidate.evaluate( c, a, w ) ) for w in critical_set( c, a, k + m ) ]
		right = [ complex( candidate.evaluate( c, a, w ) ) for w in critical_set( c, a, m ) ]
		right += critical_set( c, a, k )
	except ( ValueError, ZeroDivisionError ) as e:
		raise RootFindingFailure( f'critical set failed: {e}', cause='critical_set',
		                          method='critical_set_permutation_check', module='classify' )
	return _matched( _distinct( left ), _distinct( right ), HAUSDORFF_TOL )


def _distinct( values: List[ complex ] ) -> List[ complex ]:
	out: List[ complex ] = [ ]
	for v in values:
		if all( abs( v - u ) > HAUSDORFF_TOL * max( 1.0, abs( u ) ) for u in out ):
			out.append( v )
	return out


# ------------------------------------------------------------------------------------------
# growth along branches at infinity
# ------------------------------------------------------------------------------------------

@dataclass( frozen=True )
class CriticalGrowth( ):
	'''ord_t of P^q(c_i) for q = 1..steps along one branch (None for an exact zero).'''
	index: int
	orders: Tuple[ Optional[ Fraction ], ... ]
	classification: str
	rate: Optional[ Fraction ]=None
	escape_step: Optional[ int ]=None
	leading: object=None
	stable: bool=False

	def to_json( self ) -> Dict[ str, object ]:
		leading = None
		if isinstance( self.leading, QOmega ):
			leading = self.leading.to_json( )
		elif self.leading is not None:
			value = complex( self.leading )
			leading = [ repr( value.real ), repr( value.imag ) ]
		return { 'i': self.index, 'orders': [ None if v is None else str( v ) for v in self.orders ],
		         'classification': self.classification,
		         'rate': None if self.rate is None else str( self.rate ),
		         'escape_step': self.escape_step, 'leading': leading, 'stable': self.stable }


@dataclass( frozen=True )
class BranchGrowth( ):
	'''Growth of both critical orbits along one branch at infinity of a curve.'''
	branch: object
	steps: int
	bound: Fraction
	critical: Tuple[ CriticalGrowth, CriticalGrowth ]

	def classification( self, i: int ) -> str:
		return self.critical[ i ].classification


	def rate( self, i: int ) -> Optional[ Fraction ]:
		return self.critical[ i ].rate


	def to_json( self ) -> Dict[ str, object ]:
		return { 'branch': self.branch.to_json( ), 'steps': self.steps, 'bound': str( self.bound ),
		         'critical': [ g.to_json( ) for g in self.critical ] }


def _series_step( z: PuiseuxSeries, c: PuiseuxSeries, a_cubed: PuiseuxSeries,
                  third: object, half: object ) -> PuiseuxSeries:
	return z * z * ( z.scale( third ) - c.scale( half ) ) + a_cubed


def _track( index: int, start: PuiseuxSeries, c: PuiseuxSeries, a_cubed: PuiseuxSeries,
            bound: Fraction, steps: int, relative: int, exact: bool ) -> CriticalGrowth:
	third = QOmega( Fraction( 1, 3 ) ) if exact else mpmath.mpf( 1 ) / 3
	half = QOmega( Fraction( 1, 2 ) ) if exact else mpmath.mpf( 1 ) / 2
	z = start
	orders: List[ Optional[ Fraction ] ] = [ ]
	escape_step = None
	leading = None
	for q in range( 1, steps + 1 ):
		z = _series_step( z, c, a_cubed, third, half )
		if z.is_zero( ):
			if not z.is_exact( ):
				raise PrecisionExhausted( f'P^{q}(c_{index}) has no significant terms',
				                          cause='branch_growth', method='_track', module='classify' )
			orders.append( None )
			continue
		z = z.truncate( z.lo + relative * z.ram )
		order = z.valuation( )
		orders.append( order )
		if escape_step is None and -order > bound:
			escape_step, leading = q, z.leading( )
	if escape_step is None:
		return CriticalGrowth( index, tuple( orders ), 'Bounded' )
	rates = [ Fraction( -v, 3 ** q ) for q, v in enumerate( orders, start=1 ) if q >= escape_step ]
	stable = len( rates ) >= 3 and len( set( rates[ -3: ] ) ) == 1
	return CriticalGrowth( index, tuple( orders ), 'Escaping', rates[ -1 ], escape_step, leading, stable )


def branch_growth( curve: BiPoly, branch_index: int=0, steps: int=6, order: int=8 ) -> BranchGrowth:
	'''

		Purpose:
		--------
		Iterates P on the Puiseux parameterization of a branch at infinity. A critical orbit
		escapes once -ord_t exceeds B = max(0, -ord c, -ord a), after which the order grows
		exactly by a factor 3; the rate -ord_t(P^q(c_i)) / 3^q is then a positive rational.
		Short expansions are retried with a doubled order.

		Parameters:
		----------
		curve: BiPoly
		branch_index: int - position in the newton_puiseux branch list
		steps: int - number of iterates, at most 8
		order: int - initial series order

		Returns:
		---------
		BranchGrowth

	'''
	throw_if( 'curve', curve )
	if not 1 <= steps <= MAX_BRANCH_STEPS:
		raise ValueError( f'steps must lie in 1..{MAX_BRANCH_STEPS}' )
	relative = RELATIVE_TERMS
	for attempt in range( RETRIES ):
		branches = newton_puiseux( curve, order=order )
		if not 0 <= branch_index < len( branches ):
			raise IndexError( f'curve has {len( branches )} branches at infinity' )
		branch = branches[ branch_index ]
		try:
			with mpmath.workdps( NUMERIC_DPS ):
				return _grow( branch, steps, relative )
		except PrecisionExhausted as e:
			logger.info( 'branch_growth: %s; retrying with order %d', e.heading, 2 * order )
			order *= 2
			relative *= 2
	raise PrecisionExhausted( f'branch expansion too short after {RETRIES} attempts', cause='branch_growth',
	                          method='branch_growth', module='classify' )


def _grow( branch: object, steps: int, relative: int ) -> BranchGrowth:
	c, a = branch.c, branch.a
	orders = [ -v for v in ( c.valuation( ), a.valuation( ) ) if v is not None ]
	bound = max( [ Fraction( 0 ) ] + orders )
	a_cubed = a * a * a
	starts = ( PuiseuxSeries( [ ], zero=c.zero ), c )
	critical = tuple( _track( i, starts[ i ], c, a_cubed, bound, steps, relative, branch.exact ) for i in (0, 1) )
	return BranchGrowth( branch, steps, bound, critical )


# ------------------------------------------------------------------------------------------
# Green function checks on curves
# ------------------------------------------------------------------------------------------

@dataclass( frozen=True )
class GreenCheck( ):
	'''Largest |3^m g_1 - 3^k g_0| over sampled points of a curve.'''
	label: str
	samples: int
	max_deviation: float
	tolerance: float

	@property
	def passed( self ) -> bool:
		return self.max_deviation < self.tolerance


	def to_json( self ) -> Dict[ str, object ]:
		return { 'check': self.label, 'samples': self.samples, 'max_deviation': repr( self.max_deviation ),
		         'tolerance': repr( self.tolerance ), 'passed': self.passed }


def symmetry_samples( count: int=20, seed: int=0 ) -> List[ Tuple[ complex, complex ] ]:
	'''Points of 12a^3 = c^3 + 6c with |c| in [0.5, 3] and a random cube root.'''
	rng = np.random.default_rng( seed )
	points = [ ]
	for _ in range( count ):
		c = complex( ( 0.5 + 2.5 * rng.random( ) ) * cmath.exp( 2j * math.pi * rng.random( ) ) )
		root = complex( ( c ** 3 + 6 * c ) / 12 ) ** ( 1.0 / 3.0 )
		a = root * cmath.exp( 2j * math.pi * int( rng.integers( 3 ) ) / 3 )
		points.append( (c, a) )
	return points


def collision_samples( m: int, k: int, count: int=20, seed: int=0 ) -> List[ Tuple[ complex, complex ] ]:
	'''Points of P^m(c_1) = P^k(c_0): random a, roots in c.'''
	curve = collision_curve( m, k )
	rng = np.random.default_rng( seed )
	points: List[ Tuple[ complex, complex ] ] = [ ]
	while len( points ) < count:
		a = complex( ( 0.3 + 1.2 * rng.random( ) ) * cmath.exp( 2j * math.pi * rng.random( ) ) )
		coeffs = [ 0j ] * ( curve.degree( 'c' ) + 1 )
		for (i, j), v in curve.terms.items( ):
			coeffs[ i ] += v.to_complex( ) * a ** j
		for c in polyroots( coeffs, polish=True ):
			points.append( (complex( c ), a) )
	return points[ :count ]


def green_deviation( points: List[ Tuple[ complex, complex ] ], m: int=0, k: int=0 ) -> float:
	worst = 0.0
	for c, a in points:
		p = CubicParam.complex( c, a )
		g0 = green_arch( p, 0j ).value
		g1 = green_arch( p, c ).value
		worst = max( worst, abs( 3 ** m * g1 - 3 ** k * g0 ) )
	return worst


def symmetry_check( count: int=20, seed: int=0, tol: float=1e-7 ) -> GreenCheck:
	'''|g_0 - g_1| on the symmetry curve.'''
	points = symmetry_samples( count, seed )
	return GreenCheck( 'symmetry', len( points ), green_deviation( points ), tol )


def collision_check( m: int, k: int, count: int=20, seed: int=0, tol: float=1e-6 ) -> GreenCheck:
	'''|3^m g_1 - 3^k g_0| on the collision curve P^m(c_1) = P^k(c_0).'''
	points = collision_samples( m, k, count, seed )
	return GreenCheck( f'collision({m},{k})', len( points ), green_deviation( points, m, k ), tol )
