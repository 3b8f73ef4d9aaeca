'''
  ******************************************************************************************
      Assembly:                Cubo
      Filename:                periodic.py
      Author:                  Terry D. Eppler
      Created:                 05-31-2022

      Last Modified By:        Terry D. Eppler
      Last Modified On:        10-17-2026
  ******************************************************************************************
  <copyright file="periodic.py" company="Terry D. Eppler">

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
    periodic.py

    Dynatomic polynomials of the cubic family, the elimination polynomials of the curves
    Per_m(lambda) of parameters with an m-cycle of multiplier lambda, numeric sampling of
    those curves and the top-degree forms of the critical orbit relations.
  </summary>
  ******************************************************************************************
'''
from __future__ import annotations
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

import mpmath
import numpy as np
import sympy

from boogr import RootFindingFailure, ZeroResultant, throw_if
from dynamics import CubicParam, find_cycles, mobius, polyroots
from exactalg import (A, BiPoly, C, QOmega, UniPoly, Z_SYMBOL, factor_bipoly, is_exact_scalar,
                      points_at_infinity, rational_str, squarefree_part)

logger = logging.getLogger( __name__ )

LAMBDA_SYMBOL = sympy.Symbol( 'lam' )
MAX_PERIOD = 6
MAX_SYMBOLIC_PERIOD = 4
MAX_LEADING_DEPTH = 3
MULTIPLIER_TOL = 1e-6
ROOT_MERGE_TOL = 1e-7
SEED_PARAMS = ( complex( 0.3, 0.2 ), complex( -0.4, 0.5 ) )
SEED_CYCLES = 3
CONTINUATION_STEP = 1 / 32
CONTINUATION_MIN_STEP = 1e-4
CONTINUATION_DPS = 30


def _p_uni( ) -> UniPoly:
	'''P(z) = z^3/3 - c z^2/2 + a^3 over BiPoly.'''
	return UniPoly( [ A ** 3, BiPoly( ), C.scale( Fraction( -1, 2 ) ), BiPoly.constant( Fraction( 1, 3 ) ) ],
	                BiPoly( ) )


@lru_cache( maxsize=None )
def iterate_uni( k: int ) -> UniPoly:
	'''P^k(z) as a polynomial in z with BiPoly coefficients.'''
	if k == 0:
		return UniPoly.x( BiPoly( ) )
	return _p_uni( ).compose( iterate_uni( k - 1 ) )


def _divisors( m: int ) -> List[ int ]:
	return [ k for k in range( 1, m + 1 ) if m % k == 0 ]


@dataclass( frozen=True )
class DynatomicPoly( ):
	'''

		Purpose:
		--------
		Phi*_m(z) = prod_{k | m} (P^k(z) - z)^mu(m/k), a polynomial in z over BiPoly.

	'''
	m: int
	poly: UniPoly

	@property
	def degree( self ) -> int:
		return self.poly.degree( )


	def specialize( self, c: object, a: object ) -> UniPoly:
		return self.poly.specialize( c, a )


	def roots( self, c: complex, a: complex ) -> np.ndarray:
		coeffs = [ complex( v ) for v in self.specialize( complex( c ), complex( a ) ).coeffs ]
		return polyroots( coeffs, polish=True )


	def __dir__( self ) -> List[ str ] | None:
		return [ 'm', 'poly', 'degree', 'specialize', 'roots' ]


@lru_cache( maxsize=None )
def dynatomic( m: int ) -> DynatomicPoly:
	'''

		Purpose:
		--------
		Exact dynatomic polynomial by Mobius product and exact division; the leading
		coefficients are nonzero constants so the division runs over the BiPoly ring.

		Parameters:
		----------
		m: int - period in 1..6

		Returns:
		---------
		DynatomicPoly

	'''
	if not 1 <= m <= MAX_PERIOD:
		raise ValueError( f'period must lie in 1..{MAX_PERIOD}' )
	z = UniPoly.x( BiPoly( ) )
	numerator = UniPoly( [ BiPoly.constant( 1 ) ], BiPoly( ) )
	denominator = UniPoly( [ BiPoly.constant( 1 ) ], BiPoly( ) )
	for k in _divisors( m ):
		mu = mobius( m // k )
		if mu == 1:
			numerator = numerator * ( iterate_uni( k ) - z )
		elif mu == -1:
			denominator = denominator * ( iterate_uni( k ) - z )
	quotient, remainder = numerator.divmod( denominator )
	if not remainder.is_zero( ):
		raise ArithmeticError( f'dynatomic division for period {m} left a remainder' )
	logger.debug( 'dynatomic: period %d has degree %d', m, quotient.degree( ) )
	return DynatomicPoly( m, quotient )


@dataclass( frozen=True )
class PermPoly( ):
	'''

		Purpose:
		--------
		Res_z(Phi*_m, lambda - (P^m)') up to a nonzero constant. poly is a BiPoly for an exact
		multiplier and a dict lambda-degree -> BiPoly when lambda stays symbolic.

	'''
	m: int
	lam: Optional[ QOmega ]
	c: Optional[ QOmega ]
	poly: Union[ BiPoly, Dict[ int, BiPoly ] ]
	notes: Tuple[ str, ... ]=field( default=( ) )

	def is_symbolic( self ) -> bool:
		return self.lam is None


	def a_coefficients( self, c: complex, lam: complex=None ) -> List[ complex ]:
		'''Coefficients in a (lowest first) at a numeric c and, if symbolic, lambda.'''
		if self.is_symbolic( ):
			if lam is None:
				raise ValueError( 'a symbolic multiplier needs a numeric lambda' )
			parts = [ (d, p, complex( lam ) ** d) for d, p in self.poly.items( ) ]
		else:
			parts = [ (0, self.poly, 1.0) ]
		degree = max( p.degree( 'a' ) for _, p, _ in parts )
		out = [ 0j ] * ( degree + 1 )
		c = complex( c )
		for _, p, weight in parts:
			for (i, j), v in p.terms.items( ):
				out[ j ] += weight * v.to_complex( ) * c ** i
		return out


	def to_json( self ) -> Dict[ str, object ]:
		if self.is_symbolic( ):
			body = { str( d ): p.to_json( ) for d, p in sorted( self.poly.items( ) ) }
		else:
			body = self.poly.to_json( )
		return { 'm': self.m, 'lambda': None if self.lam is None else self.lam.to_json( ),
		         'c': None if self.c is None else self.c.to_json( ), 'poly': body, 'notes': list( self.notes ) }


def normalize_lambda_poly( poly: Dict[ int, BiPoly ] ) -> Dict[ int, BiPoly ]:
	'''Scales a lambda-polynomial so its top lambda coefficient has leading coefficient 1.'''
	top = max( d for d, p in poly.items( ) if p )
	lead = poly[ top ].terms[ poly[ top ].leading_monomial( ) ]
	return { d: p.scale( lead.inverse( ) ) for d, p in poly.items( ) if p }


def _reduced_derivative( m: int, phi: UniPoly ) -> UniPoly:
	slope = iterate_uni( m ).derivative( )
	_, remainder = slope.divmod( phi )
	return remainder


def _specialize_c( poly: UniPoly, c: QOmega ) -> UniPoly:
	return poly.map( lambda v: v.specialize( 'c', c ), BiPoly( ) )


@lru_cache( maxsize=32 )
def _perm_poly_cached( m: int, lam: Optional[ QOmega ], c: Optional[ QOmega ] ) -> PermPoly:
	phi = dynatomic( m ).poly
	slope = _reduced_derivative( m, phi )
	if c is not None:
		phi, slope = _specialize_c( phi, c ), _specialize_c( slope, c )
	left = phi.to_sympy( Z_SYMBOL, formal=True )
	target = LAMBDA_SYMBOL if lam is None else BiPoly.constant( lam ).to_sympy( True )
	right = target - slope.to_sympy( Z_SYMBOL, formal=True )
	result = sympy.expand( sympy.resultant( left, right, Z_SYMBOL ) )
	if result == 0:
		raise ZeroResultant( f'Per_{m} elimination vanished identically', cause='perm_poly',
		                     method='resultant', module='periodic' )
	notes = ( 'resultant over Phi*_m; parameters with a parabolic cycle of period k | m whose '
	          'multiplier is a primitive (m/k)-th root of unity are included', )
	if lam is None:
		poly = sympy.Poly( result, LAMBDA_SYMBOL )
		out: Dict[ int, BiPoly ] = { }
		for (d,), coefficient in poly.terms( ):
			out[ int( d ) ] = BiPoly.from_sympy( coefficient )
		return PermPoly( m, None, c, out, notes )
	return PermPoly( m, lam, c, BiPoly.from_sympy( result ).primitive( ), notes )


def perm_poly( m: int, lam: object=None, c: object=None ) -> PermPoly:
	'''

		Purpose:
		--------
		Elimination polynomial of Per_m(lambda): Res_z(Phi*_m(z), lambda - (P^m)'(z)), with
		(P^m)' reduced modulo Phi*_m first. lam=None keeps lambda symbolic; an exact c is
		substituted before elimination.

		Parameters:
		----------
		m: int - period
		lam: exact multiplier or None
		c: exact value of c or None

		Returns:
		---------
		PermPoly

	'''
	if lam is None and m > MAX_SYMBOLIC_PERIOD:
		raise ValueError( f'symbolic multiplier supports periods up to {MAX_SYMBOLIC_PERIOD}' )
	if not 1 <= m <= MAX_PERIOD:
		raise ValueError( f'period must lie in 1..{MAX_PERIOD}' )
	if lam is not None and not is_exact_scalar( lam ):
		raise TypeError( 'perm_poly takes an exact multiplier; use perm_sample for complex values' )
	if c is not None and not is_exact_scalar( c ):
		raise TypeError( 'perm_poly takes an exact c' )
	lam = None if lam is None else QOmega.coerce( lam )
	c = None if c is None else QOmega.coerce( c )
	return _perm_poly_cached( m, lam, c )


def perm_factors( m: int, lam: object, c: object=None ) -> List[ Tuple[ BiPoly, int ] ]:
	'''Irreducible factors over Q (primitive) with multiplicities.'''
	result = perm_poly( m, lam, c )
	_, factors = factor_bipoly( result.poly )
	return [ (f.primitive( ), k) for f, k in factors if not f.is_constant( ) ]


def _dedupe( values: List[ complex ], tol: float=ROOT_MERGE_TOL ) -> List[ complex ]:
	out: List[ complex ] = [ ]
	for v in values:
		if not any( abs( v - w ) <= tol * max( 1.0, abs( w ) ) for w in out ):
			out.append( v )
	return out


def has_cycle( c: complex, a: complex, m: int, lam: complex, tol: float=MULTIPLIER_TOL ) -> bool:
	cycles = find_cycles( CubicParam( complex( c ), complex( a ) ), m )
	return any( cycle.period == m and abs( cycle.multiplier - lam ) <= tol for cycle in cycles )


def _cycle_system( c: object, lam: object, m: int ):
	'''F(a, z) = ( P^m(z) - z, (P^m)'(z) - lam ) at fixed c, and its Jacobian in (a, z).'''

	def jets( a, z ):
		w, wz, wa, wzz, wza = z, 1, 0, 0, 0
		for _ in range( m ):
			d1 = w * w - c * w
			d2 = 2 * w - c
			w, wz, wa, wzz, wza = ( w ** 3 / 3 - c * w * w / 2 + a ** 3, d1 * wz, d1 * wa + 3 * a * a,
			                        d2 * wz * wz + d1 * wzz, d2 * wa * wz + d1 * wza )
		return w, wz, wa, wzz, wza

	def system( a, z ):
		w, wz, _, _, _ = jets( a, z )
		return [ w - z, wz - lam ]

	def jacobian( a, z ):
		_, wz, wa, wzz, wza = jets( a, z )
		return [ [ wa, wz - 1 ], [ wza, wzz ] ]

	return system, jacobian


def _continue_cycle( c: complex, a: complex, z: complex, start: complex, lam: complex,
                     m: int ) -> Optional[ complex ]:
	'''

		Purpose:
		--------
		Follows a period-m point z of P_{c,a} while its multiplier moves on the segment from
		start to lam, correcting (a, z) with Newton steps and halving the step on failure.
		Returns the final a, or None when the step falls below CONTINUATION_MIN_STEP.

	'''
	with mpmath.workdps( CONTINUATION_DPS ):
		c_mp, lam_mp, start_mp = mpmath.mpc( c ), mpmath.mpc( lam ), mpmath.mpc( start )
		point = ( mpmath.mpc( a ), mpmath.mpc( z ) )
		s, h = 0.0, CONTINUATION_STEP
		while s < 1.0:
			t = min( 1.0, s + h )
			system, jacobian = _cycle_system( c_mp, start_mp + t * ( lam_mp - start_mp ), m )
			try:
				found = mpmath.findroot( system, point, J=jacobian, maxsteps=50 )
			except (ValueError, ZeroDivisionError):
				h /= 2
				if h < CONTINUATION_MIN_STEP:
					logger.debug( 'perm_sample: continuation stalled at s=%.4f for period %d', s, m )
					return None
				continue
			point = ( found[ 0 ], found[ 1 ] )
			s, h = t, min( 2 * h, 0.25 )
		return complex( point[ 0 ] )


def _perm_sample_numeric( m: int, lam: complex, c: complex ) -> List[ complex ]:
	'''

		Purpose:
		--------
		Parameters a with a period-m cycle of multiplier lam at fixed c, for periods beyond
		the symbolic range. The cycles of P_{c,a0} at each seed a0 whose multipliers lie
		closest to lam are continued to lam; only endpoints confirmed by has_cycle are kept.

	'''
	found: List[ complex ] = [ ]
	for seed in SEED_PARAMS:
		try:
			cycles = find_cycles( CubicParam( c, seed ), m )
		except RootFindingFailure as error:
			logger.warning( 'perm_sample: no seed cycles at a=%s: %s', seed, error )
			continue
		cycles = sorted( cycles, key=lambda cycle: abs( cycle.multiplier - lam ) )[ :SEED_CYCLES ]
		for cycle in cycles:
			a = _continue_cycle( c, seed, complex( cycle.points[ 0 ] ), complex( cycle.multiplier ), lam, m )
			if a is not None and has_cycle( c, a, m, lam ):
				found.append( a )
	kept = _dedupe( found )
	logger.info( 'perm_sample: %d parameters with a period-%d cycle of multiplier %s at c=%s',
	             len( kept ), m, lam, c )
	return kept


def perm_sample( m: int, lam: object, c: object, filter_exact: bool=False ) -> List[ complex ]:
	'''

		Purpose:
		--------
		Numeric roots a of the elimination polynomial at a fixed c (with multiplicity). With
		filter_exact only the distinct a where an exact period-m cycle of multiplier lam is
		found by iteration are kept. Periods above MAX_SYMBOLIC_PERIOD skip elimination and
		return the distinct confirmed a found by cycle continuation, a subset of the roots.

	'''
	throw_if( 'm', m )
	if not 1 <= m <= MAX_PERIOD:
		raise ValueError( f'period must lie in 1..{MAX_PERIOD}' )
	c_value = QOmega.coerce( c ).to_complex( ) if is_exact_scalar( c ) else complex( c )
	lam_value = QOmega.coerce( lam ).to_complex( ) if is_exact_scalar( lam ) else complex( lam )
	if m > MAX_SYMBOLIC_PERIOD:
		return _perm_sample_numeric( m, lam_value, c_value )
	if is_exact_scalar( lam ):
		coeffs = perm_poly( m, lam ).a_coefficients( c_value )
	else:
		coeffs = perm_poly( m, None ).a_coefficients( c_value, lam_value )
	roots = [ complex( r ) for r in polyroots( coeffs, polish=True ) ]
	if not filter_exact:
		return roots
	kept = [ a for a in _dedupe( roots ) if has_cycle( c_value, a, m, lam_value ) ]
	logger.debug( 'perm_sample: kept %d of %d roots for period %d', len( kept ), len( roots ), m )
	return kept


def critical_relation( n: int, i: int ) -> BiPoly:
	'''P^n(c_i) - c_i with c_0 = 0, c_1 = c.'''
	start = BiPoly( ) if i == 0 else C
	z = start
	for _ in range( n ):
		z = z * z * ( z.scale( Fraction( 1, 3 ) ) - C.scale( Fraction( 1, 2 ) ) ) + A ** 3
	return z - start


@dataclass( frozen=True )
class LeadingFormReport( ):
	n: int
	i: int
	raw: BiPoly
	predicted: BiPoly
	matches: bool
	raw_coefficient: Fraction
	quoted_scale: Fraction
	scale_ratio: Fraction
	points_at_infinity: Tuple[ Tuple[ complex, complex ], ... ]

	def to_json( self ) -> Dict[ str, object ]:
		return { 'n': self.n, 'i': self.i, 'raw': self.raw.to_json( ), 'predicted': self.predicted.to_json( ),
		         'matches': self.matches, 'raw_coefficient': rational_str( self.raw_coefficient ),
		         'quoted_scale': rational_str( self.quoted_scale ),
		         'scale_ratio': rational_str( self.scale_ratio ),
		         'points_at_infinity': [ [ [ z.real, z.imag ] for z in pt ] for pt in self.points_at_infinity ] }


def leading_form( n: int, i: int ) -> LeadingFormReport:
	'''

		Purpose:
		--------
		Top homogeneous part of P^n(c_i) - c_i against 3^-((3^(n-1)-1)/2) a^(3^n) for i = 0 and
		3^-((3^(n-1)-1)/2) (a^3 - c^3/6)^(3^(n-1)) for i = 1. The quoted scale is
		sqrt(3)^(1-3^n), whose square is carried exactly; the scale ratio compares the raw
		coefficient of a^(3^n) with it.

	'''
	if not 1 <= n <= MAX_LEADING_DEPTH:
		raise ValueError( f'depth must lie in 1..{MAX_LEADING_DEPTH}' )
	if i not in (0, 1):
		raise ValueError( 'critical index is 0 or 1' )
	raw = critical_relation( n, i ).leading_form( )
	scalar = Fraction( 1, 3 ** ( ( 3 ** ( n - 1 ) - 1 ) // 2 ) )
	base = A ** 3 if i == 0 else A ** 3 - ( C ** 3 ).scale( Fraction( 1, 6 ) )
	predicted = ( base ** ( 3 ** ( n - 1 ) ) ).scale( scalar )
	raw_coefficient = raw.coefficient( 0, 3 ** n ).x
	# sqrt(3)^(1 - 3^n) with 1 - 3^n even
	quoted = Fraction( 1, 3 ** ( ( 3 ** n - 1 ) // 2 ) )
	points = tuple( (complex( x ), complex( y )) for x, y in points_at_infinity( squarefree_part( raw ), exact=False ) )
	return LeadingFormReport( n, i, raw, predicted, raw == predicted, raw_coefficient, quoted,
	                          raw_coefficient / quoted, points )
