'''
  ******************************************************************************************
      Assembly:                Cubo
      Filename:                padicval.py
      Author:                  Terry D. Eppler
      Created:                 05-31-2022

      Last Modified By:        Terry D. Eppler
      Last Modified On:        10-17-2026
  ******************************************************************************************
  <copyright file="padicval.py" company="Terry D. Eppler">

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
    padicval.py

    Newton polygons over Q_p and the valuations of multipliers of unicritical
    post-critically finite polynomials z^d + t: the multiplier polynomial by double
    elimination, the per-prime check, and the bridge from the unicritical line c = 0 of
    the cubic family to the form w^3 + t.
  </summary>
  ******************************************************************************************
'''
from __future__ import annotations
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from pydantic import BaseModel

from boogr import DegreeCapExceeded, ZeroResultant, throw_if
from dynamics import mobius
from exactalg import (A, BiPoly, QOmega, UniPoly, lower_convex_hull, rational_str, to_rational,
                      valuation)
from periodic import iterate_uni

logger = logging.getLogger( __name__ )

DEGREE_CAP = 200
PRIMES = ( 2, 3, 5, 7, 11 )

_X, _Z, _T, _B = sympy.symbols( 'x z t b' )


def rational_coefficients( f: object ) -> List[ Fraction ]:
	'''Coefficients lowest first from a UniPoly over Q or a plain sequence.'''
	values = f.coeffs if isinstance( f, UniPoly ) else f
	out = [ ]
	for v in values:
		if isinstance( v, QOmega ):
			if not v.is_rational( ):
				raise ValueError( 'coefficients must be rational' )
			v = v.x
		out.append( to_rational( v ) )
	while out and out[ -1 ] == 0:
		out.pop( )
	return out


def rational_poly( coeffs: Sequence[ object ] ) -> UniPoly:
	return UniPoly( [ QOmega( to_rational( v ) ) for v in coeffs ], QOmega( ) )


@dataclass( frozen=True )
class NewtonPolygon( ):
	'''

		Purpose:
		--------
		Lower convex hull of the points (i, v_p(f_i)). A side of slope s and length l
		accounts for l roots of valuation -s.

	'''
	prime: int
	points: Tuple[ Tuple[ int, int ], ... ]
	hull: Tuple[ Tuple[ int, int ], ... ]
	zero_order: int

	def sides( self ) -> List[ Tuple[ Fraction, int ] ]:
		out = [ ]
		for (x0, y0), (x1, y1) in zip( self.hull, self.hull[ 1: ] ):
			out.append( (Fraction( y1 - y0, x1 - x0 ), x1 - x0) )
		return out


	def slopes( self ) -> List[ Fraction ]:
		return [ s for s, _ in self.sides( ) ]


	def root_valuations( self ) -> List[ Tuple[ Fraction, int ] ]:
		'''(valuation, multiplicity) of the nonzero roots.'''
		return [ (-s, n) for s, n in self.sides( ) ]


	@property
	def length( self ) -> int:
		return sum( n for _, n in self.sides( ) )


	def to_json( self ) -> Dict[ str, object ]:
		return { 'prime': self.prime, 'zero_order': self.zero_order,
		         'vertices': [ [ x, str( y ) ] for x, y in self.hull ],
		         'sides': [ { 'slope': rational_str( s ), 'length': n } for s, n in self.sides( ) ] }


	def __dir__( self ) -> List[ str ] | None:
		return [ 'prime', 'points', 'hull', 'zero_order', 'sides', 'slopes', 'root_valuations',
		         'length', 'to_json' ]


def newton_polygon( f: object, p: int ) -> NewtonPolygon:
	'''

		Purpose:
		--------
		Newton polygon of a nonzero rational polynomial at the prime p.

		Parameters:
		----------
		f: UniPoly over Q or coefficient sequence (lowest first)
		p: int - prime

		Returns:
		---------
		NewtonPolygon

	'''
	throw_if( 'f', f )
	if p < 2 or not sympy.isprime( p ):
		raise ValueError( f'{p} is not a prime' )
	coeffs = rational_coefficients( f )
	if not coeffs:
		raise ValueError( 'the zero polynomial has no Newton polygon' )
	points = tuple( (i, valuation( v, p )) for i, v in enumerate( coeffs ) if v != 0 )
	hull = tuple( lower_convex_hull( points ) )
	return NewtonPolygon( p, points, hull, points[ 0 ][ 0 ] )


# ------------------------------------------------------------------------------------------
# multipliers of z^d + t
# ------------------------------------------------------------------------------------------

@dataclass( frozen=True )
class MultiplierSpec( ):
	'''

		Purpose:
		--------
		Q(z) = z^d + t with t a root of t_minpoly; lambda_poly has the multipliers of all
		period-m cycles over all conjugates of t as roots, m times each.

	'''
	d: int
	t_minpoly: UniPoly
	m: int
	lambda_poly: Optional[ UniPoly ]=None

	def to_json( self ) -> Dict[ str, object ]:
		body = lambda f: None if f is None else [ rational_str( v ) for v in rational_coefficients( f ) ]
		return { 'd': self.d, 'm': self.m, 't_minpoly': body( self.t_minpoly ),
		         'lambda_poly': body( self.lambda_poly ) }


def _to_sympy( f: object, symbol: sympy.Symbol ) -> sympy.Expr:
	return sum( ( sympy.Rational( v.numerator, v.denominator ) * symbol ** i
	              for i, v in enumerate( rational_coefficients( f ) ) ), sympy.Integer( 0 ) )


def _from_sympy( expr: sympy.Expr, symbol: sympy.Symbol, monic: bool=True ) -> UniPoly:
	poly = sympy.Poly( expr, symbol )
	coeffs = [ to_rational( v ) for v in reversed( poly.all_coeffs( ) ) ]
	if monic and coeffs:
		lead = coeffs[ -1 ]
		coeffs = [ v / lead for v in coeffs ]
	return rational_poly( coeffs )


def _dynatomic_expr( d: int, m: int ) -> sympy.Expr:
	'''Phi*_m(z, t) = prod_{k | m} (Q^k(z) - z)^mu(m/k) for Q = z^d + t.'''
	iterates = [ _Z ]
	for _ in range( m ):
		iterates.append( sympy.expand( iterates[ -1 ] ** d + _T ) )
	numerator, denominator = sympy.Integer( 1 ), sympy.Integer( 1 )
	for k in range( 1, m + 1 ):
		if m % k:
			continue
		mu = mobius( m // k )
		if mu == 1:
			numerator *= iterates[ k ] - _Z
		elif mu == -1:
			denominator *= iterates[ k ] - _Z
	quotient, remainder = sympy.div( sympy.expand( numerator ), sympy.expand( denominator ), _Z, _T )
	if remainder != 0:
		raise ArithmeticError( f'dynatomic division for period {m} left a remainder' )
	return sympy.expand( quotient )


def _cycle_derivative( d: int, m: int ) -> sympy.Expr:
	'''(Q^m)'(z) = prod_{j < m} d Q^j(z)^(d - 1).'''
	z, total = _Z, sympy.Integer( 1 )
	for _ in range( m ):
		total *= d * z ** ( d - 1 )
		z = sympy.expand( z ** d + _T )
	return sympy.expand( total )


def multiplier_poly( d: int, t_minpoly: object, m: int ) -> MultiplierSpec:
	'''

		Purpose:
		--------
		Res_t( t_minpoly(t), Res_z( Phi*_m(z, t), x - (Q^m)'(z) ) ), normalized monic. The
		roots are the multipliers of every period-m cycle of z^d + t over every root t.

		Parameters:
		----------
		d: int - degree, at least 2
		t_minpoly: UniPoly over Q or coefficient sequence
		m: int - period

		Returns:
		---------
		MultiplierSpec

	'''
	throw_if( 't_minpoly', t_minpoly )
	if d < 2:
		raise ValueError( 'degree must be at least 2' )
	if m < 1:
		raise ValueError( 'period must be positive' )
	minpoly = rational_poly( rational_coefficients( t_minpoly ) )
	if minpoly.degree( ) < 1:
		raise ValueError( 't_minpoly must have positive degree' )
	if d ** m * minpoly.degree( ) > DEGREE_CAP:
		raise DegreeCapExceeded( f'd^m deg(t_minpoly) = {d ** m * minpoly.degree( )} exceeds {DEGREE_CAP}',
		                         cause='multiplier_poly', method='multiplier_poly', module='padicval' )
	inner = sympy.resultant( _dynatomic_expr( d, m ), _X - _cycle_derivative( d, m ), _Z )
	outer = sympy.expand( sympy.resultant( _to_sympy( minpoly, _T ), sympy.expand( inner ), _T ) )
	if outer == 0:
		raise ZeroResultant( f'multiplier elimination vanished for d={d}, m={m}', cause='multiplier_poly',
		                     method='multiplier_poly', module='padicval' )
	lam = _from_sympy( outer, _X )
	logger.debug( 'multiplier_poly: d=%d m=%d degree %d', d, m, lam.degree( ) )
	return MultiplierSpec( d, minpoly, m, lam )


# ------------------------------------------------------------------------------------------
# valuation check
# ------------------------------------------------------------------------------------------

class PrimeRow( BaseModel ):
	prime: int
	divides_d: bool
	valuations: List[ str ]
	passed: bool


class MultiplierReport( BaseModel ):
	d: int
	m: int
	t_minpoly: List[ str ]
	zero_roots: int
	rows: List[ PrimeRow ]

	@property
	def passed( self ) -> bool:
		return all( r.passed for r in self.rows )


	def failures( self ) -> List[ PrimeRow ]:
		return [ r for r in self.rows if not r.passed ]


def verify_prop_multiplier( spec: MultiplierSpec, primes: Sequence[ int ]=PRIMES ) -> MultiplierReport:
	'''

		Purpose:
		--------
		Nonzero multipliers of a post-critically finite z^d + t satisfy v_p(lambda) > 0 for
		p | d and v_p(lambda) = 0 for p prime to d. Zero roots of the multiplier polynomial
		(superattracting cycles) are factored out first.

	'''
	throw_if( 'spec', spec )
	if spec.lambda_poly is None:
		spec = multiplier_poly( spec.d, spec.t_minpoly, spec.m )
	coeffs = rational_coefficients( spec.lambda_poly )
	zeros = 0
	while zeros < len( coeffs ) and coeffs[ zeros ] == 0:
		zeros += 1
	reduced = coeffs[ zeros: ]
	rows = [ ]
	for p in primes:
		divides = spec.d % p == 0
		if len( reduced ) < 2:
			rows.append( PrimeRow( prime=p, divides_d=divides, valuations=[ ], passed=True ) )
			continue
		polygon = newton_polygon( reduced, p )
		values = polygon.root_valuations( )
		if divides:
			ok = all( v > 0 for v, _ in values )
		else:
			ok = all( v == 0 for v, _ in values )
		if not ok:
			logger.warning( 'verify_prop_multiplier: d=%d m=%d fails at p=%d', spec.d, spec.m, p )
		rows.append( PrimeRow( prime=p, divides_d=divides, passed=ok,
		                       valuations=[ f'{rational_str( v )}^{n}' for v, n in values ] ) )
	return MultiplierReport( d=spec.d, m=spec.m, t_minpoly=[ rational_str( v ) for v in rational_coefficients( spec.t_minpoly ) ],
	                         zero_roots=zeros, rows=rows )


# ------------------------------------------------------------------------------------------
# unicritical bridge
# ------------------------------------------------------------------------------------------

def bridge_t_minpoly( f_b: object ) -> UniPoly:
	'''

		Purpose:
		--------
		On c = 0, w = z / sqrt(3) conjugates P to w^3 + t with t = w b, b = a^3. Given the
		minimal polynomial of b, returns the square-free monic Res_b( f(b), 3t^2 - b^2 ).

	'''
	throw_if( 'f_b', f_b )
	expr = sympy.resultant( _to_sympy( f_b, _B ), 3 * _T ** 2 - _B ** 2, _B )
	part = sympy.sqf_part( sympy.expand( expr ), _T )
	return _from_sympy( part, _T )


def verify_conjugacy( ) -> bool:
	'''P_{0,a}( sqrt(3) w ) / sqrt(3) = w^3 + w a^3 exactly, with sqrt(3) = 3w in Q(w).'''
	omega = QOmega.omega( )
	root3 = omega * 3
	unicritical = iterate_uni( 1 ).map( lambda v: v.specialize( 'c', QOmega( ) ), BiPoly( ) )
	scaled = UniPoly( [ BiPoly( ), BiPoly.constant( root3 ) ], BiPoly( ) )
	lhs = unicritical.compose( scaled ).scale( omega )
	rhs = UniPoly( [ ( A ** 3 ).scale( omega ), BiPoly( ), BiPoly( ), BiPoly.constant( 1 ) ], BiPoly( ) )
	return lhs == rhs


def unicritical_spec( b_minpoly: object, m: int ) -> MultiplierSpec:
	'''MultiplierSpec of w^3 + t for a parameter a on c = 0 with b = a^3 a root of b_minpoly.'''
	return multiplier_poly( 3, bridge_t_minpoly( b_minpoly ), m )


def valuation_table( cases: Sequence[ Tuple[ int, Sequence[ object ], int ] ],
                     primes: Sequence[ int ]=PRIMES ) -> List[ MultiplierReport ]:
	'''Reports for (d, t_minpoly, m) triples.'''
	return [ verify_prop_multiplier( multiplier_poly( d, t, m ), primes ) for d, t, m in cases ]
