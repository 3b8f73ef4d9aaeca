'''
  ******************************************************************************************
      Assembly:                Cubo
      Filename:                exactalg.py
      Author:                  Terry D. Eppler
      Created:                 05-31-2022

      Last Modified By:        Terry D. Eppler
      Last Modified On:        10-17-2026
  ******************************************************************************************
  <copyright file="exactalg.py" company="Terry D. Eppler">

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
    exactalg.py

    Exact arithmetic kernel: rationals, the real quadratic field Q(w) with w^2 = 1/3,
    sparse polynomials in (c, a), polynomials in z over those, truncated Laurent/Puiseux
    series, capped p-adic numbers, elimination through sympy, and Newton-Puiseux
    expansion of curve branches at the line at infinity.
  </summary>
  ******************************************************************************************
'''
from __future__ import annotations
import logging
import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import mpmath
import sympy
from sympy import integer_nthroot

from boogr import (ExtensionRequired, LeadingRootUnavailable, OrderMismatch, RootFindingFailure,
                   PrecisionExhausted, ZeroLinearTerm, throw_if)

logger = logging.getLogger( __name__ )

Rational = Fraction

DEFAULT_SERIES_ORDER = 6
NUMERIC_DPS = 40
PADIC_DIGITS = 64
MAX_PUISEUX_DEPTH = 24

_ZERO = Fraction( 0 )
_ONE = Fraction( 1 )
_INV_SQRT3 = 1.0 / math.sqrt( 3.0 )
_CANCEL_MP = mpmath.mpf( '1e-25' )
_CANCEL_FLOAT = 1e-12

C_SYMBOL, A_SYMBOL, W_SYMBOL, Z_SYMBOL, T_SYMBOL = sympy.symbols( 'c a w z t' )
_SQRT3 = sympy.sqrt( 3 )


# ------------------------------------------------------------------------------------------
# rationals
# ------------------------------------------------------------------------------------------

def to_rational( value: object ) -> Fraction:
	'''

		Purpose:
		--------
		Converts int, Fraction, sympy Rational, rational string or float (exactly) into a Fraction.

	'''
	if isinstance( value, Fraction ):
		return value
	if isinstance( value, bool ):
		return Fraction( int( value ) )
	if isinstance( value, numbers.Integral ):
		return Fraction( int( value ) )
	if isinstance( value, sympy.Rational ):
		return Fraction( int( value.p ), int( value.q ) )
	if isinstance( value, str ):
		return Fraction( value.strip( ) )
	if isinstance( value, float ):
		return Fraction( value )
	raise TypeError( f'cannot convert {type( value ).__name__} to a rational' )


def rational_str( value: Fraction ) -> str:
	if value.denominator == 1:
		return str( value.numerator )
	return f'{value.numerator}/{value.denominator}'


def valuation( value: object, prime: int ) -> float | int:
	'''

		Purpose:
		--------
		p-adic valuation of a rational; math.inf for zero.

	'''
	q = to_rational( value )
	if q == 0:
		return math.inf
	return _int_valuation( q.numerator, prime ) - _int_valuation( q.denominator, prime )


def _int_valuation( n: int, prime: int ) -> int:
	n = abs( n )
	count = 0
	while n % prime == 0:
		n //= prime
		count += 1
	return count


def abs_p( value: object, prime: int ) -> float:
	v = valuation( value, prime )
	if v == math.inf:
		return 0.0
	return float( prime ) ** ( -v )


@dataclass( frozen=True )
class Place( ):
	'''An absolute value on Q: the archimedean one, or the p-adic one for a prime p.'''
	kind: str
	prime: Optional[ int ]=None

	@classmethod
	def archimedean( cls ) -> Place:
		return cls( 'archimedean', None )


	@classmethod
	def finite( cls, prime: int ) -> Place:
		if prime < 2 or not sympy.isprime( prime ):
			raise ValueError( f'{prime} is not prime' )
		return cls( 'finite', prime )


	def is_archimedean( self ) -> bool:
		return self.kind == 'archimedean'


	def absolute( self, value: object ) -> float:
		if self.is_archimedean( ):
			return abs( complex( value ) )
		return abs_p( value, self.prime )


	def __str__( self ) -> str:
		return 'inf' if self.is_archimedean( ) else str( self.prime )


def _rational_root( value: Fraction, k: int ) -> Optional[ Fraction ]:
	if value == 0:
		return _ZERO
	sign = 1
	if value < 0:
		if k % 2 == 0:
			return None
		sign = -1
	num, num_exact = integer_nthroot( abs( value.numerator ), k )
	den, den_exact = integer_nthroot( value.denominator, k )
	if num_exact and den_exact:
		return Fraction( sign * int( num ), int( den ) )
	return None


# ------------------------------------------------------------------------------------------
# Q(w), w^2 = 1/3
# ------------------------------------------------------------------------------------------

class QOmega( ):
	'''

		Purpose:
		--------
		Exact element x + y*w of Q(w) with w^2 = 1/3. The archimedean embedding sends
		w to +1/sqrt(3).

		Constructor:
		-----------
		QOmega( x=0, y=0 )

	'''
	__slots__ = ( 'x', 'y' )

	def __init__( self, x: object=0, y: object=0 ):
		self.x = x if type( x ) is Fraction else to_rational( x )
		self.y = y if type( y ) is Fraction else to_rational( y )


	@classmethod
	def _raw( cls, x: Fraction, y: Fraction ) -> QOmega:
		obj = object.__new__( cls )
		obj.x = x
		obj.y = y
		return obj


	@classmethod
	def omega( cls ) -> QOmega:
		return cls._raw( _ZERO, _ONE )


	@staticmethod
	def coerce( value: object ) -> QOmega:
		if isinstance( value, QOmega ):
			return value
		return QOmega._raw( to_rational( value ), _ZERO )


	def __add__( self, other: object ) -> QOmega:
		if isinstance( other, QOmega ):
			if not other.y:
				return QOmega._raw( self.x + other.x, self.y )
			return QOmega._raw( self.x + other.x, self.y + other.y )
		if isinstance( other, (int, Fraction) ):
			return QOmega._raw( self.x + other, self.y )
		return NotImplemented

	__radd__ = __add__


	def __neg__( self ) -> QOmega:
		return QOmega._raw( -self.x, -self.y )


	def __pos__( self ) -> QOmega:
		return self


	def __sub__( self, other: object ) -> QOmega:
		if isinstance( other, QOmega ):
			return QOmega._raw( self.x - other.x, self.y - other.y )
		if isinstance( other, (int, Fraction) ):
			return QOmega._raw( self.x - other, self.y )
		return NotImplemented


	def __rsub__( self, other: object ) -> QOmega:
		if isinstance( other, (int, Fraction) ):
			return QOmega._raw( other - self.x, -self.y )
		return NotImplemented


	def __mul__( self, other: object ) -> QOmega:
		if isinstance( other, QOmega ):
			x1, y1, x2, y2 = self.x, self.y, other.x, other.y
			if not y1 and not y2:
				return QOmega._raw( x1 * x2, _ZERO )
			if not y1:
				return QOmega._raw( x1 * x2, x1 * y2 )
			if not y2:
				return QOmega._raw( x1 * x2, x2 * y1 )
			if not x1 and not x2:
				return QOmega._raw( y1 * y2 / 3, _ZERO )
			return QOmega._raw( x1 * x2 + y1 * y2 / 3, x1 * y2 + x2 * y1 )
		if isinstance( other, (int, Fraction) ):
			return QOmega._raw( self.x * other, self.y * other )
		return NotImplemented

	__rmul__ = __mul__


	def __truediv__( self, other: object ) -> QOmega:
		if isinstance( other, QOmega ):
			return self * other.inverse( )
		if isinstance( other, (int, Fraction) ):
			if other == 0:
				raise ZeroDivisionError( 'division by zero in Q(w)' )
			return QOmega._raw( self.x / other, self.y / other )
		return NotImplemented


	def __rtruediv__( self, other: object ) -> QOmega:
		if isinstance( other, (int, Fraction) ):
			return QOmega.coerce( other ) * self.inverse( )
		return NotImplemented


	def __pow__( self, exponent: int ) -> QOmega:
		if not isinstance( exponent, int ):
			return NotImplemented
		if exponent < 0:
			return self.inverse( ) ** ( -exponent )
		result = QOmega._raw( _ONE, _ZERO )
		base = self
		while exponent:
			if exponent & 1:
				result = result * base
			base = base * base
			exponent >>= 1
		return result


	def __eq__( self, other: object ) -> bool:
		if isinstance( other, QOmega ):
			return self.x == other.x and self.y == other.y
		if isinstance( other, (int, Fraction) ):
			return self.y == 0 and self.x == other
		return NotImplemented


	def __hash__( self ) -> int:
		if not self.y:
			return hash( self.x )
		return hash( (self.x, self.y) )


	def __bool__( self ) -> bool:
		return bool( self.x ) or bool( self.y )


	def is_zero( self ) -> bool:
		return not self.x and not self.y


	def is_rational( self ) -> bool:
		return not self.y


	def conjugate( self ) -> QOmega:
		return QOmega._raw( self.x, -self.y )


	def norm( self ) -> Fraction:
		return self.x * self.x - self.y * self.y / 3


	def inverse( self ) -> QOmega:
		n = self.norm( )
		if n == 0:
			raise ZeroDivisionError( 'zero has no inverse in Q(w)' )
		return QOmega._raw( self.x / n, -self.y / n )


	def to_complex( self ) -> complex:
		return complex( float( self.x ) + float( self.y ) * _INV_SQRT3, 0.0 )


	def to_mpc( self ) -> mpmath.mpf:
		x = mpmath.mpf( self.x.numerator ) / self.x.denominator
		if not self.y:
			return x
		y = mpmath.mpf( self.y.numerator ) / self.y.denominator
		return x + y / mpmath.sqrt( 3 )


	def basis_valuation( self, prime: int ) -> Fraction | float:
		'''

			Purpose:
			--------
			min( v_p(x), v_p(y) + v_p(w) ) with v_3(w) = -1/2 and v_p(w) = 0 otherwise.

		'''
		if self.is_zero( ):
			return math.inf
		shift = Fraction( -1, 2 ) if prime == 3 else _ZERO
		vx = valuation( self.x, prime )
		vy = valuation( self.y, prime ) + shift if self.y else math.inf
		return Fraction( min( vx, vy ) ) if min( vx, vy ) != math.inf else math.inf


	def field_valuation( self, prime: int ) -> Fraction | float:
		'''Half the valuation of the field norm.'''
		if self.is_zero( ):
			return math.inf
		return Fraction( valuation( self.norm( ), prime ), 2 )


	def kth_root( self, k: int ) -> QOmega:
		'''

			Purpose:
			--------
			A k-th root inside Q(w). Rational inputs try the rational root first;
			among real roots the positive one is returned.

			Returns:
			---------
			QOmega

		'''
		if k < 1:
			raise ValueError( 'root degree must be positive' )
		if k == 1 or self.is_zero( ):
			return self
		if not self.y:
			root = _rational_root( self.x, k )
			if root is not None:
				return QOmega._raw( root, _ZERO )
		roots = [ r for r, _ in _roots_in_field( [ -self ] + [ QOmega( ) ] * ( k - 1 ) + [ QOmega( 1 ) ],
		                                         strict=False ) ]
		if not roots:
			raise LeadingRootUnavailable( f'{self} has no {k}-th root in Q(w)',
			                              cause='QOmega', method='kth_root', module='exactalg' )
		positive = [ r for r in roots if r.to_complex( ).real > 0 ]
		return ( positive or roots )[ 0 ]


	def to_json( self ) -> List[ str ]:
		return [ rational_str( self.x ), rational_str( self.y ) ]


	@classmethod
	def from_json( cls, data: Sequence[ str ] ) -> QOmega:
		return cls( Fraction( data[ 0 ] ), Fraction( data[ 1 ] ) )


	def __repr__( self ) -> str:
		return f'QOmega({rational_str( self.x )}, {rational_str( self.y )})'


	def __str__( self ) -> str:
		if not self.y:
			return rational_str( self.x )
		if not self.x:
			return f'{rational_str( self.y )}*w'
		return f'({rational_str( self.x )} + {rational_str( self.y )}*w)'


def qomega_to_sympy( value: QOmega, formal: bool=False ) -> sympy.Expr:
	'''

		Purpose:
		--------
		w becomes the formal symbol "w" (reduced later by w^2 = 1/3) or sqrt(3)/3.

	'''
	value = QOmega.coerce( value )
	x = sympy.Rational( value.x.numerator, value.x.denominator )
	if not value.y:
		return x
	y = sympy.Rational( value.y.numerator, value.y.denominator )
	return x + y * ( W_SYMBOL if formal else _SQRT3 / 3 )


def reduce_omega( expr: sympy.Expr ) -> sympy.Expr:
	'''Rewrites every power of the formal symbol w with w^2 = 1/3.'''
	expr = sympy.expand( expr )
	if not expr.has( W_SYMBOL ):
		return expr
	poly = sympy.Poly( expr, W_SYMBOL )
	total = sympy.Integer( 0 )
	for (exponent,), coefficient in poly.terms( ):
		total += coefficient * sympy.Rational( 1, 3 ) ** ( exponent // 2 ) * W_SYMBOL ** ( exponent % 2 )
	return sympy.expand( total )


def qomega_from_sympy( value: object ) -> QOmega:
	value = sympy.sympify( value )
	if value.has( W_SYMBOL ):
		value = reduce_omega( value )
		poly = sympy.Poly( value, W_SYMBOL )
		x = to_rational( poly.coeff_monomial( 1 ) )
		y = to_rational( poly.coeff_monomial( W_SYMBOL ) )
		return QOmega._raw( x, y )
	value = sympy.expand( sympy.radsimp( value ) )
	x, y = _ZERO, _ZERO
	for term, coefficient in value.as_coefficients_dict( ).items( ):
		if term == 1:
			x += to_rational( coefficient )
		elif term == _SQRT3:
			y += 3 * to_rational( coefficient )
		else:
			raise ExtensionRequired( f'{value} is not an element of Q(w)', cause='QOmega',
			                         method='qomega_from_sympy', module='exactalg' )
	return QOmega._raw( x, y )


# ------------------------------------------------------------------------------------------
# coefficient ring helpers shared by UniPoly and PuiseuxSeries
# ------------------------------------------------------------------------------------------

def is_exact_scalar( value: object ) -> bool:
	return isinstance( value, (QOmega, int, Fraction) ) and not isinstance( value, bool )


def _is_mp( value: object ) -> bool:
	return isinstance( value, (mpmath.mpf, mpmath.mpc) )


def _is_numeric( value: object ) -> bool:
	return _is_mp( value ) or isinstance( value, (float, complex) )


def _is_zero( value: object ) -> bool:
	if isinstance( value, (QOmega, BiPoly) ):
		return not value
	return value == 0


def _zero_like( value: object ) -> object:
	if isinstance( value, QOmega ):
		return QOmega( )
	if isinstance( value, BiPoly ):
		return BiPoly( )
	if _is_mp( value ):
		return mpmath.mpf( 0 )
	if isinstance( value, (float, complex) ):
		return 0j
	if isinstance( value, (int, Fraction) ):
		return _ZERO
	return type( value )( 0 )


def _one_like( value: object ) -> object:
	if isinstance( value, QOmega ):
		return QOmega( 1 )
	if isinstance( value, BiPoly ):
		return BiPoly.constant( 1 )
	if _is_mp( value ):
		return mpmath.mpf( 1 )
	if isinstance( value, (float, complex) ):
		return 1 + 0j
	return _ONE


def _lift( value: Fraction, sample: object ) -> object:
	'''Rational scalar in the ring of sample.'''
	if _is_mp( sample ):
		return mpmath.mpf( value.numerator ) / value.denominator
	if isinstance( sample, (float, complex) ):
		return float( value )
	return value


def _ring_inverse( value: object ) -> object:
	if isinstance( value, QOmega ):
		return value.inverse( )
	if isinstance( value, BiPoly ):
		if not value.is_constant( ) or not value:
			raise ValueError( 'only nonzero constant polynomials are invertible' )
		return BiPoly.constant( value.constant_value( ).inverse( ) )
	if isinstance( value, (int, Fraction) ):
		return 1 / Fraction( value )
	return 1 / value


def _magnitude( value: object ) -> object:
	if _is_mp( value ):
		return abs( value )
	return abs( complex( value ) )


def _cancel_clean( total: object, scale: object ) -> object:
	'''Numeric sums below the relative cancellation threshold become exact zero.'''
	if _is_mp( total ):
		if abs( total ) <= _CANCEL_MP * scale:
			return mpmath.mpf( 0 )
		return total
	if isinstance( total, (float, complex) ):
		if abs( total ) <= _CANCEL_FLOAT * float( scale ):
			return 0j
	return total


def to_mp( value: object ) -> object:
	if isinstance( value, QOmega ):
		return value.to_mpc( )
	if isinstance( value, (int, Fraction) ):
		q = to_rational( value )
		return mpmath.mpf( q.numerator ) / q.denominator
	if isinstance( value, BiPoly ):
		if not value.is_constant( ):
			raise TypeError( 'non-constant polynomial has no numeric value' )
		return value.constant_value( ).to_mpc( )
	if isinstance( value, complex ):
		return mpmath.mpc( value )
	return value


# ------------------------------------------------------------------------------------------
# polynomials in (c, a)
# ------------------------------------------------------------------------------------------

class BiPoly( ):
	'''

		Purpose:
		--------
		Sparse polynomial in (c, a) over Q(w). Terms map (deg_c, deg_a) to a nonzero QOmega.

		Constructor:
		-----------
		BiPoly( terms: Mapping[ (int, int), QOmega-like ]=None )

	'''
	__slots__ = ( 'terms', )

	def __init__( self, terms: Mapping[ Tuple[ int, int ], object ]=None ):
		clean = { }
		if terms:
			for key, coefficient in terms.items( ):
				q = QOmega.coerce( coefficient )
				if q:
					clean[ (int( key[ 0 ] ), int( key[ 1 ] )) ] = q
		self.terms = clean


	@classmethod
	def _raw( cls, terms: Dict[ Tuple[ int, int ], QOmega ] ) -> BiPoly:
		obj = object.__new__( cls )
		obj.terms = terms
		return obj


	@classmethod
	def constant( cls, value: object ) -> BiPoly:
		return cls( { (0, 0): value } )


	@classmethod
	def c( cls ) -> BiPoly:
		return cls( { (1, 0): 1 } )


	@classmethod
	def a( cls ) -> BiPoly:
		return cls( { (0, 1): 1 } )


	@classmethod
	def monomial( cls, deg_c: int, deg_a: int, coefficient: object=1 ) -> BiPoly:
		return cls( { (deg_c, deg_a): coefficient } )


	@staticmethod
	def coerce( value: object ) -> BiPoly:
		if isinstance( value, BiPoly ):
			return value
		return BiPoly.constant( value )


	@staticmethod
	def _maybe( value: object ) -> Optional[ BiPoly ]:
		if isinstance( value, BiPoly ):
			return value
		if is_exact_scalar( value ):
			return BiPoly.constant( value )
		return None


	def __add__( self, other: object ) -> BiPoly:
		other = BiPoly._maybe( other )
		if other is None:
			return NotImplemented
		out = dict( self.terms )
		for key, coefficient in other.terms.items( ):
			current = out.get( key )
			if current is None:
				out[ key ] = coefficient
			else:
				total = current + coefficient
				if total:
					out[ key ] = total
				else:
					del out[ key ]
		return BiPoly._raw( out )

	__radd__ = __add__


	def __neg__( self ) -> BiPoly:
		return BiPoly._raw( { k: -v for k, v in self.terms.items( ) } )


	def __sub__( self, other: object ) -> BiPoly:
		other = BiPoly._maybe( other )
		if other is None:
			return NotImplemented
		return self + ( -other )


	def __rsub__( self, other: object ) -> BiPoly:
		other = BiPoly._maybe( other )
		if other is None:
			return NotImplemented
		return other + ( -self )


	def scale( self, factor: object ) -> BiPoly:
		factor = QOmega.coerce( factor )
		if not factor:
			return BiPoly( )
		return BiPoly._raw( { k: v * factor for k, v in self.terms.items( ) } )


	def __mul__( self, other: object ) -> BiPoly:
		if is_exact_scalar( other ):
			return self.scale( other )
		if not isinstance( other, BiPoly ):
			return NotImplemented
		if len( other.terms ) == 1 and (0, 0) in other.terms:
			return self.scale( other.terms[ (0, 0) ] )
		if len( self.terms ) == 1 and (0, 0) in self.terms:
			return other.scale( self.terms[ (0, 0) ] )
		out: Dict[ Tuple[ int, int ], QOmega ] = { }
		for (i1, j1), c1 in self.terms.items( ):
			for (i2, j2), c2 in other.terms.items( ):
				key = (i1 + i2, j1 + j2)
				product = c1 * c2
				current = out.get( key )
				out[ key ] = product if current is None else current + product
		return BiPoly._raw( { k: v for k, v in out.items( ) if v } )

	__rmul__ = __mul__


	def __truediv__( self, other: object ) -> BiPoly:
		if is_exact_scalar( other ):
			return self.scale( QOmega.coerce( other ).inverse( ) )
		if isinstance( other, BiPoly ) and other.is_constant( ) and other:
			return self.scale( other.constant_value( ).inverse( ) )
		return NotImplemented


	def __pow__( self, exponent: int ) -> BiPoly:
		if not isinstance( exponent, int ) or exponent < 0:
			return NotImplemented
		result = BiPoly.constant( 1 )
		base = self
		while exponent:
			if exponent & 1:
				result = result * base
			exponent >>= 1
			if exponent:
				base = base * base
		return result


	def __eq__( self, other: object ) -> bool:
		other = BiPoly._maybe( other )
		if other is None:
			return NotImplemented
		return self.terms == other.terms


	def __hash__( self ) -> int:
		return hash( frozenset( self.terms.items( ) ) )


	def __bool__( self ) -> bool:
		return bool( self.terms )


	def is_zero( self ) -> bool:
		return not self.terms


	def is_constant( self ) -> bool:
		return not self.terms or ( len( self.terms ) == 1 and (0, 0) in self.terms )


	def constant_value( self ) -> QOmega:
		return self.terms.get( (0, 0), QOmega( ) )


	def coefficient( self, deg_c: int, deg_a: int ) -> QOmega:
		return self.terms.get( (deg_c, deg_a), QOmega( ) )


	def monomials( self ) -> List[ Tuple[ Tuple[ int, int ], QOmega ] ]:
		return sorted( self.terms.items( ) )


	def total_degree( self ) -> int:
		if not self.terms:
			return -1
		return max( i + j for i, j in self.terms )


	def degree( self, var: str ) -> int:
		if not self.terms:
			return -1
		index = 0 if var == 'c' else 1
		return max( key[ index ] for key in self.terms )


	def homogeneous_part( self, degree: int ) -> BiPoly:
		return BiPoly._raw( { k: v for k, v in self.terms.items( ) if k[ 0 ] + k[ 1 ] == degree } )


	def leading_form( self ) -> BiPoly:
		return self.homogeneous_part( self.total_degree( ) )


	def leading_coefficient_in( self, var: str ) -> BiPoly:
		'''Coefficient of the top power of var, as a polynomial in the other variable.'''
		d = self.degree( var )
		if var == 'c':
			return BiPoly._raw( { (0, j): v for (i, j), v in self.terms.items( ) if i == d } )
		return BiPoly._raw( { (i, 0): v for (i, j), v in self.terms.items( ) if j == d } )


	def is_rational( self ) -> bool:
		return all( v.is_rational( ) for v in self.terms.values( ) )


	def partial( self, var: str ) -> BiPoly:
		out = { }
		for (i, j), v in self.terms.items( ):
			if var == 'c' and i > 0:
				out[ (i - 1, j) ] = v * i
			elif var == 'a' and j > 0:
				out[ (i, j - 1) ] = v * j
		return BiPoly._raw( out )


	def evaluate( self, c: object, a: object ) -> object:
		'''

			Purpose:
			--------
			Exact evaluation for Q(w)/rational inputs; otherwise numeric with w -> 1/sqrt(3)
			(mpmath when either input is an mpmath number, else complex/numpy).

		'''
		if is_exact_scalar( c ) and is_exact_scalar( a ):
			c, a = QOmega.coerce( c ), QOmega.coerce( a )
			convert = lambda q: q
			total: object = QOmega( )
		elif _is_mp( c ) or _is_mp( a ):
			convert = lambda q: q.to_mpc( )
			total = mpmath.mpf( 0 )
		else:
			convert = lambda q: q.to_complex( )
			total = 0j
		if not self.terms:
			return total
		c_pow = [ c ** 0 if not is_exact_scalar( c ) else QOmega( 1 ) ]
		a_pow = [ a ** 0 if not is_exact_scalar( a ) else QOmega( 1 ) ]
		for _ in range( self.degree( 'c' ) ):
			c_pow.append( c_pow[ -1 ] * c )
		for _ in range( self.degree( 'a' ) ):
			a_pow.append( a_pow[ -1 ] * a )
		for (i, j), v in self.terms.items( ):
			total = total + convert( v ) * c_pow[ i ] * a_pow[ j ]
		return total


	def evaluate_series( self, c: PuiseuxSeries, a: PuiseuxSeries ) -> PuiseuxSeries:
		'''Substitutes series for (c, a); coefficients follow the series ring.'''
		sample = c.zero
		numeric = _is_numeric( sample )
		total = PuiseuxSeries( [ ], zero=sample )
		c_pow = [ PuiseuxSeries.one( sample ) ]
		a_pow = [ PuiseuxSeries.one( sample ) ]
		for _ in range( self.degree( 'c' ) ):
			c_pow.append( c_pow[ -1 ] * c )
		for _ in range( self.degree( 'a' ) ):
			a_pow.append( a_pow[ -1 ] * a )
		for (i, j), v in self.terms.items( ):
			factor = v.to_mpc( ) if numeric else v
			total = total + ( c_pow[ i ] * a_pow[ j ] ).scale( factor )
		return total


	def specialize( self, var: str, value: object ) -> BiPoly:
		'''Substitutes an exact value for one variable.'''
		value = QOmega.coerce( value )
		out = BiPoly( )
		for (i, j), v in self.terms.items( ):
			if var == 'c':
				out = out + BiPoly.monomial( 0, j, v * value ** i )
			else:
				out = out + BiPoly.monomial( i, 0, v * value ** j )
		return out


	def restrict( self, c_line: UniPoly, a_line: UniPoly ) -> UniPoly:
		'''Composes with a parameterized line s -> (c(s), a(s)); result is a UniPoly in s.'''
		zero = QOmega( )
		total = UniPoly( [ ], zero )
		c_pow = [ UniPoly( [ QOmega( 1 ) ], zero ) ]
		a_pow = [ UniPoly( [ QOmega( 1 ) ], zero ) ]
		for _ in range( self.degree( 'c' ) ):
			c_pow.append( c_pow[ -1 ] * c_line )
		for _ in range( self.degree( 'a' ) ):
			a_pow.append( a_pow[ -1 ] * a_line )
		for (i, j), v in self.terms.items( ):
			total = total + ( c_pow[ i ] * a_pow[ j ] ).scale( v )
		return total


	def denominator_primes( self ) -> set:
		primes = set( )
		for v in self.terms.values( ):
			for part in (v.x, v.y):
				if part.denominator > 1:
					primes.update( sympy.primefactors( part.denominator ) )
		return primes


	def leading_monomial( self ) -> Tuple[ int, int ]:
		return max( self.terms, key=lambda k: (k[ 0 ] + k[ 1 ], k[ 1 ], k[ 0 ]) )


	def primitive( self ) -> BiPoly:
		'''

			Purpose:
			--------
			Normal form up to units: rational polynomials become coprime integer coefficients
			with positive leading coefficient; others are made monic.

		'''
		if not self.terms:
			return self
		lead = self.terms[ self.leading_monomial( ) ]
		if not self.is_rational( ):
			return self.scale( lead.inverse( ) )
		dens = reduce( math.lcm, ( v.x.denominator for v in self.terms.values( ) ), 1 )
		nums = reduce( math.gcd, ( abs( ( v.x * dens ).numerator ) for v in self.terms.values( ) ), 0 )
		factor = Fraction( dens, nums )
		if lead.x < 0:
			factor = -factor
		return self.scale( factor )


	def associates( self, other: BiPoly ) -> bool:
		if not self.terms or not other.terms:
			return not self.terms and not other.terms
		return self.primitive( ) == other.primitive( )


	def to_sympy( self, formal: bool=True ) -> sympy.Expr:
		total = sympy.Integer( 0 )
		for (i, j), v in self.monomials( ):
			total += qomega_to_sympy( v, formal ) * C_SYMBOL ** i * A_SYMBOL ** j
		return total


	@classmethod
	def from_sympy( cls, expr: object ) -> BiPoly:
		expr = reduce_omega( sympy.expand( sympy.sympify( expr ) ) )
		if expr == 0:
			return cls( )
		poly = sympy.Poly( expr, C_SYMBOL, A_SYMBOL )
		out = { }
		for (i, j), coefficient in poly.terms( ):
			q = qomega_from_sympy( coefficient )
			if q:
				out[ (i, j) ] = q
		return cls._raw( out )


	def to_json( self ) -> Dict[ str, list ]:
		return { 'terms': [ [ i, j ] + v.to_json( ) for (i, j), v in self.monomials( ) ] }


	@classmethod
	def from_json( cls, data: Mapping[ str, list ] ) -> BiPoly:
		return cls( { (int( t[ 0 ] ), int( t[ 1 ] )): QOmega( Fraction( t[ 2 ] ), Fraction( t[ 3 ] ) )
		              for t in data[ 'terms' ] } )


	def __repr__( self ) -> str:
		return f'BiPoly({self})'


	def __str__( self ) -> str:
		if not self.terms:
			return '0'
		parts = [ ]
		for (i, j), v in sorted( self.terms.items( ), key=lambda kv: (-(kv[ 0 ][ 0 ] + kv[ 0 ][ 1 ]), kv[ 0 ]) ):
			mono = '*'.join( p for p in ( f'c^{i}' if i > 1 else 'c' if i else '',
			                              f'a^{j}' if j > 1 else 'a' if j else '' ) if p )
			parts.append( f'{v}*{mono}' if mono else str( v ) )
		return ' + '.join( parts )


	def __dir__( self ) -> List[ str ] | None:
		return [ 'terms', 'c', 'a', 'constant', 'monomial', 'total_degree', 'degree',
		         'leading_form', 'evaluate', 'restrict', 'specialize', 'partial',
		         'primitive', 'associates', 'to_sympy', 'from_sympy', 'to_json', 'from_json' ]


C = BiPoly.c( )
A = BiPoly.a( )


# ------------------------------------------------------------------------------------------
# univariate polynomials over a coefficient ring
# ------------------------------------------------------------------------------------------

class UniPoly( ):
	'''

		Purpose:
		--------
		Dense univariate polynomial, coefficients lowest degree first, over QOmega,
		BiPoly, Fraction or numeric scalars.

		Constructor:
		-----------
		UniPoly( coeffs: Sequence, zero=None )

	'''
	__slots__ = ( 'coeffs', 'zero' )

	def __init__( self, coeffs: Sequence[ object ]=( ), zero: object=None ):
		coeffs = list( coeffs )
		if zero is None:
			zero = _zero_like( coeffs[ 0 ] ) if coeffs else QOmega( )
		while coeffs and _is_zero( coeffs[ -1 ] ):
			coeffs.pop( )
		self.coeffs = tuple( coeffs )
		self.zero = zero


	@classmethod
	def x( cls, zero: object=None ) -> UniPoly:
		zero = QOmega( ) if zero is None else zero
		return cls( [ zero, _one_like( zero ) ], zero )


	def degree( self ) -> int:
		return len( self.coeffs ) - 1


	def leading( self ) -> object:
		return self.coeffs[ -1 ] if self.coeffs else self.zero


	def is_zero( self ) -> bool:
		return not self.coeffs


	def __len__( self ) -> int:
		return len( self.coeffs )


	def __getitem__( self, index: int ) -> object:
		if 0 <= index < len( self.coeffs ):
			return self.coeffs[ index ]
		return self.zero


	def _coerce( self, other: object ) -> UniPoly:
		if isinstance( other, UniPoly ):
			return other
		return UniPoly( [ other ], self.zero )


	def __add__( self, other: object ) -> UniPoly:
		other = self._coerce( other )
		n = max( len( self.coeffs ), len( other.coeffs ) )
		return UniPoly( [ self[ i ] + other[ i ] for i in range( n ) ], self.zero )

	__radd__ = __add__


	def __neg__( self ) -> UniPoly:
		return UniPoly( [ -v for v in self.coeffs ], self.zero )


	def __sub__( self, other: object ) -> UniPoly:
		return self + ( -self._coerce( other ) )


	def __rsub__( self, other: object ) -> UniPoly:
		return self._coerce( other ) + ( -self )


	def scale( self, factor: object ) -> UniPoly:
		return UniPoly( [ v * factor for v in self.coeffs ], self.zero )


	def __mul__( self, other: object ) -> UniPoly:
		if not isinstance( other, UniPoly ):
			return self.scale( other )
		if not self.coeffs or not other.coeffs:
			return UniPoly( [ ], self.zero )
		out = [ None ] * ( len( self.coeffs ) + len( other.coeffs ) - 1 )
		for i, u in enumerate( self.coeffs ):
			if _is_zero( u ):
				continue
			for j, v in enumerate( other.coeffs ):
				product = u * v
				out[ i + j ] = product if out[ i + j ] is None else out[ i + j ] + product
		return UniPoly( [ self.zero if v is None else v for v in out ], self.zero )

	__rmul__ = __mul__


	def __pow__( self, exponent: int ) -> UniPoly:
		result = UniPoly( [ _one_like( self.zero ) ], self.zero )
		base = self
		while exponent:
			if exponent & 1:
				result = result * base
			exponent >>= 1
			if exponent:
				base = base * base
		return result


	def __eq__( self, other: object ) -> bool:
		if not isinstance( other, UniPoly ):
			return NotImplemented
		return self.coeffs == other.coeffs


	def __hash__( self ) -> int:
		return hash( self.coeffs )


	def compose( self, inner: UniPoly ) -> UniPoly:
		'''Horner composition self( inner ).'''
		result = UniPoly( [ ], self.zero )
		for v in reversed( self.coeffs ):
			result = result * inner + v
		return result


	def __call__( self, value: object ) -> object:
		result = self.zero
		for v in reversed( self.coeffs ):
			result = result * value + v
		return result


	def derivative( self ) -> UniPoly:
		return UniPoly( [ v * i for i, v in enumerate( self.coeffs ) ][ 1: ], self.zero )


	def divmod( self, divisor: UniPoly ) -> Tuple[ UniPoly, UniPoly ]:
		'''

			Purpose:
			--------
			Long division; the divisor's leading coefficient must be a unit of the ring.

		'''
		if divisor.is_zero( ):
			raise ZeroDivisionError( 'division by the zero polynomial' )
		inverse = _ring_inverse( divisor.leading( ) )
		rem = list( self.coeffs )
		dq = divisor.degree( )
		if len( rem ) - 1 < dq:
			return UniPoly( [ ], self.zero ), self
		quotient = [ self.zero ] * ( len( rem ) - dq )
		for i in range( len( rem ) - 1 - dq, -1, -1 ):
			factor = rem[ i + dq ] * inverse
			quotient[ i ] = factor
			if _is_zero( factor ):
				continue
			for j, d in enumerate( divisor.coeffs ):
				rem[ i + j ] = rem[ i + j ] - factor * d
		return UniPoly( quotient, self.zero ), UniPoly( rem[ :dq ], self.zero )


	def map( self, func, zero: object=None ) -> UniPoly:
		values = [ func( v ) for v in self.coeffs ]
		if zero is None:
			zero = _zero_like( values[ 0 ] ) if values else self.zero
		return UniPoly( values, zero )


	def specialize( self, c: object, a: object ) -> UniPoly:
		'''Evaluates BiPoly coefficients at (c, a).'''
		values = [ v.evaluate( c, a ) for v in self.coeffs ]
		zero = QOmega( ) if is_exact_scalar( c ) and is_exact_scalar( a ) else _zero_like( values[ 0 ] if values else 0j )
		return UniPoly( values, zero )


	def to_sympy( self, symbol: sympy.Symbol=Z_SYMBOL, formal: bool=True ) -> sympy.Expr:
		total = sympy.Integer( 0 )
		for i, v in enumerate( self.coeffs ):
			if isinstance( v, BiPoly ):
				term = v.to_sympy( formal )
			elif isinstance( v, QOmega ):
				term = qomega_to_sympy( v, formal )
			else:
				term = sympy.nsimplify( v ) if isinstance( v, float ) else sympy.sympify( v )
			total += term * symbol ** i
		return total


	def __repr__( self ) -> str:
		return f'UniPoly({[ str( v ) for v in self.coeffs ]})'


# ------------------------------------------------------------------------------------------
# truncated Laurent / Puiseux series
# ------------------------------------------------------------------------------------------

class PuiseuxSeries( ):
	'''

		Purpose:
		--------
		sum_i coeffs[i] * t^((lo + i)/ram), known for exponents (in units 1/ram) below prec.
		prec is math.inf for exact series with finite support. Coefficients are QOmega,
		BiPoly or mpmath numbers.

		Constructor:
		-----------
		PuiseuxSeries( coeffs, lo=0, ram=1, prec=math.inf, zero=None )

	'''
	__slots__ = ( 'ram', 'lo', 'coeffs', 'prec', 'zero' )

	def __init__( self, coeffs: Sequence[ object ]=( ), lo: int=0, ram: int=1,
	              prec: float | int=math.inf, zero: object=None ):
		if ram < 1:
			raise ValueError( 'ramification must be positive' )
		coeffs = list( coeffs )
		if zero is None:
			zero = _zero_like( coeffs[ 0 ] ) if coeffs else QOmega( )
		if prec != math.inf:
			prec = int( prec )
			coeffs = coeffs[ :max( prec - lo, 0 ) ]
		start = 0
		while start < len( coeffs ) and _is_zero( coeffs[ start ] ):
			start += 1
		coeffs = coeffs[ start: ]
		lo += start
		while coeffs and _is_zero( coeffs[ -1 ] ):
			coeffs.pop( )
		if not coeffs:
			lo = prec if prec != math.inf else 0
		self.ram = ram
		self.lo = lo
		self.coeffs = tuple( coeffs )
		self.prec = prec
		self.zero = zero


	@classmethod
	def one( cls, sample: object=None ) -> PuiseuxSeries:
		sample = QOmega( ) if sample is None else sample
		return cls( [ _one_like( sample ) ], zero=_zero_like( sample ) )


	@classmethod
	def monomial( cls, coefficient: object, exponent: int, ram: int=1 ) -> PuiseuxSeries:
		return cls( [ coefficient ], lo=exponent, ram=ram )


	@classmethod
	def t( cls, sample: object=None ) -> PuiseuxSeries:
		sample = QOmega( ) if sample is None else sample
		return cls( [ _one_like( sample ) ], lo=1, zero=_zero_like( sample ) )


	def is_zero( self ) -> bool:
		return not self.coeffs


	def is_exact( self ) -> bool:
		return self.prec == math.inf


	def valuation( self ) -> Optional[ Fraction ]:
		if not self.coeffs:
			return None
		return Fraction( self.lo, self.ram )


	def leading( self ) -> object:
		return self.coeffs[ 0 ] if self.coeffs else self.zero


	def terms( self ) -> List[ Tuple[ Fraction, object ] ]:
		return [ (Fraction( self.lo + i, self.ram ), v) for i, v in enumerate( self.coeffs )
		         if not _is_zero( v ) ]


	def coefficient( self, exponent: object ) -> object:
		index = Fraction( exponent ) * self.ram - self.lo
		if index.denominator != 1 or index < 0 or index >= len( self.coeffs ):
			return self.zero
		return self.coeffs[ int( index ) ]


	def precision( self ) -> Fraction | float:
		return self.prec if self.prec == math.inf else Fraction( self.prec, self.ram )


	def _low( self ) -> float | int:
		return self.lo if self.coeffs else self.prec


	def ramify( self, factor: int ) -> PuiseuxSeries:
		if factor == 1:
			return self
		coeffs = [ ]
		for i, v in enumerate( self.coeffs ):
			if i:
				coeffs.extend( [ self.zero ] * ( factor - 1 ) )
			coeffs.append( v )
		prec = self.prec * factor if self.prec != math.inf else math.inf
		return PuiseuxSeries( coeffs, self.lo * factor, self.ram * factor, prec, self.zero )


	@staticmethod
	def _align( left: PuiseuxSeries, right: PuiseuxSeries ) -> Tuple[ PuiseuxSeries, PuiseuxSeries ]:
		ram = math.lcm( left.ram, right.ram )
		return left.ramify( ram // left.ram ), right.ramify( ram // right.ram )


	def _operand( self, other: object ) -> Optional[ PuiseuxSeries ]:
		if isinstance( other, PuiseuxSeries ):
			return other
		if isinstance( other, (QOmega, BiPoly, int, Fraction, complex, float, mpmath.mpf, mpmath.mpc) ):
			return PuiseuxSeries( [ other ], zero=self.zero )
		return None


	def truncate( self, prec: float | int ) -> PuiseuxSeries:
		return PuiseuxSeries( self.coeffs, self.lo, self.ram, min( self.prec, prec ), self.zero )


	def __add__( self, other: object ) -> PuiseuxSeries:
		other = self._operand( other )
		if other is None:
			return NotImplemented
		a, b = PuiseuxSeries._align( self, other )
		prec = min( a.prec, b.prec )
		if not a.coeffs:
			return b.truncate( prec )
		if not b.coeffs:
			return a.truncate( prec )
		lo = min( a.lo, b.lo )
		hi = max( a.lo + len( a.coeffs ), b.lo + len( b.coeffs ) )
		if prec != math.inf:
			hi = min( hi, prec )
		numeric = _is_numeric( a.zero )
		out = [ ]
		for e in range( lo, hi ):
			u = a.coeffs[ e - a.lo ] if 0 <= e - a.lo < len( a.coeffs ) else None
			v = b.coeffs[ e - b.lo ] if 0 <= e - b.lo < len( b.coeffs ) else None
			if u is None:
				out.append( a.zero if v is None else v )
			elif v is None:
				out.append( u )
			else:
				total = u + v
				if numeric:
					total = _cancel_clean( total, max( _magnitude( u ), _magnitude( v ) ) )
				out.append( total )
		return PuiseuxSeries( out, lo, a.ram, prec, a.zero )

	__radd__ = __add__


	def __neg__( self ) -> PuiseuxSeries:
		return PuiseuxSeries( [ -v for v in self.coeffs ], self.lo, self.ram, self.prec, self.zero )


	def __sub__( self, other: object ) -> PuiseuxSeries:
		other = self._operand( other )
		if other is None:
			return NotImplemented
		return self + ( -other )


	def __rsub__( self, other: object ) -> PuiseuxSeries:
		other = self._operand( other )
		if other is None:
			return NotImplemented
		return other + ( -self )


	def scale( self, factor: object ) -> PuiseuxSeries:
		return PuiseuxSeries( [ v * factor for v in self.coeffs ], self.lo, self.ram, self.prec, self.zero )


	def __mul__( self, other: object ) -> PuiseuxSeries:
		if not isinstance( other, PuiseuxSeries ):
			operand = self._operand( other )
			if operand is None:
				return NotImplemented
			return self.scale( other )
		a, b = PuiseuxSeries._align( self, other )
		prec = min( a._low( ) + b.prec, b._low( ) + a.prec )
		if not a.coeffs or not b.coeffs:
			return PuiseuxSeries( [ ], 0, a.ram, prec, a.zero )
		lo = a.lo + b.lo
		n = len( a.coeffs ) + len( b.coeffs ) - 1
		if prec != math.inf:
			n = min( n, prec - lo )
		if n <= 0:
			return PuiseuxSeries( [ ], 0, a.ram, prec, a.zero )
		numeric = _is_numeric( a.zero )
		out = [ None ] * n
		scale = [ 0 ] * n if numeric else None
		for i, u in enumerate( a.coeffs[ :n ] ):
			if _is_zero( u ):
				continue
			for j, v in enumerate( b.coeffs[ :n - i ] ):
				product = u * v
				out[ i + j ] = product if out[ i + j ] is None else out[ i + j ] + product
				if numeric:
					scale[ i + j ] = max( scale[ i + j ], _magnitude( product ) )
		if numeric:
			out = [ a.zero if v is None else _cancel_clean( v, s ) for v, s in zip( out, scale ) ]
		else:
			out = [ a.zero if v is None else v for v in out ]
		return PuiseuxSeries( out, lo, a.ram, prec, a.zero )


	def __rmul__( self, other: object ) -> PuiseuxSeries:
		return self.scale( other )


	def __pow__( self, exponent: int ) -> PuiseuxSeries:
		if exponent < 0:
			return self.reciprocal( ) ** ( -exponent )
		result = PuiseuxSeries( [ _one_like( self.zero ) ], 0, self.ram, zero=self.zero )
		base = self
		while exponent:
			if exponent & 1:
				result = result * base
			exponent >>= 1
			if exponent:
				base = base * base
		return result


	def reciprocal( self, order: int=None ) -> PuiseuxSeries:
		'''

			Purpose:
			--------
			1/self. Relative precision is preserved for truncated input; exact input with
			more than one term is cut at the absolute order (units 1/ram) given.

		'''
		if not self.coeffs:
			raise ZeroDivisionError( 'reciprocal of a zero series' )
		inverse = _ring_inverse( self.coeffs[ 0 ] )
		if self.prec == math.inf and len( self.coeffs ) == 1:
			return PuiseuxSeries( [ inverse ], -self.lo, self.ram, math.inf, self.zero )
		if self.prec != math.inf:
			length = self.prec - self.lo
			prec = self.prec - 2 * self.lo
		else:
			prec = order if order is not None else -self.lo + DEFAULT_SERIES_ORDER
			length = prec + self.lo
		if order is not None:
			prec = min( prec, order )
			length = min( length, prec + self.lo )
		if length <= 0:
			return PuiseuxSeries( [ ], 0, self.ram, prec, self.zero )
		numeric = _is_numeric( self.zero )
		out = [ inverse ]
		for n in range( 1, length ):
			total = None
			scale = 0
			for i in range( 1, min( n, len( self.coeffs ) - 1 ) + 1 ):
				product = self.coeffs[ i ] * out[ n - i ]
				total = product if total is None else total + product
				if numeric:
					scale = max( scale, _magnitude( product ) )
			if total is None:
				out.append( self.zero )
				continue
			if numeric:
				total = _cancel_clean( total, scale )
			out.append( -( total * inverse ) )
		return PuiseuxSeries( out, -self.lo, self.ram, prec, self.zero )


	def div( self, other: PuiseuxSeries, order: int=None ) -> PuiseuxSeries:
		if not isinstance( other, PuiseuxSeries ):
			return self.scale( _ring_inverse( other ) )
		a, b = PuiseuxSeries._align( self, other )
		if order is None and a.prec != math.inf:
			order = a.prec - a._low( ) - b.lo
		return a * b.reciprocal( order )


	def __truediv__( self, other: object ) -> PuiseuxSeries:
		return self.div( other )


	def compose( self, inner: PuiseuxSeries, order: int=None ) -> PuiseuxSeries:
		'''

			Purpose:
			--------
			self( inner( t ) ) for integer-exponent self. Truncated self needs an inner
			series of positive valuation.

		'''
		if self.ram != 1:
			raise ValueError( 'outer series of a composition must have integer exponents' )
		result = PuiseuxSeries( [ ], 0, inner.ram, math.inf, inner.zero )
		if self.prec != math.inf:
			v = inner.valuation( )
			if v is None or v <= 0:
				raise ValueError( 'inner series must have positive valuation' )
			result = result.truncate( self.prec * inner.lo )
		if order is not None:
			result = result.truncate( order )
		if not self.coeffs:
			return result
		start = self.lo
		power = inner ** start if start >= 0 else inner.reciprocal( order ) ** ( -start )
		for i, v in enumerate( self.coeffs ):
			if i:
				power = power * inner
				if order is not None:
					power = power.truncate( order )
			if not _is_zero( v ):
				result = result + power.scale( v )
		return result


	def map_coefficients( self, func, zero: object=None ) -> PuiseuxSeries:
		values = [ func( v ) for v in self.coeffs ]
		if zero is None:
			zero = _zero_like( values[ 0 ] ) if values else func( self.zero )
		return PuiseuxSeries( values, self.lo, self.ram, self.prec, zero )


	def to_mp( self ) -> PuiseuxSeries:
		return self.map_coefficients( to_mp, mpmath.mpf( 0 ) )


	def evaluate( self, t: object ) -> object:
		total = mpmath.mpc( 0 )
		for exponent, v in self.terms( ):
			total += to_mp( v ) * mpmath.power( t, mpmath.mpf( exponent.numerator ) / exponent.denominator )
		return total


	def __eq__( self, other: object ) -> bool:
		if not isinstance( other, PuiseuxSeries ):
			return NotImplemented
		a, b = PuiseuxSeries._align( self, other )
		return a.prec == b.prec and a.coeffs == b.coeffs and ( a.lo == b.lo or not a.coeffs )


	def __hash__( self ) -> int:
		return hash( (self.ram, self.lo, self.coeffs, self.prec) )


	def to_json( self ) -> Dict[ str, object ]:
		terms = [ ]
		for v in self.coeffs:
			if isinstance( v, (QOmega, BiPoly) ):
				terms.append( v.to_json( ) )
			else:
				z = complex( v )
				terms.append( [ repr( z.real ), repr( z.imag ) ] )
		return { 'ram': self.ram, 'lo': self.lo,
		         'prec': None if self.prec == math.inf else self.prec, 'terms': terms }


	@classmethod
	def from_json( cls, data: Mapping[ str, object ] ) -> PuiseuxSeries:
		prec = math.inf if data.get( 'prec' ) is None else int( data[ 'prec' ] )
		coeffs = [ BiPoly.from_json( v ) if isinstance( v, dict ) else QOmega.from_json( v )
		           for v in data[ 'terms' ] ]
		return cls( coeffs, int( data[ 'lo' ] ), int( data[ 'ram' ] ), prec,
		            BiPoly( ) if coeffs and isinstance( coeffs[ 0 ], BiPoly ) else QOmega( ) )


	def __repr__( self ) -> str:
		return f'PuiseuxSeries({self})'


	def __str__( self ) -> str:
		var = 't' if self.ram == 1 else f't^(1/{self.ram})'
		parts = [ ]
		for i, v in enumerate( self.coeffs ):
			if _is_zero( v ):
				continue
			e = self.lo + i
			parts.append( f'({v})*{var}^{e}' if e else f'({v})' )
		if self.prec != math.inf:
			parts.append( f'O({var}^{self.prec})' )
		return ' + '.join( parts ) if parts else '0'


# ------------------------------------------------------------------------------------------
# series operations: compositional inverse, k-th root, right root
# ------------------------------------------------------------------------------------------

def series_inverse( alpha: PuiseuxSeries, order: int=None ) -> PuiseuxSeries:
	'''

		Purpose:
		--------
		beta with beta(alpha(t)) = t, by Lagrange inversion:
		beta_n = (1/n) [t^(n-1)] (t/alpha)^n.

		Parameters:
		----------
		alpha: PuiseuxSeries - integer exponents, alpha(0) = 0
		order: int - output precision when alpha is exact

		Returns:
		---------
		PuiseuxSeries

	'''
	throw_if( 'alpha', alpha )
	if alpha.ram != 1:
		raise ValueError( 'series_inverse needs integer exponents' )
	if alpha.is_zero( ) or alpha.lo > 1:
		raise ZeroLinearTerm( 'linear coefficient of the series is zero', cause='PuiseuxSeries',
		                      method='series_inverse', module='exactalg' )
	if alpha.lo < 1:
		raise ValueError( 'series_inverse needs a series without constant or polar terms' )
	prec = alpha.prec if alpha.prec != math.inf else ( order or DEFAULT_SERIES_ORDER )
	if order is not None:
		prec = min( prec, order )
	zero = alpha.zero
	shifted = PuiseuxSeries( alpha.coeffs, 0, 1, alpha.prec - 1 if alpha.prec != math.inf else math.inf, zero )
	ratio = shifted.reciprocal( order=prec - 1 )
	out = [ zero ]
	power = PuiseuxSeries.one( zero )
	for n in range( 1, prec ):
		power = ( power * ratio ).truncate( prec )
		out.append( power.coefficient( n - 1 ) * _lift( Fraction( 1, n ), zero ) )
	return PuiseuxSeries( out, 0, 1, prec, zero )


def series_kth_root( alpha: PuiseuxSeries, k: int, order: int=None ) -> PuiseuxSeries:
	'''

		Purpose:
		--------
		beta with beta^k = alpha. The leading coefficient root is taken in Q(w) (positive
		real root preferred) or, for mpmath coefficients, on the principal branch.

		Parameters:
		----------
		alpha: PuiseuxSeries - order divisible by k
		k: int
		order: int - absolute output precision when alpha is exact

		Returns:
		---------
		PuiseuxSeries

	'''
	throw_if( 'alpha', alpha )
	if alpha.is_zero( ):
		raise ValueError( 'k-th root of a zero series' )
	if alpha.lo % k != 0:
		raise OrderMismatch( f'series order {alpha.valuation( )} is not divisible by {k}',
		                     cause='PuiseuxSeries', method='series_kth_root', module='exactalg' )
	lead = alpha.leading( )
	zero = alpha.zero
	if isinstance( lead, QOmega ):
		root = lead.kth_root( k )
	elif isinstance( lead, BiPoly ):
		if not lead.is_constant( ):
			raise LeadingRootUnavailable( 'leading coefficient is not a constant', cause='PuiseuxSeries',
			                              method='series_kth_root', module='exactalg' )
		root = BiPoly.constant( lead.constant_value( ).kth_root( k ) )
	else:
		root = mpmath.root( lead, k )
	new_lo = alpha.lo // k
	if alpha.prec != math.inf:
		length = alpha.prec - alpha.lo
	else:
		length = ( order - new_lo ) if order is not None else DEFAULT_SERIES_ORDER
	if order is not None:
		length = min( length, order - new_lo )
	unit = PuiseuxSeries( alpha.coeffs, 0, 1, length, zero ).scale( _ring_inverse( lead ) )
	u = unit - PuiseuxSeries.one( zero )
	total = PuiseuxSeries.one( zero )
	binom = Fraction( 1 )
	power = PuiseuxSeries.one( zero )
	for j in range( 1, max( length, 1 ) ):
		binom = binom * ( Fraction( 1, k ) - j + 1 ) / j
		power = ( power * u ).truncate( length )
		if power.is_zero( ):
			break
		total = total + power.scale( _lift( binom, zero ) )
	total = total.truncate( length )
	coeffs = [ v * root for v in total.coeffs ]
	coeffs = ( [ zero ] * ( total.lo ) ) + coeffs if total.coeffs else [ ]
	result = PuiseuxSeries( coeffs, new_lo, alpha.ram, new_lo + length, zero )
	return result


def series_right_root( alpha: PuiseuxSeries, k: int, order: int=None ) -> PuiseuxSeries:
	'''

		Purpose:
		--------
		The tangent-to-identity beta with alpha(beta(t)) = t^k, after normalizing alpha
		by its leading coefficient. Computed as the compositional inverse of alpha^(1/k).

	'''
	throw_if( 'alpha', alpha )
	if alpha.ram != 1 or alpha.is_zero( ) or alpha.lo != k:
		raise OrderMismatch( f'series order {alpha.valuation( )} differs from {k}', cause='PuiseuxSeries',
		                     method='series_right_root', module='exactalg' )
	normalized = alpha.scale( _ring_inverse( alpha.leading( ) ) )
	gamma = series_kth_root( normalized, k, order=order )
	return series_inverse( gamma, order=order )


# ------------------------------------------------------------------------------------------
# elimination through sympy
# ------------------------------------------------------------------------------------------

_VARIABLES = { 'c': C_SYMBOL, 'a': A_SYMBOL, 'z': Z_SYMBOL }


def resultant( f: object, g: object, eliminate: str='z' ) -> BiPoly:
	'''

		Purpose:
		--------
		Sylvester resultant (sympy subresultant PRS) of two UniPoly-over-BiPoly in z, or of
		two BiPoly in c or a. w is carried as a formal symbol and reduced afterwards. A zero
		result signals a common component.

		Returns:
		---------
		BiPoly

	'''
	throw_if( 'f', f )
	throw_if( 'g', g )
	var = _VARIABLES[ eliminate ]
	if eliminate == 'z':
		left, right = f.to_sympy( Z_SYMBOL, formal=True ), g.to_sympy( Z_SYMBOL, formal=True )
	else:
		left, right = BiPoly.coerce( f ).to_sympy( True ), BiPoly.coerce( g ).to_sympy( True )
	if left == 0 or right == 0:
		raise ValueError( 'resultant of a zero polynomial' )
	if not left.has( var ) or not right.has( var ):
		dl = sympy.degree( left, var )
		dr = sympy.degree( right, var )
		return BiPoly.from_sympy( left ** dr * right ** dl )
	return BiPoly.from_sympy( sympy.resultant( left, right, var ) )


@dataclass( frozen=True )
class PseudoRemainder( ):
	'''lc^power * p = q * curve + remainder in the principal variable.'''
	remainder: BiPoly
	multiplier: BiPoly
	power: int

	def is_zero( self ) -> bool:
		return self.remainder.is_zero( )


def reduce_mod_curve( p: BiPoly, curve: BiPoly, principal_var: str='a' ) -> PseudoRemainder:
	'''

		Purpose:
		--------
		Pseudo-remainder of p by curve in principal_var. A zero remainder means p vanishes
		identically on the curve; the leading-coefficient multiplier is reported.

	'''
	throw_if( 'curve', curve )
	dq = curve.degree( principal_var )
	if dq < 1:
		raise ValueError( f'curve has no positive degree in {principal_var}' )
	multiplier = curve.leading_coefficient_in( principal_var )
	if p.is_zero( ):
		return PseudoRemainder( BiPoly( ), multiplier, 0 )
	dp = p.degree( principal_var )
	if dp < dq:
		return PseudoRemainder( p, multiplier, 0 )
	var = _VARIABLES[ principal_var ]
	remainder = sympy.prem( p.to_sympy( True ), curve.to_sympy( True ), var )
	return PseudoRemainder( BiPoly.from_sympy( remainder ), multiplier, dp - dq + 1 )


def _extension( *polys: BiPoly ) -> Dict[ str, object ]:
	if all( p.is_rational( ) for p in polys ):
		return { }
	return { 'extension': _SQRT3 }


def bipoly_gcd( *polys: BiPoly ) -> BiPoly:
	nonzero = [ p for p in polys if p ]
	if not nonzero:
		return BiPoly( )
	options = _extension( *nonzero )
	exprs = [ p.to_sympy( False ) for p in nonzero ]
	g = reduce( lambda x, y: sympy.gcd( x, y, C_SYMBOL, A_SYMBOL, **options ), exprs )
	return BiPoly.from_sympy( g ).primitive( )


def bipoly_lcm( *polys: BiPoly ) -> BiPoly:
	nonzero = [ p for p in polys if p ]
	if not nonzero:
		return BiPoly( )
	options = _extension( *nonzero )
	exprs = [ p.to_sympy( False ) for p in nonzero ]
	g = reduce( lambda x, y: sympy.lcm( x, y, C_SYMBOL, A_SYMBOL, **options ), exprs )
	return BiPoly.from_sympy( g ).primitive( )


def squarefree_part( p: BiPoly ) -> BiPoly:
	if p.is_constant( ):
		return p
	part = sympy.sqf_part( p.to_sympy( False ), C_SYMBOL, A_SYMBOL, **_extension( p ) )
	return BiPoly.from_sympy( part ).primitive( )


def factor_bipoly( p: BiPoly ) -> Tuple[ QOmega, List[ Tuple[ BiPoly, int ] ] ]:
	content, factors = sympy.factor_list( p.to_sympy( False ), C_SYMBOL, A_SYMBOL, **_extension( p ) )
	return qomega_from_sympy( content ), [ (BiPoly.from_sympy( f ), int( m )) for f, m in factors ]


def bipoly_quotient( p: BiPoly, q: BiPoly ) -> BiPoly:
	'''Exact quotient p/q; raises ValueError when q does not divide p.'''
	options = _extension( p, q )
	quotient, remainder = sympy.div( p.to_sympy( False ), q.to_sympy( False ), C_SYMBOL, A_SYMBOL, **options )
	if sympy.expand( remainder ) != 0:
		raise ValueError( 'polynomial division is not exact' )
	return BiPoly.from_sympy( quotient )


def univariate_coefficients( p: BiPoly, var: str ) -> List[ QOmega ]:
	'''Coefficients (lowest first) of a BiPoly that only involves var.'''
	index = 0 if var == 'c' else 1
	if any( key[ 1 - index ] for key in p.terms ):
		raise ValueError( f'polynomial involves more than {var}' )
	out = [ QOmega( ) ] * ( p.degree( var ) + 1 )
	for key, v in p.terms.items( ):
		out[ key[ index ] ] = v
	return out


# ------------------------------------------------------------------------------------------
# capped p-adic numbers
# ------------------------------------------------------------------------------------------

class PAdic( ):
	'''

		Purpose:
		--------
		p^val * unit with the unit known modulo p^digits. A zero known only to absolute
		precision p^val has unit 0 and digits 0; the exact zero has val = inf.

		Constructor:
		-----------
		PAdic( value=0, prime=2, digits=PADIC_DIGITS )

	'''
	__slots__ = ( 'prime', 'val', 'unit', 'digits' )

	def __init__( self, value: object=0, prime: int=2, digits: int=PADIC_DIGITS ):
		q = to_rational( value )
		self.prime = prime
		if q == 0:
			self.val, self.unit, self.digits = math.inf, 0, 0
			return
		v = valuation( q, prime )
		num, den = q.numerator, q.denominator
		if v > 0:
			num //= prime ** v
		elif v < 0:
			den //= prime ** ( -v )
		modulus = prime ** digits
		self.val = v
		self.unit = ( num * pow( den, -1, modulus ) ) % modulus
		self.digits = digits


	@classmethod
	def _make( cls, prime: int, val: float | int, unit: int, digits: int ) -> PAdic:
		obj = object.__new__( cls )
		obj.prime = prime
		if val == math.inf:
			obj.val, obj.unit, obj.digits = math.inf, 0, 0
			return obj
		if digits <= 0:
			obj.val, obj.unit, obj.digits = val + max( digits, 0 ), 0, 0
			return obj
		modulus = prime ** digits
		unit %= modulus
		if unit == 0:
			obj.val, obj.unit, obj.digits = val + digits, 0, 0
			return obj
		while unit % prime == 0:
			unit //= prime
			val += 1
			digits -= 1
		obj.val, obj.unit, obj.digits = val, unit % ( prime ** digits ), digits
		return obj


	def _coerce( self, other: object ) -> PAdic:
		if isinstance( other, PAdic ):
			if other.prime != self.prime:
				raise ValueError( 'p-adic numbers over different primes' )
			return other
		return PAdic( other, self.prime, max( self.digits, PADIC_DIGITS ) )


	def is_zero( self ) -> bool:
		return self.unit == 0


	def is_exact_zero( self ) -> bool:
		return self.val == math.inf


	def valuation( self ) -> float | int:
		'''The valuation; a lower bound when the number is zero to precision.'''
		return self.val


	def __add__( self, other: object ) -> PAdic:
		other = self._coerce( other )
		if other.is_exact_zero( ):
			return self
		if self.is_exact_zero( ):
			return other
		p = self.prime
		if self.is_zero( ) and other.is_zero( ):
			return PAdic._make( p, min( self.val, other.val ), 0, 0 )
		if self.is_zero( ) or other.is_zero( ):
			known, vague = ( other, self ) if self.is_zero( ) else ( self, other )
			if vague.val <= known.val:
				return PAdic._make( p, vague.val, 0, 0 )
			return PAdic._make( p, known.val, known.unit, min( known.digits, vague.val - known.val ) )
		low, high = ( self, other ) if self.val <= other.val else ( other, self )
		shift = high.val - low.val
		digits = min( low.digits, high.digits + shift )
		unit = low.unit + high.unit * p ** shift if shift < digits else low.unit
		return PAdic._make( p, low.val, unit, digits )

	__radd__ = __add__


	def __neg__( self ) -> PAdic:
		if self.is_zero( ):
			return self
		return PAdic._make( self.prime, self.val, -self.unit, self.digits )


	def __sub__( self, other: object ) -> PAdic:
		return self + ( -self._coerce( other ) )


	def __rsub__( self, other: object ) -> PAdic:
		return self._coerce( other ) + ( -self )


	def __mul__( self, other: object ) -> PAdic:
		other = self._coerce( other )
		p = self.prime
		if self.is_exact_zero( ) or other.is_exact_zero( ):
			return PAdic._make( p, math.inf, 0, 0 )
		if self.is_zero( ) or other.is_zero( ):
			return PAdic._make( p, self.val + other.val, 0, 0 )
		digits = min( self.digits, other.digits )
		return PAdic._make( p, self.val + other.val, self.unit * other.unit, digits )

	__rmul__ = __mul__


	def inverse( self ) -> PAdic:
		if self.is_zero( ):
			raise ZeroDivisionError( 'p-adic zero has no inverse' )
		modulus = self.prime ** self.digits
		return PAdic._make( self.prime, -self.val, pow( self.unit, -1, modulus ), self.digits )


	def __truediv__( self, other: object ) -> PAdic:
		other = self._coerce( other )
		if other.is_zero( ):
			raise PrecisionExhausted( 'division by a p-adic number without significant digits',
			                          cause='PAdic', method='__truediv__', module='exactalg' )
		return self * other.inverse( )


	def __rtruediv__( self, other: object ) -> PAdic:
		return self._coerce( other ) / self


	def __pow__( self, exponent: int ) -> PAdic:
		result = PAdic( 1, self.prime, max( self.digits, 1 ) if not self.is_zero( ) else PADIC_DIGITS )
		base = self
		if exponent < 0:
			base, exponent = self.inverse( ), -exponent
		while exponent:
			if exponent & 1:
				result = result * base
			exponent >>= 1
			if exponent:
				base = base * base
		return result


	def __repr__( self ) -> str:
		if self.is_exact_zero( ):
			return f'PAdic(0)_{self.prime}'
		if self.is_zero( ):
			return f'PAdic(O({self.prime}^{self.val}))'
		return f'PAdic({self.prime}^{self.val} * {self.unit} + O({self.prime}^{self.val + self.digits}))'


# ------------------------------------------------------------------------------------------
# Newton-Puiseux expansion at the line at infinity
# ------------------------------------------------------------------------------------------

def lower_convex_hull( points: Iterable[ Tuple[ object, object ] ] ) -> List[ Tuple[ object, object ] ]:
	'''

		Purpose:
		--------
		Lower hull (monotone chain) of points sorted by abscissa; for each abscissa only the
		lowest point is kept and collinear interior points are dropped.

	'''
	lowest: Dict[ object, object ] = { }
	for x, y in points:
		if x not in lowest or y < lowest[ x ]:
			lowest[ x ] = y
	hull: List[ Tuple[ object, object ] ] = [ ]
	for point in sorted( lowest.items( ) ):
		while len( hull ) >= 2:
			(x1, y1), (x2, y2) = hull[ -2 ], hull[ -1 ]
			cross = ( x2 - x1 ) * ( point[ 1 ] - y1 ) - ( y2 - y1 ) * ( point[ 0 ] - x1 )
			if cross <= 0:
				hull.pop( )
			else:
				break
		hull.append( point )
	return hull


def _roots_in_field( coeffs: Sequence[ QOmega ], strict: bool=True ) -> List[ Tuple[ QOmega, int ] ]:
	'''

		Purpose:
		--------
		Roots in Q(w) with multiplicity of sum coeffs[i] t^i, through factorization over
		Q(sqrt 3). With strict, an irreducible factor of degree > 1 raises ExtensionRequired.

	'''
	expr = sum( ( qomega_to_sympy( v ) * T_SYMBOL ** i for i, v in enumerate( coeffs ) ), sympy.Integer( 0 ) )
	if sympy.degree( expr, T_SYMBOL ) < 1:
		return [ ]
	_, factors = sympy.factor_list( expr, T_SYMBOL, extension=_SQRT3 )
	roots = [ ]
	for factor, multiplicity in factors:
		poly = sympy.Poly( factor, T_SYMBOL )
		if poly.degree( ) == 1:
			lead, const = poly.all_coeffs( )
			roots.append( (qomega_from_sympy( -const / lead ), int( multiplicity )) )
		elif poly.degree( ) > 1 and strict:
			raise ExtensionRequired( f'roots of {factor} leave Q(w)', cause='newton_puiseux',
			                         method='_roots_in_field', module='exactalg' )
	roots.sort( key=lambda r: r[ 0 ].to_complex( ).real )
	return roots


def _roots_numeric( coeffs: Sequence[ object ] ) -> List[ Tuple[ object, int ] ]:
	values = [ to_mp( v ) for v in coeffs ]
	while values and values[ -1 ] == 0:
		values.pop( )
	if len( values ) < 2:
		return [ ]
	try:
		found = mpmath.polyroots( list( reversed( values ) ), maxsteps=600, extraprec=4 * mpmath.mp.dps )
	except mpmath.libmp.NoConvergence as e:
		raise RootFindingFailure( str( e ), cause='newton_puiseux', method='_roots_numeric', module='exactalg' )
	tolerance = mpmath.mpf( 10 ) ** ( -mpmath.mp.dps // 4 )
	clusters: List[ List[ object ] ] = [ ]
	for r in found:
		for cluster in clusters:
			if abs( cluster[ 0 ] - r ) <= tolerance * ( 1 + abs( r ) ):
				cluster.append( r )
				break
		else:
			clusters.append( [ r ] )
	return [ (mpmath.fsum( c ) / len( c ), len( c )) for c in clusters ]


def _field_roots( coeffs: Sequence[ object ], exact: bool ) -> List[ Tuple[ object, int ] ]:
	if exact:
		return _roots_in_field( coeffs )
	return _roots_numeric( coeffs )


def _qth_root( value: object, q: int, exact: bool ) -> object:
	if q == 1:
		return value
	if exact:
		try:
			return value.kth_root( q )
		except LeadingRootUnavailable as e:
			raise ExtensionRequired( e.heading, cause='newton_puiseux', method='_qth_root', module='exactalg' )
	return mpmath.root( value, q )


def _clean_terms( terms: Dict[ Tuple[ int, int ], object ], exact: bool ) -> Dict[ Tuple[ int, int ], object ]:
	if exact:
		return { k: v for k, v in terms.items( ) if v }
	if not terms:
		return terms
	scale = max( abs( v ) for v in terms.values( ) )
	return { k: v for k, v in terms.items( ) if abs( v ) > _CANCEL_MP * scale }


def _shift_equation( F: Dict[ Tuple[ int, int ], object ], p: int, q: int, gamma: object,
                     m: int, exact: bool ) -> Dict[ Tuple[ int, int ], object ]:
	'''F1(s, y1) = s^(-m) F(s^q, s^p (gamma + y1)).'''
	out: Dict[ Tuple[ int, int ], object ] = { }
	for (i, j), v in F.items( ):
		base = q * i + p * j - m
		powers = [ QOmega( 1 ) if exact else mpmath.mpf( 1 ) ]
		for _ in range( j ):
			powers.append( powers[ -1 ] * gamma )
		for l in range( j + 1 ):
			term = v * math.comb( j, l ) * powers[ j - l ]
			key = (base, l)
			out[ key ] = term if key not in out else out[ key ] + term
	return _clean_terms( out, exact )


def _regular_solve( F: Dict[ Tuple[ int, int ], object ], order: int, exact: bool ) -> Tuple[ Dict[ int, object ], int ]:
	'''y(s) with F(s, y(s)) = 0, y(0) = 0, when dF/dy(0, 0) != 0.'''
	zero = QOmega( ) if exact else mpmath.mpf( 0 )
	one = QOmega( 1 ) if exact else mpmath.mpf( 1 )
	slope = F.get( (0, 1) )
	if slope is None or _is_zero( slope ):
		raise ValueError( 'branch is not regular' )
	inverse = _ring_inverse( slope )
	deg_y = max( j for _, j in F )
	y = [ zero ] * ( order + 1 )
	for n in range( 1, order + 1 ):
		powers = [ [ one ] + [ zero ] * n ]
		for _ in range( deg_y ):
			prev = powers[ -1 ]
			powers.append( [ sum( ( prev[ k ] * y[ e - k ] for k in range( e + 1 ) if not _is_zero( prev[ k ] ) ),
			                      zero ) for e in range( n + 1 ) ] )
		residual = zero
		scale = 0
		for (i, j), v in F.items( ):
			if i <= n:
				term = v * powers[ j ][ n - i ]
				residual = residual + term
				if not exact:
					scale = max( scale, abs( term ) )
		if not exact:
			residual = _cancel_clean( residual, scale )
		y[ n ] = -( residual * inverse )
	return { e: v for e, v in enumerate( y ) if not _is_zero( v ) }, order + 1


def _local_branches( F: Dict[ Tuple[ int, int ], object ], order: int, exact: bool,
                     depth: int=0 ) -> List[ Tuple[ int, Dict[ int, object ], float | int ] ]:
	'''

		Purpose:
		--------
		Branches y -> 0 of F(x, y) = 0 at the origin, written x = t^n, y = Y(t).
		Returns (n, {exponent: coefficient}, precision) per branch.

	'''
	branches: List[ Tuple[ int, Dict[ int, object ], float | int ] ] = [ ]
	if not F:
		return branches
	jmin = min( j for _, j in F )
	if jmin > 0:
		branches.append( (1, { }, math.inf) )
		F = { (i, j - jmin): v for (i, j), v in F.items( ) }
	if depth > MAX_PUISEUX_DEPTH:
		logger.warning( 'newton_puiseux: expansion depth exceeded; branch left unresolved' )
		return branches + [ (1, { }, 0) ]
	hull = lower_convex_hull( (j, i) for i, j in F )
	for (j0, i0), (j1, i1) in zip( hull, hull[ 1: ] ):
		if i1 >= i0:
			break
		slope = Fraction( i0 - i1, j1 - j0 )
		p, q = slope.numerator, slope.denominator
		m = q * i0 + p * j0
		edge = [ QOmega( ) if exact else mpmath.mpf( 0 ) ] * ( ( j1 - j0 ) // q + 1 )
		for (i, j), v in F.items( ):
			if q * i + p * j == m:
				edge[ ( j - j0 ) // q ] = v
		for eta, multiplicity in _field_roots( edge, exact ):
			if _is_zero( eta ):
				continue
			gamma = _qth_root( eta, q, exact )
			shifted = _shift_equation( F, p, q, gamma, m, exact )
			if multiplicity == 1:
				solution, prec = _regular_solve( shifted, order, exact )
				sub = [ (1, solution, prec) ]
			else:
				sub = _local_branches( shifted, order, exact, depth + 1 )
			for n1, series, prec1 in sub:
				expansion = { p * n1: gamma }
				for e, v in series.items( ):
					key = p * n1 + e
					expansion[ key ] = v if key not in expansion else expansion[ key ] + v
				branches.append( (q * n1, expansion, p * n1 + prec1) )
	return branches


@dataclass( frozen=True )
class Branch( ):
	'''

		Purpose:
		--------
		One branch at infinity: c = c(t), a = a(t) with c = t^(-n) when the center has
		c* != 0 (otherwise a = t^(-n)).

	'''
	c: PuiseuxSeries
	a: PuiseuxSeries
	center: Tuple[ object, object ]
	ramification: int
	exact: bool

	def to_json( self ) -> Dict[ str, object ]:
		center = [ v.to_json( ) if isinstance( v, QOmega ) else [ repr( complex( v ).real ), repr( complex( v ).imag ) ]
		           for v in self.center ]
		return { 'c': self.c.to_json( ), 'a': self.a.to_json( ), 'center': center,
		         'ramification': self.ramification, 'exact': self.exact }


def points_at_infinity( curve: BiPoly, exact: bool=True ) -> List[ Tuple[ object, object ] ]:
	'''

		Purpose:
		--------
		Points [c*:a*:0] where the closure of the curve meets the line at infinity, as roots
		of the top homogeneous form; normalized to c* = 1 or to [0:1:0].

	'''
	form = curve.leading_form( )
	d = form.total_degree( )
	coeffs = [ form.coefficient( d - j, j ) for j in range( d + 1 ) ]
	centers: List[ Tuple[ object, object ] ] = [ ]
	if exact:
		for root, _ in _roots_in_field( coeffs ):
			centers.append( (QOmega( 1 ), root) )
		if not coeffs[ d ]:
			centers.append( (QOmega( ), QOmega( 1 )) )
	else:
		for root, _ in _roots_numeric( [ v.to_mpc( ) for v in coeffs ] ):
			centers.append( (mpmath.mpf( 1 ), root) )
		if not coeffs[ d ]:
			centers.append( (mpmath.mpf( 0 ), mpmath.mpf( 1 )) )
	return centers


def _local_equation( curve: BiPoly, center: Tuple[ object, object ], exact: bool ) -> Dict[ Tuple[ int, int ], object ]:
	'''

		Purpose:
		--------
		F(x, y) = x^d P(1/x, (a* + y)/x) for centers [1:a*:0], and x^d P(y/x, 1/x) for [0:1:0].

	'''
	d = curve.total_degree( )
	c_star, a_star = center
	convert = ( lambda q: q ) if exact else ( lambda q: q.to_mpc( ) )
	out: Dict[ Tuple[ int, int ], object ] = { }
	if _is_zero( c_star ):
		for (i, j), v in curve.terms.items( ):
			key = (d - i - j, i)
			out[ key ] = convert( v ) if key not in out else out[ key ] + convert( v )
		return _clean_terms( out, exact )
	powers = [ QOmega( 1 ) if exact else mpmath.mpf( 1 ) ]
	for _ in range( curve.degree( 'a' ) ):
		powers.append( powers[ -1 ] * a_star )
	for (i, j), v in curve.terms.items( ):
		for l in range( j + 1 ):
			term = convert( v ) * math.comb( j, l ) * powers[ j - l ]
			key = (d - i - j, l)
			out[ key ] = term if key not in out else out[ key ] + term
	return _clean_terms( out, exact )


def _normalize_center( center: Tuple[ object, object ], exact: bool ) -> Tuple[ object, object ]:
	c_star, a_star = center
	if exact:
		c_star, a_star = QOmega.coerce( c_star ), QOmega.coerce( a_star )
		if c_star:
			return QOmega( 1 ), a_star / c_star
		return QOmega( ), QOmega( 1 )
	c_star, a_star = to_mp( c_star ), to_mp( a_star )
	if c_star != 0:
		return mpmath.mpf( 1 ), a_star / c_star
	return mpmath.mpf( 0 ), mpmath.mpf( 1 )


def _expand_branches( curve: BiPoly, center: Optional[ Tuple[ object, object ] ], order: int,
                      exact: bool ) -> List[ Branch ]:
	if center is not None:
		centers = [ _normalize_center( center, exact and all( is_exact_scalar( v ) for v in center ) ) ]
		exact = exact and all( is_exact_scalar( v ) for v in center )
	else:
		centers = points_at_infinity( curve, exact )
	zero = QOmega( ) if exact else mpmath.mpf( 0 )
	branches: List[ Branch ] = [ ]
	for c_star, a_star in centers:
		if not exact:
			c_star, a_star = to_mp( c_star ), to_mp( a_star )
		F = _local_equation( curve, (c_star, a_star), exact )
		if (0, 0) in F:
			logger.debug( 'newton_puiseux: center %s is not on the curve closure', (c_star, a_star) )
			continue
		for n, expansion, prec in _local_branches( F, order, exact ):
			top = max( expansion ) + 1 if expansion else 0
			alpha = PuiseuxSeries( [ expansion.get( e, zero ) for e in range( top ) ], 0, 1,
			                       prec, zero )
			pole = PuiseuxSeries( [ QOmega( 1 ) if exact else mpmath.mpf( 1 ) ], -n, 1, math.inf, zero )
			if _is_zero( c_star ):
				c_series, a_series = alpha * pole, pole
			else:
				c_series, a_series = pole, ( alpha + PuiseuxSeries( [ a_star ], zero=zero ) ) * pole
			branches.append( Branch( c_series, a_series, (c_star, a_star), n, exact ) )
	return branches


def newton_puiseux( curve: BiPoly, center: Tuple[ object, object ]=None, order: int=8,
                    allow_complex: bool=True ) -> List[ Branch ]:
	'''

		Purpose:
		--------
		Puiseux parameterizations of the branches at infinity of a curve, over one center
		[c*:a*:0] or over every point at infinity when center is None.

		Parameters:
		----------
		curve: BiPoly - defining polynomial
		center: (c*, a*) - point at infinity, or None
		order: int - number of series terms computed past the leading one
		allow_complex: bool - fall back to mpmath coefficients when Q(w) is not enough

		Returns:
		---------
		List[ Branch ]

	'''
	throw_if( 'curve', curve )
	if curve.is_zero( ) or curve.total_degree( ) < 1:
		raise ValueError( 'curve must have positive degree' )
	if order < 1:
		raise ValueError( 'order must be at least 1' )
	try:
		return _expand_branches( curve, center, order, exact=True )
	except ExtensionRequired as e:
		if not allow_complex:
			raise
		logger.warning( 'newton_puiseux: %s; continuing with complex coefficients', e.heading )
		with mpmath.workdps( NUMERIC_DPS ):
			return _expand_branches( curve, center, order, exact=False )
