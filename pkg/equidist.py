'''
  ******************************************************************************************
      Assembly:                Cubo
      Filename:                equidist.py
      Author:                  Terry D. Eppler
      Created:                 05-31-2022

      Last Modified By:        Terry D. Eppler
      Last Modified On:        10-17-2026
  ******************************************************************************************
  <copyright file="equidist.py" company="Terry D. Eppler">

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
    equidist.py

    Desk-scale equidistribution experiment on a parameter line: empirical measures of
    post-critically finite parameters against the discrete bifurcation density obtained
    from the Laplacian of the critical escape rates, with PGM, PNG, CSV and SVG output.
  </summary>
  ******************************************************************************************
'''
from __future__ import annotations
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import matplotlib
matplotlib.use( 'Agg' )
import matplotlib.image
import numpy as np
import pandas as pd
import sympy
from pydantic import BaseModel

from boogr import DegreeCapExceeded, throw_if
from charts import Diagram, Window, WINDOW_DEFAULT, WINDOW_FIXED_ZERO, WINDOW_UNICRITICAL
from dynamics import polyroots
from exactalg import QOmega, UniPoly, qomega_to_sympy
from green import ITERATION_CAP, green_grid
from pcf import DEGREE_CAP

logger = logging.getLogger( __name__ )

MAX_RESOLUTION = 2048
MAX_LINE_DEGREE = 2
ATOM_TOL = 1e-8
TOL_FLOOR = 1e-12
TOL_SCALE = 1e-4
TWO_PI = 2.0 * math.pi
GRID_A = tuple( i / 3 for i in range( 4 ) )
GRID_B = tuple( ( i + 0.5 ) / 4 for i in range( 4 ) )
SCALES = (4, 8)
CSV_FORMAT = '%.12e'
PGM_LEVELS = 255
CRITICAL_MODES = ('g0', 'g1', 'max')


# ------------------------------------------------------------------------------------------
# parameter lines
# ------------------------------------------------------------------------------------------

@dataclass( frozen=True )
class ParameterLine( ):
	'''

		Purpose:
		--------
		A parameterized line s -> (c(s), a(s)) with polynomial coordinates of degree at most
		two; coefficients lowest degree first, in Q(w). window is the default plotting
		window in the s coordinate.

	'''
	name: str
	c_coeffs: Tuple[ QOmega, ... ]
	a_coeffs: Tuple[ QOmega, ... ]
	window: Window=WINDOW_DEFAULT

	def __post_init__( self ):
		throw_if( 'name', self.name )
		for label, coeffs in (('c', self.c_coeffs), ('a', self.a_coeffs)):
			if len( UniPoly( coeffs, QOmega( ) ) ) - 1 > MAX_LINE_DEGREE:
				raise ValueError( f'{label}(s) has degree above {MAX_LINE_DEGREE}' )
		if all( len( UniPoly( f, QOmega( ) ) ) <= 1 for f in (self.c_coeffs, self.a_coeffs) ):
			raise ValueError( 'a parameter line cannot be constant' )


	@classmethod
	def of( cls, name: str, c: Sequence[ object ], a: Sequence[ object ],
	        window: Window=WINDOW_DEFAULT ) -> ParameterLine:
		return cls( name, tuple( QOmega.coerce( v ) for v in c ),
		            tuple( QOmega.coerce( v ) for v in a ), window )


	@classmethod
	def affine( cls, c0: object, c1: object, a0: object, a1: object,
	            window: Window=WINDOW_DEFAULT ) -> ParameterLine:
		'''(c, a) = (c0 + c1 s, a0 + a1 s).'''
		name = f'affine:{c0},{c1},{a0},{a1}'
		return cls.of( name, (c0, c1), (a0, a1), window )


	@classmethod
	def parse( cls, text: str ) -> ParameterLine:
		'''

			Purpose:
			--------
			Reads 'c=0', 'a=0' or 'affine:c0,c1,a0,a1' with rational entries.

		'''
		throw_if( 'text', text )
		spec = text.replace( ' ', '' )
		if spec in LINES:
			return LINES[ spec ]
		if spec.startswith( 'affine:' ):
			parts = spec[ len( 'affine:' ): ].split( ',' )
			if len( parts ) != 4:
				raise ValueError( 'affine lines need four coefficients c0,c1,a0,a1' )
			return cls.affine( *( Fraction( p ) for p in parts ) )
		raise ValueError( f'unknown parameter line "{text}"' )


	@property
	def c_poly( self ) -> UniPoly:
		return UniPoly( self.c_coeffs, QOmega( ) )


	@property
	def a_poly( self ) -> UniPoly:
		return UniPoly( self.a_coeffs, QOmega( ) )


	def point( self, s: object ) -> Tuple[ object, object ]:
		'''Evaluates (c(s), a(s)); s may be a scalar or a numpy array.'''
		s = np.asarray( s, dtype=complex )
		c = np.polyval( [ v.to_complex( ) for v in reversed( self.c_coeffs ) ] or [ 0j ], s )
		a = np.polyval( [ v.to_complex( ) for v in reversed( self.a_coeffs ) ] or [ 0j ], s )
		return c, a


	def restrict( self, poly ) -> UniPoly:
		return poly.restrict( self.c_poly, self.a_poly )


	def to_json( self ) -> Dict[ str, object ]:
		return { 'name': self.name, 'c': [ v.to_json( ) for v in self.c_coeffs ],
		         'a': [ v.to_json( ) for v in self.a_coeffs ], 'window': self.window.to_json( ) }


LINE_C_ZERO = ParameterLine.of( 'c=0', (0,), (0, 1), WINDOW_UNICRITICAL )
LINE_A_ZERO = ParameterLine.of( 'a=0', (0, 1), (0,), WINDOW_FIXED_ZERO )
LINES = { 'c=0': LINE_C_ZERO, 'a=0': LINE_A_ZERO }


# ------------------------------------------------------------------------------------------
# empirical measures
# ------------------------------------------------------------------------------------------

@dataclass( frozen=True )
class EmpiricalMeasure( ):
	'''

		Purpose:
		--------
		Finite atomic probability measure on the line coordinate. Weights default to 1/N.

	'''
	atoms: Tuple[ complex, ... ]
	weights: Tuple[ float, ... ]=( )
	line: Optional[ str ]=None
	cap: Optional[ int ]=None

	def __post_init__( self ):
		if not self.atoms:
			raise ValueError( 'an empirical measure needs at least one atom' )
		if not self.weights:
			object.__setattr__( self, 'weights', tuple( [ 1.0 / len( self.atoms ) ] * len( self.atoms ) ) )
		if len( self.weights ) != len( self.atoms ):
			raise ValueError( 'atoms and weights differ in length' )
		if any( w < 0 for w in self.weights ) or abs( math.fsum( self.weights ) - 1.0 ) > 1e-9:
			raise ValueError( 'weights must be non-negative and sum to 1' )


	@classmethod
	def from_density( cls, grid: DensityGrid ) -> EmpiricalMeasure:
		'''Atoms at the cell centres weighted by the normalized density.'''
		centers = grid.cell_centers( ).ravel( )
		weights = grid.values.ravel( )
		keep = weights > 0
		return cls( tuple( complex( z ) for z in centers[ keep ] ),
		            tuple( float( w ) for w in weights[ keep ] / weights[ keep ].sum( ) ) )


	def translated( self, shift: complex ) -> EmpiricalMeasure:
		return EmpiricalMeasure( tuple( z + shift for z in self.atoms ), self.weights, self.line, self.cap )


	def __len__( self ) -> int:
		return len( self.atoms )


	def to_json( self ) -> Dict[ str, object ]:
		return { 'line': self.line, 'cap': self.cap, 'count': len( self.atoms ),
		         'atoms': [ [ repr( z.real ), repr( z.imag ) ] for z in self.atoms ] }


@lru_cache( maxsize=64 )
def line_orbit( line: ParameterLine, i: int, length: int ) -> Tuple[ UniPoly, ... ]:
	'''

		Purpose:
		--------
		The critical orbit c_i, P(c_i), ..., P^length(c_i) as polynomials in the line
		coordinate s. Restricting before iterating yields the same polynomials as restricting
		the two-variable orbit relations.

	'''
	if i not in (0, 1):
		raise ValueError( 'critical index is 0 or 1' )
	c, a = line.c_poly, line.a_poly
	half_c = c.scale( QOmega( Fraction( 1, 2 ) ) )
	a3 = a * a * a
	z = UniPoly( [ ], QOmega( ) ) if i == 0 else c
	orbit = [ z ]
	for _ in range( length ):
		z = z * z * ( z.scale( QOmega( Fraction( 1, 3 ) ) ) - half_c ) + a3
		orbit.append( z )
	return tuple( orbit )


def line_relation_roots( line: ParameterLine, i: int, n: int, k: int,
                         cap: int=DEGREE_CAP ) -> Optional[ np.ndarray ]:
	'''

		Purpose:
		--------
		Roots in s of the orbit relation P^(n+k)(c_i) = P^n(c_i) restricted to the line.
		Rational restrictions are made square-free first so that every root is simple.

		Parameters:
		----------
		line: ParameterLine
		i, n, k: int - the relation
		cap: int - largest admissible 3^(n+k)

		Returns:
		---------
		np.ndarray | None - None when the line lies inside the relation curve

	'''
	if n < 0 or k < 1:
		raise ValueError( 'need n >= 0 and k >= 1' )
	if 3 ** ( n + k ) > cap:
		raise DegreeCapExceeded( f'3^{n + k} exceeds the degree cap {cap}', cause='line_relation_roots',
		                         method='line_relation_roots', module='equidist' )
	orbit = line_orbit( line, i, n + k )
	restricted = orbit[ n + k ] - orbit[ n ]
	if restricted.is_zero( ):
		return None
	coeffs: List[ complex ]
	if all( v.is_rational( ) for v in restricted.coeffs ):
		s = sympy.Symbol( 's' )
		poly = sympy.Poly.from_list( [ qomega_to_sympy( v ) for v in reversed( restricted.coeffs ) ], s, domain='QQ' )
		sqf = sympy.Poly( poly.sqf_part( ), s, domain='QQ' )
		coeffs = [ complex( float( v ) ) for v in reversed( sqf.all_coeffs( ) ) ]
	else:
		coeffs = [ v.to_complex( ) for v in restricted.coeffs ]
	if len( coeffs ) < 2:
		return np.zeros( 0, dtype=complex )
	return polyroots( coeffs, polish=True )


def _dedupe( values: Sequence[ complex ], tol: float=ATOM_TOL ) -> List[ complex ]:
	kept: List[ complex ] = [ ]
	for z in sorted( values, key=lambda v: (round( v.real, 9 ), round( v.imag, 9 )) ):
		if all( abs( z - w ) > tol for w in kept ):
			kept.append( z )
	return kept


def pcf_on_line( line: ParameterLine, max_orbit: int ) -> EmpiricalMeasure:
	'''

		Purpose:
		--------
		Parameters on the line where some critical orbit satisfies a relation with
		n + k <= max_orbit, as a uniform empirical measure. Relations that vanish identically
		on the line are skipped.

		Parameters:
		----------
		line: ParameterLine
		max_orbit: int - largest n + k

		Returns:
		---------
		EmpiricalMeasure

	'''
	throw_if( 'line', line )
	if max_orbit < 1:
		raise ValueError( 'max_orbit must be positive' )
	if 3 ** max_orbit > DEGREE_CAP:
		raise DegreeCapExceeded( f'orbit cap {max_orbit} exceeds the degree cap {DEGREE_CAP}',
		                         cause='pcf_on_line', method='pcf_on_line', module='equidist' )
	found: List[ complex ] = [ ]
	for i in (0, 1):
		for total in range( 1, max_orbit + 1 ):
			for k in range( 1, total + 1 ):
				roots = line_relation_roots( line, i, total - k, k )
				if roots is None:
					logger.info( 'pcf_on_line: relation (%d, %d, %d) vanishes on %s', i, total - k, k, line.name )
					continue
				found.extend( complex( z ) for z in roots )
	atoms = _dedupe( found )
	if not atoms:
		raise ValueError( f'no relation within cap {max_orbit} meets {line.name} in finitely many points' )
	logger.debug( 'pcf_on_line: %s cap %d gives %d atoms', line.name, max_orbit, len( atoms ) )
	return EmpiricalMeasure( tuple( atoms ), line=line.name, cap=max_orbit )


# ------------------------------------------------------------------------------------------
# bifurcation density
# ------------------------------------------------------------------------------------------

@dataclass( frozen=True )
class DensityGrid( ):
	'''

		Purpose:
		--------
		Discrete bifurcation density on a window: values are clipped Laplacian masses
		normalized to 1, raw is the unnormalized mass per cell, mask marks cells next to
		undecided Green values. Row 0 is the lowest imaginary part.

	'''
	window: Window
	resolution: int
	values: np.ndarray
	raw: np.ndarray
	mask: np.ndarray
	mass: float
	line: Optional[ str ]=None

	@property
	def spacing( self ) -> Tuple[ float, float ]:
		return self.window.width / self.resolution, self.window.height / self.resolution


	@property
	def masked_fraction( self ) -> float:
		return float( self.mask.mean( ) ) if self.mask.size else 0.0


	def cell_centers( self ) -> np.ndarray:
		hx, hy = self.spacing
		re = self.window.re_min + ( np.arange( self.resolution ) + 0.5 ) * hx
		im = self.window.im_min + ( np.arange( self.resolution ) + 0.5 ) * hy
		return re[ np.newaxis, : ] + 1j * im[ :, np.newaxis ]


	def display_values( self ) -> np.ndarray:
		out = self.values.astype( float ).copy( )
		out[ self.mask ] = np.nan
		return out


	def to_frame( self ) -> pd.DataFrame:
		centers = self.cell_centers( )
		return pd.DataFrame( { 're': centers.real.ravel( ), 'im': centers.imag.ravel( ),
		                       'density': self.values.ravel( ), 'raw': self.raw.ravel( ),
		                       'masked': self.mask.ravel( ).astype( int ) } )


	def to_json( self ) -> Dict[ str, object ]:
		return { 'line': self.line, 'window': self.window.to_json( ), 'resolution': self.resolution,
		         'mass': repr( self.mass ), 'masked_fraction': repr( self.masked_fraction ) }


def density_from_values( values: np.ndarray, mask: Optional[ np.ndarray ]=None,
                         spacing: Tuple[ float, float ]=(1.0, 1.0) ) -> Tuple[ np.ndarray, np.ndarray, np.ndarray ]:
	'''

		Purpose:
		--------
		Five-point Laplacian mass of a padded grid of escape rates. values has one ring of
		padding around the cells; mask flags undecided entries of the same shape. A cell is
		masked when it or one of its four neighbours is undecided.

		Returns:
		---------
		(normalized, raw, cell mask), each of the unpadded shape

	'''
	g = np.asarray( values, dtype=float )
	if g.ndim != 2 or min( g.shape ) < 3:
		raise ValueError( 'values need one ring of padding around at least one cell' )
	bad = np.zeros( g.shape, dtype=bool ) if mask is None else np.asarray( mask, dtype=bool )
	hx, hy = spacing
	center = g[ 1:-1, 1:-1 ]
	lap = ( ( g[ 1:-1, 2: ] + g[ 1:-1, :-2 ] - 2.0 * center ) / ( hx * hx )
	        + ( g[ 2:, 1:-1 ] + g[ :-2, 1:-1 ] - 2.0 * center ) / ( hy * hy ) )
	raw = lap * hx * hy / TWO_PI
	cell_mask = ( bad[ 1:-1, 1:-1 ] | bad[ 1:-1, 2: ] | bad[ 1:-1, :-2 ]
	              | bad[ 2:, 1:-1 ] | bad[ :-2, 1:-1 ] )
	clipped = np.where( cell_mask, 0.0, np.clip( raw, 0.0, None ) )
	total = clipped.sum( )
	normalized = clipped / total if total > 0 else clipped
	return normalized, raw, cell_mask


def _escape_rows( line: ParameterLine, s: np.ndarray, critical: str, tol: float,
                  cap: int ) -> Tuple[ np.ndarray, np.ndarray ]:
	c, a = line.point( s )
	if critical == 'g0':
		return green_grid( c, a, 0j, tol, cap )
	if critical == 'g1':
		return green_grid( c, a, c, tol, cap )
	g0, u0 = green_grid( c, a, 0j, tol, cap )
	g1, u1 = green_grid( c, a, c, tol, cap )
	return np.maximum( g0, g1 ), u0 | u1


def bifurcation_density( line: ParameterLine, window: Optional[ Window ]=None, resolution: int=512,
                         critical: str='g0', threads: int=1, cap: int=ITERATION_CAP ) -> DensityGrid:
	'''

		Purpose:
		--------
		Discrete dd^c of the critical escape rate along the line. Green values are computed
		at tolerance max(1e-12, 1e-4 h^2) on a padded grid; row chunks run on a thread pool
		and are reassembled in order.

		Parameters:
		----------
		line: ParameterLine
		window: Window - defaults to line.window
		resolution: int - cells per side, at most 2048
		critical: str - 'g0' (default), 'g1' or 'max' (max(g0, g1))
		threads: int - worker count

		Returns:
		---------
		DensityGrid

	'''
	throw_if( 'line', line )
	window = window or line.window
	if resolution < 1 or resolution > MAX_RESOLUTION:
		raise ValueError( f'resolution must lie in [1, {MAX_RESOLUTION}]' )
	if critical not in CRITICAL_MODES:
		raise ValueError( f'critical must be one of {CRITICAL_MODES}' )
	hx, hy = window.width / resolution, window.height / resolution
	tol = max( TOL_FLOOR, TOL_SCALE * hx * hy )
	re = window.re_min + ( np.arange( -1, resolution + 1 ) + 0.5 ) * hx
	im = window.im_min + ( np.arange( -1, resolution + 1 ) + 0.5 ) * hy
	s = re[ np.newaxis, : ] + 1j * im[ :, np.newaxis ]
	workers = max( 1, threads )
	chunks = np.array_split( np.arange( s.shape[ 0 ] ), min( workers * 4, s.shape[ 0 ] ) )
	with ThreadPoolExecutor( max_workers=workers ) as pool:
		parts = list( pool.map( lambda rows: _escape_rows( line, s[ rows ], critical, tol, cap ), chunks ) )
	g = np.vstack( [ p[ 0 ] for p in parts ] )
	undecided = np.vstack( [ p[ 1 ] for p in parts ] )
	normalized, raw, mask = density_from_values( g, undecided, (hx, hy) )
	mass = float( np.clip( np.where( mask, 0.0, raw ), 0.0, None ).sum( ) )
	grid = DensityGrid( window, resolution, normalized, raw, mask, mass, line.name )
	if grid.masked_fraction > 0.05:
		logger.warning( 'bifurcation_density: %.1f%% of cells masked', 100 * grid.masked_fraction )
	return grid


# ------------------------------------------------------------------------------------------
# comparison
# ------------------------------------------------------------------------------------------

@dataclass( frozen=True )
class GaussianProbe( ):
	'''Tensor Gaussian exp(-((x - x0)^2 + (y - y0)^2) / (2 sigma^2)).'''
	center: complex
	sigma: float

	def __call__( self, z: np.ndarray ) -> np.ndarray:
		z = np.asarray( z, dtype=complex )
		dx, dy = z.real - self.center.real, z.imag - self.center.imag
		return np.exp( -( dx * dx ) / ( 2 * self.sigma ** 2 ) ) * np.exp( -( dy * dy ) / ( 2 * self.sigma ** 2 ) )


def probe_dictionary( window: Window ) -> List[ GaussianProbe ]:
	'''The fixed dictionary of 64: two scales, each centred on two 4x4 grids.'''
	out: List[ GaussianProbe ] = [ ]
	for divisor in SCALES:
		sigma = max( window.width, window.height ) / divisor
		for grid in (GRID_A, GRID_B):
			for fy in grid:
				for fx in grid:
					center = complex( window.re_min + fx * window.width, window.im_min + fy * window.height )
					out.append( GaussianProbe( center, sigma ) )
	return out


def compare( mu: EmpiricalMeasure, nu: DensityGrid ) -> float:
	'''

		Purpose:
		--------
		max over the test dictionary of |integral f dmu - integral f dnu|, the density
		integrated by the midpoint rule on its cells.

	'''
	throw_if( 'mu', mu )
	throw_if( 'nu', nu )
	atoms = np.asarray( mu.atoms, dtype=complex )
	weights = np.asarray( mu.weights, dtype=float )
	centers = nu.cell_centers( )
	distance = 0.0
	for f in probe_dictionary( nu.window ):
		left = float( np.dot( weights, f( atoms ) ) )
		right = float( np.sum( nu.values * f( centers ) ) )
		distance = max( distance, abs( left - right ) )
	return distance


# ------------------------------------------------------------------------------------------
# experiment report
# ------------------------------------------------------------------------------------------

class EquidistRow( BaseModel ):
	cap: int
	atoms: int
	distance: float


class EquidistReport( BaseModel ):
	'''

		Purpose:
		--------
		Distance table of one experiment run; monotone is the decreasing-distance verdict.

	'''
	line: str
	resolution: int
	critical: str
	seed: int
	mass: float
	masked_fraction: float
	rows: List[ EquidistRow ]=[ ]

	@property
	def monotone( self ) -> bool:
		return all( b.distance < a.distance for a, b in zip( self.rows, self.rows[ 1: ] ) )


	def to_json( self ) -> Dict[ str, object ]:
		return { 'line': self.line, 'resolution': self.resolution, 'critical': self.critical,
		         'seed': self.seed, 'mass': repr( self.mass ),
		         'masked_fraction': repr( self.masked_fraction ), 'monotone': self.monotone,
		         'rows': [ { 'cap': r.cap, 'atoms': r.atoms, 'distance': repr( r.distance ) }
		                   for r in self.rows ] }


def experiment( line: ParameterLine, caps: Sequence[ int ]=(2, 3, 4), window: Optional[ Window ]=None,
                resolution: int=512, critical: str='g0', threads: int=1,
                seed: int=0 ) -> Tuple[ EquidistReport, DensityGrid, List[ EmpiricalMeasure ] ]:
	'''

		Purpose:
		--------
		One density grid, one empirical measure per cap, and their distances.

		Returns:
		---------
		(EquidistReport, DensityGrid, measures)

	'''
	throw_if( 'caps', list( caps ) )
	grid = bifurcation_density( line, window, resolution, critical, threads )
	measures = [ pcf_on_line( line, cap ) for cap in caps ]
	rows = [ EquidistRow( cap=m.cap, atoms=len( m ), distance=compare( m, grid ) ) for m in measures ]
	report = EquidistReport( line=line.name, resolution=resolution, critical=critical, seed=seed,
	                         mass=grid.mass, masked_fraction=grid.masked_fraction, rows=rows )
	if not report.monotone:
		logger.warning( 'experiment: distances on %s are not decreasing', line.name )
	return report, grid, measures


# ------------------------------------------------------------------------------------------
# writers
# ------------------------------------------------------------------------------------------

def write_pgm( grid: DensityGrid, path: str, levels: int=PGM_LEVELS ) -> None:
	'''ASCII P2 dump, top row first; masked cells are written as 0.'''
	values = grid.values
	peak = float( values.max( ) ) if values.size else 0.0
	scaled = np.zeros( values.shape, dtype=int ) if peak <= 0 else np.rint( values / peak * levels ).astype( int )
	with open( path, 'w', encoding='ascii' ) as f:
		f.write( f'P2\n{grid.resolution} {grid.resolution}\n{levels}\n' )
		for row in scaled[ ::-1 ]:
			f.write( ' '.join( str( v ) for v in row ) + '\n' )


def write_png( grid: DensityGrid, path: str, cmap: str='Greys' ) -> None:
	matplotlib.image.imsave( path, grid.display_values( ), cmap=cmap, origin='lower' )


def write_csv( grid: DensityGrid, path: str ) -> None:
	grid.to_frame( ).to_csv( path, index=False, float_format=CSV_FORMAT )


def write_svg( grid: DensityGrid, path: str, atoms: Sequence[ complex ]=( ), title: str=None ) -> None:
	title = title or f'bifurcation density on {grid.line}'
	Diagram( title, grid.window, grid.display_values( ), atoms ).render_svg( path )
