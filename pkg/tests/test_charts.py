import os
import tempfile
import unittest

import numpy as np

from charts import Diagram, Projection, Svg, Window
from charts.diagram import MASK_COLOUR


class TestWindow( unittest.TestCase ):

	def test_bounds_are_ordered( self ):
		window = Window( 2, -2, 1, -1 )
		self.assertEqual( ( window.re_min, window.re_max, window.im_min, window.im_max ), ( -2, 2, -1, 1 ) )
		self.assertEqual( ( window.width, window.height ), ( 4, 2 ) )


	def test_degenerate_window( self ):
		with self.assertRaises( ValueError ):
			Window( 1, 1, 0, 2 )


	def test_contains( self ):
		window = Window( -1, 1, -1, 1 )
		self.assertTrue( window.contains( 0.5 - 1j ) )
		self.assertFalse( window.contains( 2 ) )


	def test_equality_and_hash( self ):
		self.assertEqual( Window( -1, 1, -1, 1 ), Window( 1, -1, 1, -1 ) )
		self.assertEqual( len( { Window( -1, 1, -1, 1 ), Window( 1, -1, 1, -1 ) } ), 1 )
		self.assertEqual( Window( 0, 1, 0, 2 ).to_json( ), [ '0', '1', '0', '2' ] )


class TestProjection( unittest.TestCase ):

	def setUp( self ):
		self.projection = Projection( Window( -2, 2, -1, 1 ), 400 )


	def test_scale( self ):
		self.assertEqual( self.projection.magnification, 100 )
		self.assertEqual( ( self.projection.max_x, self.projection.max_y ), ( 400, 200 ) )
		self.assertEqual( self.projection.to_xy( -2 - 1j ), ( 0, 0 ) )
		self.assertEqual( self.projection.to_xy( 2 + 1j ), ( 400, 200 ) )


	def test_axes_inside_window( self ):
		curves = self.projection.calc_curves( )
		self.assertEqual( len( curves ), 6 )
		self.assertTrue( all( len( c ) == 5 for c in curves ) )
		self.assertEqual( len( Projection( Window( 0, 1, 0, 1 ), 100 ).calc_curves( ) ), 4 )


class TestSvg( unittest.TestCase ):

	def test_document( self ):
		svg = Svg( 10, 20 )
		svg.circle( 1, 2, 3, '#000' )
		lines = svg.to_list( )
		self.assertTrue( lines[ 0 ].startswith( '<?xml' ) )
		self.assertIn( 'width="10" height="20"', lines[ 1 ] )
		self.assertIn( '<circle', lines[ 2 ] )
		self.assertEqual( lines[ -1 ], '</svg>' )


	def test_unsized_document( self ):
		self.assertNotIn( 'width', Svg( ).to_list( )[ 1 ] )


class TestDiagram( unittest.TestCase ):

	def setUp( self ):
		cells = np.array( [ [ 0.5, np.nan ], [ 0.0, 1.0 ] ] )
		self.diagram = Diagram( 'density', Window( -1, 1, -1, 1 ), cells, [ 0j, 10j ] )


	def test_elements( self ):
		elements = self.diagram.to_svg( ).elements
		rects = [ e for e in elements if e.startswith( '<rect' ) ]
		self.assertEqual( len( rects ), 3 )
		self.assertEqual( sum( MASK_COLOUR in r for r in rects ), 1 )
		self.assertEqual( sum( e.startswith( '<circle' ) for e in elements ), 1 )
		self.assertEqual( sum( e.startswith( '<polyline' ) for e in elements ), 6 )


	def test_render( self ):
		with tempfile.TemporaryDirectory( ) as folder:
			path = os.path.join( folder, 'density.svg' )
			self.diagram.render_svg( path )
			with open( path, encoding='utf-8' ) as f:
				text = f.read( )
		self.assertIn( 'density', text )
		self.assertTrue( text.rstrip( ).endswith( '</svg>' ) )


if __name__ == '__main__':
	unittest.main( )
