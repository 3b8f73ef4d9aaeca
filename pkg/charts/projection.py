# -*- coding: utf-8 -*-


class Projection:
    '''Maps points of a parameter window onto a square diagram, y axis pointing up.'''

    def __init__( self, window, diagram_size ):
        self.window = window
        self.diagram_size = diagram_size
        self.magnification = diagram_size / max( window.width, window.height )
        self.max_x = window.width * self.magnification
        self.max_y = window.height * self.magnification

    def to_xy( self, z ):
        z = complex( z )
        return ( ( z.real - self.window.re_min ) * self.magnification,
                 ( z.imag - self.window.im_min ) * self.magnification )

    def calc_re_curve( self, re, steps ):
        points = []
        im_step = self.window.height / steps
        for i in range( steps + 1 ):
            points.append( self.to_xy( complex( re, self.window.im_min + im_step * i ) ) )
        return points

    def calc_im_curve( self, im, steps ):
        points = []
        re_step = self.window.width / steps
        for i in range( steps + 1 ):
            points.append( self.to_xy( complex( self.window.re_min + re_step * i, im ) ) )
        return points

    def calc_curves( self, steps=4 ):
        # border plus the real and imaginary axes when they cross the window
        curves = [ self.calc_re_curve( self.window.re_min, steps ), self.calc_re_curve( self.window.re_max, steps ),
                   self.calc_im_curve( self.window.im_min, steps ), self.calc_im_curve( self.window.im_max, steps ) ]
        if self.window.re_min < 0 < self.window.re_max:
            curves.append( self.calc_re_curve( 0.0, steps ) )
        if self.window.im_min < 0 < self.window.im_max:
            curves.append( self.calc_im_curve( 0.0, steps ) )
        return curves
