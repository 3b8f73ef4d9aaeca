class Window:

    def __init__( self, re0, re1, im0, im1 ):
        self.re_min = min( re0, re1 )
        self.re_max = max( re0, re1 )
        self.im_min = min( im0, im1 )
        self.im_max = max( im0, im1 )
        if self.re_min == self.re_max or self.im_min == self.im_max:
            raise ValueError( 'window must have positive width and height' )

    @property
    def width( self ):
        return self.re_max - self.re_min

    @property
    def height( self ):
        return self.im_max - self.im_min

    def contains( self, z ):
        z = complex( z )
        return self.re_min <= z.real <= self.re_max and self.im_min <= z.imag <= self.im_max

    def to_json( self ):
        return [ repr( self.re_min ), repr( self.re_max ), repr( self.im_min ), repr( self.im_max ) ]

    def __eq__( self, other ):
        return isinstance( other, Window ) and self.to_json( ) == other.to_json( )

    def __hash__( self ):
        return hash( tuple( self.to_json( ) ) )

    def __repr__( self ):
        return 'Window({}, {}, {}, {})'.format( self.re_min, self.re_max, self.im_min, self.im_max )


WINDOW_UNICRITICAL = Window( -1.5, 1.5, -1.5, 1.5 )
WINDOW_FIXED_ZERO = Window( -3.5, 3.5, -3.5, 3.5 )
WINDOW_DEFAULT = Window( -2, 2, -2, 2 )
