import codecs

from .projection import Projection
from .svg import Svg

MARGIN_X = 20
MARGIN_Y = 60
DIAGRAM_SIZE = 500

ATOM_D = 1.5
ATOM_COLOUR = '#c61616'

CELL_COLOUR = '#167ac6'
MASK_COLOUR = '#bbbbbb'

TITLE_SIZE = 16
TITLE_COLOUR = '#000'
COORDS_SIZE = 12
COORDS_COLOUR = '#000'

CURVE_WIDTH = 0.3
CURVE_COLOUR = '#000'


class Diagram:
    '''Renders a bifurcation density grid and a set of parameter atoms over one window.

    cells is a 2-D array indexed [row][col] with row 0 at the lowest imaginary part; NaN
    marks masked cells. atoms is a sequence of complex numbers.
    '''

    def __init__(self, title, window, cells=None, atoms=(), size=DIAGRAM_SIZE):
        self.title = title
        self.window = window
        self.cells = cells
        self.atoms = list(atoms)
        self.projection = Projection(window, size)
        self.curves = self.projection.calc_curves()

    def _invert_and_offset(self, x, y):
        return x + MARGIN_X, (self.projection.max_y - y) + MARGIN_Y

    def _peak(self):
        peak = 0.0
        for row in self.cells:
            for v in row:
                if v == v and v > peak:
                    peak = float(v)
        return peak

    def to_svg(self):
        svg = Svg(self.projection.max_x + 2 * MARGIN_X, self.projection.max_y + 2 * MARGIN_Y)

        # density cells first
        if self.cells is not None and len(self.cells):
            rows = len(self.cells)
            cols = len(self.cells[0])
            w = self.projection.max_x / cols
            h = self.projection.max_y / rows
            peak = self._peak()
            for r, row in enumerate(self.cells):
                for col, v in enumerate(row):
                    x, y = self._invert_and_offset(col * w, (r + 1) * h)
                    if v != v:
                        svg.rect(x, y, w, h, MASK_COLOUR)
                    elif v > 0 and peak > 0:
                        svg.rect(x, y, w, h, CELL_COLOUR, v / peak)

        # next add atoms
        for z in self.atoms:
            if self.window.contains(z):
                x, y = self._invert_and_offset(*self.projection.to_xy(z))
                svg.circle(x, y, ATOM_D, ATOM_COLOUR)

        # next add frame and axes
        for curve_points in self.curves:
            svg.polyline([self._invert_and_offset(cp[0], cp[1]) for cp in curve_points], CURVE_WIDTH, CURVE_COLOUR)

        # title
        center_x = self.projection.max_x / 2 + MARGIN_X
        svg.text(center_x, MARGIN_Y / 2, self.title, TITLE_COLOUR, TITLE_SIZE, 'middle', 'underline')

        # coords
        chart_bottom_y = self.projection.max_y + MARGIN_Y
        svg.text(center_x, chart_bottom_y + MARGIN_Y / 2, "Re: {} to {}".format(self.window.re_min, self.window.re_max), COORDS_COLOUR, COORDS_SIZE, 'middle')
        svg.text(center_x, chart_bottom_y + MARGIN_Y / 2 + COORDS_SIZE, "Im: {} to {}".format(self.window.im_min, self.window.im_max), COORDS_COLOUR, COORDS_SIZE, 'middle')
        return svg

    def render_svg(self, outfile):
        with codecs.open(outfile, 'w', 'utf-8') as f:
            f.writelines(self.to_svg().to_list())
