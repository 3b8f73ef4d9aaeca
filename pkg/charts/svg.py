XML_HEADER = '<?xml version="1.0" encoding="UTF-8" standalone="no"?>'
SVG_HEADER = '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}">'
SVG_FOOTER = '</svg>'

class Svg:
    def __init__(self, width=None, height=None):
        self.width = width
        self.height = height
        self.elements = []

    def text(self, x, y, l, colour, size, align='left', decoration='None'):
        self.elements.append('<text x="{:.3f}" y="{:.3f}" text-anchor="{}" text-decoration="{}" style="fill: {}; font-size: {}px; font-family: monospace">{}</text>'.format(x, y, align, decoration, colour, size, l))

    def circle(self, x, y, d, colour):
        self.elements.append('<circle cx="{:.3f}" cy="{:.3f}" r="{}" fill="{}" />'.format(x, y, d, colour))

    def rect(self, x, y, w, h, colour, opacity=1.0):
        self.elements.append('<rect x="{:.3f}" y="{:.3f}" width="{:.3f}" height="{:.3f}" fill="{}" fill-opacity="{:.4f}" stroke="none"/>'.format(x, y, w, h, colour, opacity))

    def polyline(self, points, width, colour):
        # straight segments; density-window borders are axis-aligned
        d = ' '.join('{:.3f},{:.3f}'.format(x, y) for x, y in points)
        self.elements.append('<polyline points="{}" stroke="{}" stroke-width="{}" fill="none"/>'.format(d, colour, width))

    def to_list(self):
        if self.width is None or self.height is None:
            header = '<svg xmlns="http://www.w3.org/2000/svg" version="1.1">'
        else:
            header = SVG_HEADER.format(self.width, self.height)
        return [XML_HEADER, header] + self.elements + [SVG_FOOTER]

