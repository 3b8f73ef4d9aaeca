from .diagram import Diagram
from .projection import Projection
from .svg import Svg
from .window import Window, WINDOW_DEFAULT, WINDOW_FIXED_ZERO, WINDOW_UNICRITICAL
