"""Room squares, Room frames, and Kirkman frames."""

from _framekit import *  # noqa: F401,F403
from _framekit import __doc__  # noqa: F401
