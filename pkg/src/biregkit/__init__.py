"""Bigraded regularity toolkit: bigeneric initial ideals, Betti tables and regularity of powers."""

from .errors import *
from .ring import Direction, Field, RingSignature
