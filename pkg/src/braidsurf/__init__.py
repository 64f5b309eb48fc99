"""Invariants of closed braids from counting ribbon surfaces in braid Gauss diagrams."""

from .algebra import LaurentPoly1, LaurentPoly2, derivative_a, eval_a1, unlink_homfly
from .braid import BraidWord, closure_info, conjugate, conway_triple, parse, stabilize
from .diagram import GaussDiagram, enumerate_colorings, enumerate_star_colorings, gauss_from_braid
from .invariant import D, P, P_star, A_count, f, invariant_report, is_totally_ascending
from .oracle import conway, homfly, script_p

__version__ = "0.1.0"
