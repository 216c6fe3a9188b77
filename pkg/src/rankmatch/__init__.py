"""Exact GF(p) verification of rank/matching bounds for affine spaces of
weakly symmetric and alternating matrices."""

from .errors import HypothesisViolation, ParseError, SpaceTooLarge
from .field import FieldElem, FieldMismatchError, FieldSpec
from .graph import LoopGraph, Matching, max_matching_witness, mu, nu, u_a, u_s
from .matrix import Matrix, det, pfaffian_combinatorial, pfaffian_elimination, rank

__version__ = "0.1.0"
