"""Exact toolkit for oriented chromatic polynomials of mixed graphs."""

from .graph import (GraphKind, MixedGraph, gen_complete_mixed, gen_dn,
                    gen_random_mixed, gen_star, gen_tk2, gen_tournament)
from .formats import FormatError, parse, serialize
from .poly import (IntPolynomial, Rational, divides_exactly, falling_factorial,
                   interpolate)
from .colouring import (ReductionStats, chromatic_poly, count_colourings,
                        is_oriented_colouring, oriented_chromatic_number,
                        poly_bruteforce, poly_reduction)
from .structure import (StructureReport, dipath_pairs, obstructing_pairs,
                        predict_coefficients, star_closure, triangle_count)
from .invariance import (InvarianceVerdict, chrom_invar, equivalence_witness,
                         is_2k2_free, is_cointerval, is_quasi_transitive,
                         ochrom_invar, produce_quasi_transitive_orientation)
from .roots import (RootInterval, count_real_roots, dn_closed_form,
                    isolate_real_roots, sturm_sequence, verify_negative_root)

__all__ = [name for name in dir() if not name.startswith("_")]
