"""Exact counts of linear codes over small finite fields by hull dimension."""

__version__ = "0.1.0"

from .gf_linalg import (CodeHandle, FieldSpec, GFMatrix, code_from_string, dual_code,
                        dual_distance, field_of_order, hull_dimension, is_even, is_lcd,
                        is_self_orthogonal, make_code, make_field, min_distance, rref)
from .hull_census import (HullSpectrum, condition_star, lcd_count_closed, product_count,
                          product_count_even_q, product_count_odd_q, sendrier_count, sigma,
                          spectrum)
from .qcombinatorics import IntegralityError, exact_div, gaussian_binomial, q_power
from .ratio_lab import alpha, mu, predicted_mu, verify_main_theorem

__all__ = [name for name in dir() if not name.startswith("_")]
