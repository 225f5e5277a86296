"""Exact computations with central extensions of anticommutative algebras."""

from .algebra import Algebra, InvariantSignature, find_isomorphism, invariant_signature, is_homomorphism
from .catalog import A1, A2, A3, CatalogEntry, catalog_entry, theorem1_catalog
from .classify import classify_extensions_over_gfp, gate_check, verify_theorem1
from .cohomology import (CohomologySpace, SkewForm, class_reduce, coboundary_space, cocycle_space_dim,
                         delta_of_functional, h2, tortkara_cocycle_space)
from .extension import ExtensionSpec, central_extension, has_annihilator_component, in_T_s, radical, shift_isomorphism
from .fileformat import parse_algebra, parse_cocycle, render_algebra
from .linalg import Subspace, enumerate_subspaces, gaussian_binomial, kernel, rref, span_equal
from .normalization import verify_normalization_maps
from .reports import render_report
from .scalars import GF, QQ, Field, Scalar
from .symmetry import act_on_form, act_on_grassmann_point, automorphisms, is_automorphism, orbit_partition

__version__ = "0.1.0"
