"""Exact toolkit for homogeneous border bases on infinite order ideals."""

from .exactmath import QQ, ExactMatrix, ParameterRing, PrimeField
from .monomial import enumerate_degree
from .multmatrix import BasisCertificate, build_matrices, check_basis, commutator, parametric_conditions
from .orderideal import OrderIdeal, gotzmann_bound, macaulay_transform
from .prebasis import Polynomial, Prebasis, reduce, reductor_criterion
from .redstruct import ReductionStructure
from .synthesis import IdealPresentation, basis_from_ideal, extend, verify_eq_identity

__version__ = "0.1.0"
