"""Exact computations with Frobenius splittings over F_p for products of SL2."""
from .fparith import ModulusError, PrimeModulus
from .gmod import (ModuleError, ModuleMap, WeightModule, composition_factors, contract, dual_weyl, frobenius_twist,
                   is_isomorphic, line, simple, steinberg, tensor, weyl_module)
from .hyperalg import DistElement, Hyperalgebra, dist_fr, mu0, phi
from .induction import induce, phi_map, psi_map, psi_rho_map
from .modexpr import parse_module

__all__ = [
    "DistElement", "Hyperalgebra", "ModuleError", "ModuleMap", "ModulusError", "PrimeModulus", "WeightModule",
    "composition_factors", "contract", "dist_fr", "dual_weyl", "frobenius_twist", "induce", "is_isomorphic",
    "line", "mu0", "parse_module", "phi", "phi_map", "psi_map", "psi_rho_map", "simple", "steinberg", "tensor",
    "weyl_module",
]

__version__ = "0.1.0"
