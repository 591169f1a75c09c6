"""Exact enumeration and partition functions for odd-order diagonally and
antidiagonally symmetric alternating sign matrices (DASASMs).

Subpackages and modules:

* ``dasasm.exact``: rationals, cyclotomic fields, Laurent polynomials, determinants
* ``dasasm.asm``: ASMs, the dihedral group action and symmetry classes
* ``dasasm.triangles``: odd DASASM triangles and six-vertex configurations
* ``dasasm.vertex_model``: weights, partition functions and local relations
* ``dasasm.det_formulas``: closed determinant formulas
* ``dasasm.sym_functions``: tableaux, Schur polynomials and product formulas
* ``dasasm.cli``: the ``dasasm`` command
"""

from .errors import DasasmError, DivisionByZero, DomainError, InputError, ResourceError

__version__ = "0.1.0"

__all__ = ["DasasmError", "DivisionByZero", "DomainError", "InputError", "ResourceError", "__version__"]
