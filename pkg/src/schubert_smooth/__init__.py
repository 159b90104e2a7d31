"""
Exact computations behind the classification of smooth and rationally smooth
Schubert varieties in twisted affine Grassmannians.

Modules:

* ``rootsys``  finite root systems, weights, (quasi-)minuscule weights
* ``mult``     weight multiplicities (Freudenthal, Kostant) and the WMF scan
* ``fold``     diagram automorphisms, fixed and echelonnage root data, group cases
* ``affine``   affine Weyl group words, Bruhat order, affine roots
* ``rational`` rational functions with linear-form denominators
* ``kumar``    Kumar's smoothness criterion for the odd unitary tower
* ``triality`` exact SO_8 matrices for the ramified triality
* ``classify`` the rational smoothness and smoothness tables
* ``cli``      command-line front end
"""

from .rootsys import RootSystem, RootSystemError, Weight, build

__version__ = "0.1.0"

__all__ = ["RootSystem", "RootSystemError", "Weight", "build", "__version__"]
