import os

__version__ = '0.1.0'
CL_INSTALL_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# These imports allow a much simpler import of core cantorlab functionality.
# E.g., you can now do "from cantorlab import CantorSystem", instead of from
# "cantorlab.core.cantor_core import CantorSystem".
from cantorlab.core.cantor_core import BaseConversionMap, CantorSystem, QuadraticFamily, \
    validate_system, system_from_table, cantor_value, ratio
from cantorlab.core.extrema import ExtremaResult, compute_extrema, brute_force_extrema, \
    quadratic_extrema
from cantorlab.core.limit_function import FractionalExpansion, lambda_value, density_d
from cantorlab.core.mellin import hurwitz_zeta, s_exact, s_formula
