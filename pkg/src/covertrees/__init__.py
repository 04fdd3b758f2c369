"""Exact spanning-tree counts for graphs and their (Z/2Z)^m covers."""

from .covers import (Character, VoltageGraph, cube_voltage_graph, derived_graph,
                     enumerate_characters, intermediate_double_cover,
                     kappa_via_characters, l_special_value, twisted_laplacian)
from .errors import (ConsistencyError, CoverTreesError, DimensionError,
                     InvalidParameterError, ParseError, PreconditionError,
                     SizeLimitError)
from .exact_linalg import IntMatrix, determinant, first_cofactor
from .identities import (VerificationReport, census, verify_cube,
                         verify_divisibility, verify_eq1)
from .multigraph import (Multigraph, b_graph, hypercube, is_connected, laplacian,
                         parse_edge_list, serialize_edge_list, theta)
from .spanning import (divides, kappa, kappa_b, kappa_bruteforce,
                       kappa_cube_closed, kappa_theta)

__version__ = "0.1.0"
