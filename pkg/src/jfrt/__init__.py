"""Joint time-vertex fractional Fourier analysis.

The joint transform of an ``N x T`` signal ``X`` on a graph with ``N``
vertices is ``F_G^beta X (F^alpha)^T``: a fractional graph Fourier transform
along the vertices and a discrete fractional Fourier transform along time.
"""
from .denoise import (
    RegularizationParams,
    SweepResult,
    denoise_spectral,
    denoise_sweep,
    mse_percent,
    regularized_joint_fractional_laplacian,
    tikhonov_objective,
)
from .errors import JfrtError, NumericalError, ValidationError
from .frt import dfrt_basis, dfrt_matrix, dft_matrix, frt_apply_rows
from .gfrt import (
    GftOperator,
    circular_gft,
    fractional_laplacian,
    fractional_time_laplacian,
    gfrt_matrix,
    gft_from_adjacency,
    gft_from_laplacian,
)
from .graph import Graph, build_knn_graph, laplacian, ring_graph
from .joint import (
    FractionalOrderPair,
    JointFractionalLaplacian,
    jfrt_forward,
    jfrt_inverse,
    joint_fractional_laplacian,
    joint_fractional_variation,
    joint_operator,
)

__version__ = "0.1.0"
