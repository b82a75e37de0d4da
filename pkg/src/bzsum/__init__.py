"""Tensor product multiplicities of su(r+1) as nested sums over BZ triangle coordinates."""

from .four_point import (
    ChannelDecomposition,
    ConeReport,
    channel_decompose4,
    cone_su2,
    cone_su3,
    enumerate4,
    multiplicity4,
    multiplicity4_su2,
    multiplicity4_su3,
    multiplicity4_su4,
)
from .n_point import CouplingQuery, diagram_count_n, multiplicity_n
from .oracle import dim, lr_decompose, singlet_count
from .three_point import enumerate3, multiplicity3, tensor_coefficient
from .triangles import (
    BZTriangle,
    CoefficientVector3,
    CoefficientVector4,
    GluedDiagram,
    gluing_root,
    initial_diagram,
    initial_triangle,
    is_true_diagram,
    is_true_triangle,
    reconstruct_diagram,
    reconstruct_triangle,
    virtual_triangle,
)
from .weights import (
    NotInRootLattice,
    RankMismatch,
    Weight,
    conjugate,
    coupling_params,
    dual_labels,
    parse_weights,
    root_lattice_check,
)

__version__ = "0.1.0"
