"""Non-commutative Hopf algebra of totally assigned graphs (edge-ordered multigraphs)."""

from ._kernels import BACKEND
from .algebra import (
    LinComb,
    TensorComb,
    degree,
    parse_lincomb,
    product,
    product_lin,
    render_lincomb,
    render_tensor,
    tensor,
    tensor_product_componentwise,
)
from .commutative import BareGraph, bare_antipode, bare_coproduct, bare_product, forget, project
from .errors import CapacityError, EndpointRangeError, IsolatedVertexError, TagError, TagSyntaxError
from .graph import (
    EMPTY,
    Tag,
    canonicalize,
    connected_components,
    is_isomorphic,
    make_tag,
    min_spanning_forest,
    parse_tag,
    render_tag,
)
from .hopf import antipode, contract, coproduct, counit, reduced_coproduct, subgraph

__version__ = "0.1.0"
