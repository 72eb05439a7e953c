"""Exact-arithmetic workbench for ice-quiver mutation, ordered exchange
graphs, maximal green sequences, cluster seeds with principal
coefficients, c-/g-matrix calculus and quivers with potential."""

from greenseq._kernels import IMPL_NAME as KERNEL_IMPL
from greenseq.quiver import (
    ExtMatrix,
    QuiverError,
    VertexColor,
    canonical_form,
    canonical_key,
    coframed,
    framed,
    is_isomorphic,
    mutate,
    mutate_seq,
    vertex_color,
)

__version__ = "0.1.0"
