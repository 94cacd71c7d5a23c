from .convert import from_circuit
from .diagram import EdgeType, GraphLikeCertificate, VertexType, ZXDiagram
from .extract import ExtractionError, extract_circuit
from .io import parse_zx, write_zx
from .simplify import IterationCapError, full_reduce, to_graph_like

__all__ = [
    "EdgeType",
    "ExtractionError",
    "GraphLikeCertificate",
    "IterationCapError",
    "VertexType",
    "ZXDiagram",
    "extract_circuit",
    "from_circuit",
    "full_reduce",
    "parse_zx",
    "to_graph_like",
    "write_zx",
]
