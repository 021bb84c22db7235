"""The presentation graph of a biquaternion algebra and its chain certificates."""

from .builder import ChainUnknown, ClassMismatch, build_chain
from .certificate import (CERT_VERSION, ChainCertificate, VerifyReport, check_pattern,
                          verify_chain)
from .generator import random_element, random_same_class_pair, random_vertex
from .graph import (TYPE_I, TYPE_II, MoveUndefined, RewriteError, Step, Vertex, apply_move,
                    apply_type1, apply_type2, same_vertex_rewrite)

__all__ = ["ChainUnknown", "ClassMismatch", "build_chain", "CERT_VERSION", "ChainCertificate",
           "VerifyReport", "check_pattern", "verify_chain", "random_element",
           "random_same_class_pair", "random_vertex", "TYPE_I", "TYPE_II", "MoveUndefined",
           "RewriteError", "Step", "Vertex", "apply_move", "apply_type1", "apply_type2",
           "same_vertex_rewrite"]
