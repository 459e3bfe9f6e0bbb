from .program import (
    AtomicNode,
    CompareNode,
    ComposeNode,
    IntersectNode,
    LABEL_MODALITIES,
    MODALITY_LABELS,
    Program,
    node_from_dict,
    node_signature,
    node_to_dict,
)
from .question_types import QuestionType, default_registry, load_registry, save_registry
from .rendering import nominalize, open_domain_prefix, render_node, render_pl
from .execution import ExecutionError, ExecutionResult, execute, resolve_compare, resolve_entity_row
from .operations import (
    CandidateRejected,
    ComposedQuestion,
    atomic_question,
    compare,
    compose,
    intersect,
)
from .instantiate import DEFAULT_INSTANTIATE_CONFIG, InstantiateConfig, instantiate_templates

__all__ = [
    "AtomicNode",
    "CandidateRejected",
    "CompareNode",
    "ComposeNode",
    "ComposedQuestion",
    "DEFAULT_INSTANTIATE_CONFIG",
    "ExecutionError",
    "ExecutionResult",
    "InstantiateConfig",
    "IntersectNode",
    "LABEL_MODALITIES",
    "MODALITY_LABELS",
    "Program",
    "QuestionType",
    "atomic_question",
    "compare",
    "compose",
    "default_registry",
    "execute",
    "instantiate_templates",
    "intersect",
    "load_registry",
    "nominalize",
    "node_from_dict",
    "node_signature",
    "node_to_dict",
    "open_domain_prefix",
    "render_node",
    "render_pl",
    "resolve_compare",
    "resolve_entity_row",
    "save_registry",
]
