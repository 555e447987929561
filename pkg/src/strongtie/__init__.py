"""Strong/weak edge labeling under strong triadic closure with connected communities."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .baselines import WedgeGraph, baseline_angluin, baseline_sintos
from .connectivity import ConnectivityOracle, build as build_oracle
from .errors import (
    ContractViolation,
    InfeasibleCommunityError,
    ParseError,
    PropertyCheckError,
    SizeCapError,
    StrongTieError,
)
from .evaluation import LabelStats, PRReport, label_stats, pr_report, split_communities
from .graph import (
    CommunitySet,
    Graph,
    Labeling,
    induced_strong_components,
    load_communities,
    load_graph,
)
from .greedy import GreedyResult, approximation_certificate, greedy_max_tri, minimize_strong_post_pass
from .oracle import ExactSolution, check_matroid, check_supermodularity, exact_solve
from .reduction import Gadget, build_gadget, cover_to_labeling, labeling_to_cover
from .wedges import WedgeIndex, demote_edge, enumerate_wedges, marginal_violations, tri, viol

__version__ = "0.1.0"
