"""Epistemic calculi as symmetric monoidal posets.

Fusion, internal homs and sampled axiom checks for certainty factors,
possibility theory, bipolar possibility, interval probabilities and
likelihood ratios; changes of calculi; enriched hypothesis graphs and
updating on evidence.
"""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    BOTTOM,
    Calculus,
    Interval,
    Pair,
    Tolerance,
    equal,
    fuse_all,
    hom,
    hom_by_sup,
    join,
    leq,
    meet,
    tensor,
)
from .instances import (  # noqa: E402
    INSTANCE_IDS,
    get_calculus,
    make_cf,
    make_ip,
    make_lr,
    make_pt,
    make_ptb,
    make_ptmax,
)
from .axioms import (  # noqa: E402
    AxiomTable,
    Status,
    Verdict,
    axiom_table,
    check_axiom,
    check_idempotent_min,
    check_no_go,
)
from .maps import (  # noqa: E402
    CalculusMap,
    MapClassification,
    classify,
    compose,
    get_map,
    identity,
    ip_to_ptb,
    pt_to_cf,
    ptb_to_cf,
    ptb_to_ip,
)
from .enriched import (  # noqa: E402
    HypothesisGraph,
    from_priors,
    fuse_evidence_path,
    transport,
    validate_enrichment,
)
from .updating import (  # noqa: E402
    bayes_graph,
    bayes_oracle,
    cf_evidence_oracle,
    normalize,
    possibilistic_oracle,
    v_update,
)
