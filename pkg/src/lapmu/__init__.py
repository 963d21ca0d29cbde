"""Laplacian p-spectral radius toolkit.

mu(p) is the maximum of the Laplacian quadratic form over the unit p-sphere.
The package pairs iterative solvers for finite p > 1 with exact oracles at
p = 1 (maximum degree), p = 2 (eigenvalue), and p = infinity (4 * maxcut),
plus sweep and verification reports over the whole range.
"""

from .analysis import (
    AnalysisError,
    CheckResult,
    DEFAULT_GRID,
    SweepRow,
    VerificationReport,
    emit_csv,
    render_report,
    report_json,
    sweep,
    sweep_csv,
    upper_bound,
    verify_theorems,
)
from .graph import (
    Graph,
    GraphFormatError,
    PartitionCut,
    complement,
    complete,
    complete_bipartite,
    connected_components,
    cycle,
    degrees,
    format_edge_list,
    generate,
    max_degree,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
    path,
    random_graph,
    star,
)
from .kernels import (
    check_norm_comparison,
    holder_argmax,
    laplacian_apply,
    normalize,
    p_norm,
    quadratic_form,
    signed_power,
)
from .oracles import (
    BipartiteClosedForm,
    DEFAULT_MAXCUT_GUARD,
    DegenerateGraphWarning,
    EigenEstimate,
    GuardError,
    grid_oracle,
    has_spanning_balanced_biclique,
    lap_top_eigenpair,
    max_cut_bruteforce,
    mu_complete_bipartite,
    mu_infinity,
    mu_one,
    mu_two,
)
from .solvers import (
    AscentViolationError,
    MuEstimate,
    SolverConfig,
    kkt_residual,
    multistart,
    power_iterate,
    projected_gradient,
    threshold_cut,
)

__version__ = "0.1.0"
