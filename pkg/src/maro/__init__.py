"""Multicriteria adjustable robustness on finite instances.

Library surface: instance model and JSON I/O, vector and set order
relations, nondominance primitives, three-stage efficiency checkers, the
three scalarization concepts with guarantees and bounds, objective-space
images, and a seeded verification harness.
"""

from .efficiency import (
    Kind,
    SmaroResult,
    Strictness,
    Verdict,
    Witness,
    maro_efficient,
    mro_efficient,
    smaro_set,
)
from .fixtures import FIXTURE_NAMES, fixture, fixture_meta
from .images import (
    BoundGrid,
    EpsGridImage,
    EpsImagePoint,
    WeightGrid,
    image_eps,
    image_eps_grid,
    image_pb,
    image_ws,
    image_ws_grid,
    render_svg,
    simplex_grid,
    ws_image_gaps,
)
from .instances import (
    INF,
    DEFAULT_TOL,
    Instance,
    InstanceError,
    Tolerance,
    Vec,
    dump_instance,
    load_instance,
    make_instance,
)
from .pareto import FrontSet, Orientation, ideal, inner_efficient, nondominated
from .relations import (
    SetRelFamily,
    SetRelSpec,
    VecRel,
    Weight,
    parse_relation,
    set_cmp,
    vec_cmp,
)
from .scalarize import (
    GenBound,
    Guarantee,
    Selection,
    check_eps_bound,
    check_ws_bound,
    eps_efficient_set,
    f_eps_j,
    f_lambda,
    f_pb,
    pb_efficient_set,
    pb_trivial_bounds,
    ws_efficient_set,
)
from .verify import (
    BatteryReport,
    CheckReport,
    GenConfig,
    check_lemmas_and_remarks,
    check_thm_eps_implies_ms_lower,
    check_thm_eps_switch,
    check_thm_ws_implies_ms,
    compare_concepts,
    generate,
    run_battery,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
