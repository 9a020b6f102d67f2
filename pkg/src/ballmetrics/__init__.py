"""Hyperbolic-type metrics on the unit ball: the triangular ratio metric
s, the distance ratio metric j, its bounded companion j*, and the
hyperbolic metric rho, together with exact metric-circle constructions,
a circle-drawing algorithm for s, every closed-form ball-inclusion bound
between these metrics, and a numerical verification harness.
"""

from .errors import (BallMetricsError, ConvergenceError, DegenerateError,
                     DomainError, EmptyTraceError, NonpositiveArgError,
                     NotCollinearError, UnsupportedRegime)
from .geometry import PlanarPair, PointB, angle_at, as_point, reduce_to_plane
from .inclusions import (Direction, EnclosureResult, InclusionBound,
                         conjecture_bounds, conjecture_l, euclid_vs_jstar,
                         j_vs_rho, jstar_vs_euclid, jstar_vs_rho,
                         s_enclosing_ball, s_enclosure_fits, s_rho_necessary,
                         s_rho_origin, s_rho_sufficient, s_vs_euclid, s_vs_j,
                         s_vs_jstar)
from .metrics import (MetricKind, SolveOpts, SValue, j_ball, jstar_ball,
                      metric_value, rho_ball, s_ball, s_ball_many,
                      s_collinear, s_conjugate)
from .spheres import (CandidateSet, EuclideanBall, Mesh, Trace,
                      candidate_points, mesh_to_obj, revolve_3d,
                      rho_ball_euclidean, s_line_intersections,
                      s_midcircle_intersections, trace_j_circle,
                      trace_jstar_circle, trace_rho_circle, trace_s_circle,
                      trace_to_csv)
from .verify import (BallSpec, ConjectureReport, InclusionReport,
                     brute_force_s, check_inclusion, verify_conjecture,
                     verify_theorem_suite)

__version__ = "0.1.0"
