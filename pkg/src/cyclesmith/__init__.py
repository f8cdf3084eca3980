"""Hypothesis checkers, a path-rotation engine and exhaustive verification
for a long-cycle theorem combining a Fan-type degree condition on induced
claws with a common-neighbor condition on induced modified claws."""

from .cyclefinder import FindResult, TheoremCounterexample, cycle_from_path, find_long_cycle, longest_cycle
from .graph import (
    UNREACHABLE,
    Graph,
    Graph6Error,
    GraphError,
    common_neighbors,
    degree,
    distance,
    from_edge_list,
    is_two_connected,
    parse_graph6,
    write_graph6,
)
from .hypothesis import HypothesisReport, Violation, check_bcs, check_fan, check_shi, check_thm4
from .longpath import (
    HypothesisViolation,
    RotationTrace,
    SizeCapExceeded,
    lemma2_improve,
    lemma2_step,
    longest_path,
    longest_path_ending_at,
    t_of,
)
from .motif import ClawWitness, ModifiedClawWitness, enumerate_claws, enumerate_modified_claws, is_claw_free
from .paths import Cycle, Path

__version__ = "0.1.0"
