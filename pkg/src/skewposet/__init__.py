"""Skew diagram poset, Littlewood-Richardson decomposition and bound verification."""
from .diagrams import (
    Partition,
    SkewClass,
    SkewDiagram,
    bar_complement,
    conjugate,
    count_syt,
    decay,
    delta_value,
    distinct_parts,
    intersect,
    part_sum,
    part_union,
    paths,
    rotate,
    skew,
    skew_sum,
    skew_union,
    staircase,
    staircase_class,
    to_basic,
)
from .lrrule import SkewCharacter, cc_type, count_syt_skew, decompose, lr_coefficient, one_box_pairs, outer_product
from .poset import CoverMove, WitnessChain, down_covers, is_geq, rank, reduce_step, reduce_to_staircase, up_covers, verify_chain

__version__ = "0.1.0"
