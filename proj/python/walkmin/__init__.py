"""Walk enumeration over labeled graphs under minimal-multiset (MM) and
shortest-minimal-set (SMS) semantics, with a 3-CNF gadget compiler and a
verification harness."""

from walkmin._core import (  # noqa: F401
    Graph,
    Nfa,
    Regex,
    ReductionInstance,
    SatInstance,
    Walk,
    WalkminError,
    accepts,
    bag_lt,
    build_enum_instance,
    build_membership_instance,
    build_sms_instance,
    canonical_r2_walk,
    canonical_r3_walk,
    check_all,
    concat,
    delay_profile,
    edge_bag,
    enumerate_matches,
    enumerate_product_simple,
    enumerate_trail_matches,
    is_trail,
    match_set,
    mm_membership,
    mm_membership_check,
    mm_set,
    mm_set_all,
    nonempty,
    parse,
    parse_dimacs,
    random_instance,
    sat_oracle,
    set_lt,
    shortest_matches,
    shortest_set,
    sms_membership,
    sms_membership_check,
    sms_set,
    sms_set_all,
    star_height,
    to_nfa,
    trail_set,
    valuation_of,
    validate_walk,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
