from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    enumeration_bound: int = 10**6
    s_arc_budget: int = 10**7
    isomorphism_max_points: int = 40
    transitivity_probe: int = 5  # highest k tried when fingerprinting k-transitivity


DEFAULT_LIMITS = Limits()
