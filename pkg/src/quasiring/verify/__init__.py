from .checkers import (
    Context,
    EXPECTED_FAIL_NOTES,
    GALOIS_SUITE,
    GREEN_SUITE,
    INFINITE_CLAIMS,
    REGISTRY,
    checker_ids,
    run_checker,
)
from .fuzz import CampaignResult, run_campaign
from .generator import generate_prescribed_ring
from .report import (
    BUDGET_EXCEEDED,
    FAIL,
    HYPOTHESIS_UNMET,
    PASS,
    SKIPPED_INFINITE,
    InstanceSpec,
    TheoremReport,
    random_instance,
    serialize,
)

__all__ = [
    "BUDGET_EXCEEDED",
    "CampaignResult",
    "Context",
    "EXPECTED_FAIL_NOTES",
    "FAIL",
    "GALOIS_SUITE",
    "GREEN_SUITE",
    "HYPOTHESIS_UNMET",
    "INFINITE_CLAIMS",
    "InstanceSpec",
    "PASS",
    "REGISTRY",
    "SKIPPED_INFINITE",
    "TheoremReport",
    "checker_ids",
    "generate_prescribed_ring",
    "random_instance",
    "run_campaign",
    "run_checker",
    "serialize",
]
