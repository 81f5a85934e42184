"""Catalog of finite q-series identities and exact verification."""

from .entries import catalog, catalog_map, lookup
from .records import (
    DEFAULT_POOL,
    ConstraintViolated,
    IdentityRecord,
    Param,
    Side,
    UnknownIdentity,
    VerificationReport,
    parse_value,
    perturbed,
    render_binding,
    verify,
    verify_all,
    worker_count,
)

__all__ = [
    "DEFAULT_POOL",
    "ConstraintViolated",
    "IdentityRecord",
    "Param",
    "Side",
    "UnknownIdentity",
    "VerificationReport",
    "catalog",
    "catalog_map",
    "lookup",
    "parse_value",
    "perturbed",
    "render_binding",
    "verify",
    "verify_all",
    "worker_count",
]

from .checks import (  # noqa: E402
    InvalidModulus,
    check_asymptotics,
    check_congruence,
    scan_conjecture,
)

__all__ += ["InvalidModulus", "check_asymptotics", "check_congruence", "scan_conjecture"]
