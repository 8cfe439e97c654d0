import os

ENV_VAR = "PAIRDOM_DEBUG_CHECKS"


def enabled(flag=None) -> bool:
    """Explicit flag wins; otherwise PAIRDOM_DEBUG_CHECKS=1 turns checks on."""
    if flag is not None:
        return bool(flag)
    return os.environ.get(ENV_VAR, "") == "1"
