from elastica.schemas.flow_config import FlowConfig


def clamp_tau(tau: float, cfg: FlowConfig) -> float:
    return min(max(tau, cfg.tau_min), cfg.tau_max)


def adapt_tau(tau: float, increment_inf_norm: float, cfg: FlowConfig) -> float:
    """Grow τ after small increments, shrink it after large ones."""
    if increment_inf_norm < cfg.grow_threshold:
        tau = tau * cfg.grow_factor
    elif increment_inf_norm > cfg.shrink_threshold:
        tau = tau / cfg.grow_factor
    return clamp_tau(tau, cfg)


def halve_tau(tau: float, cfg: FlowConfig) -> float:
    """Time step used to retry a rejected step"""
    return clamp_tau(0.5 * tau, cfg)
