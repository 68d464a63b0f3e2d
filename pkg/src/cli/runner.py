"""
Runner

Handles dispatch of a RunConfig to the computation packages and assembly of
the report document.
"""

import logging
from typing import Any, Dict, Optional

from arcring import center_bruteforce
from cabled_unlink import cabled_bruteforce, cabled_direct, stabilization_bound, with_local_unlink
from center import CONJECTURED, FLIPPED, admissible_basis, center_ranks
from colimit import NEGATIVE, POSITIVE, TruncatedSystem, cabled_khr2_framed_unknot
from core.settings import Settings, load_settings
from evaluation import RouteEvaluator

from .config import RunConfig
from .report import build_report

logger = logging.getLogger(__name__)


def _run_unlink(config: RunConfig, settings: Settings,
                evaluator: RouteEvaluator) -> Dict[str, Any]:
    components = len(config.alpha)
    direct = cabled_direct(config.N, config.alpha, config.depth)
    verdict, extra = None, {}
    if config.oracle:
        r_max = config.r_max if config.r_max is not None else stabilization_bound(config.alpha, config.q_min)
        brute = cabled_bruteforce(
            config.N, config.alpha, r_max, config.q_min,
            over_rationals=components > 1,
            allow_unstable=config.allow_unstable,
            max_nonzeros=settings.max_dim,
            progress=config.progress,
        )
        verdict = evaluator.compare_routes(direct, brute, over_rationals=components > 1,
                                           label='bruteforce')
        extra['oracle_graded_ranks'] = brute.to_records()
    group = direct
    if config.subcommand == 's2d2' and config.local_unlink:
        group = with_local_unlink(direct, config.local_unlink, config.N)
    if config.subcommand == 's2d2':
        invariant = f"S0^{config.N}(S2xD2)"
        if config.local_unlink:
            invariant += f" with local {config.local_unlink}-component unlink"
    else:
        invariant = f"S0^{config.N}(boundary sum of {components} copies of S2xD2)"
    return build_report(invariant, config.parameters(), group, True, None, verdict, **extra)


def _run_framed(config: RunConfig, settings: Settings,
                evaluator: RouteEvaluator) -> Dict[str, Any]:
    system = TruncatedSystem(config.p_sign, config.n_max, (config.j_min, config.j_max),
                             config.sign_convention)
    result = cabled_khr2_framed_unknot(system, allow_unstable=config.allow_unstable,
                                       max_nonzeros=settings.max_dim, progress=config.progress)
    verdict, extra = None, {}
    if config.oracle:
        other = FLIPPED if config.sign_convention == CONJECTURED else CONJECTURED
        flipped = cabled_khr2_framed_unknot(
            TruncatedSystem(config.p_sign, config.n_max, (config.j_min, config.j_max), other),
            allow_unstable=True, max_nonzeros=settings.max_dim,
        )
        verdict = evaluator.compare_routes(result.group, flipped.group, label=f"{other} signs")
        extra['oracle_graded_ranks'] = flipped.group.to_records()
    if config.subcommand == 'cp2':
        invariant = 'S0^2(CP2)' if config.p_sign == POSITIVE else 'S0^2(CP2bar)'
    else:
        sign = '+' if config.p_sign == POSITIVE else '-'
        invariant = f"S0^2(D(p)), p{sign}"
    return build_report(
        invariant, config.parameters(), result.group, result.all_stable,
        config.sign_convention, verdict,
        unstable_degrees=result.unstable_degrees(),
        exact_degrees=sorted((j for j, ok in result.exact.items() if ok), reverse=True),
        **extra,
    )


def _run_center(config: RunConfig, settings: Settings,
                evaluator: RouteEvaluator) -> Dict[str, Any]:
    group = center_ranks(config.n)
    listing = {
        str(2 * k): [str(a) for a in admissible_basis(config.n, k)]
        for k in range(config.n + 1)
    }
    verdict, extra = None, {}
    if config.oracle:
        brute, _ = center_bruteforce(config.n, max_n=settings.center_max_n,
                                     max_dim=settings.max_dim, progress=config.progress)
        verdict = evaluator.compare_routes(group, brute, label='bruteforce')
        extra['oracle_graded_ranks'] = brute.to_records()
    return build_report(f"Z(H^{config.n})", config.parameters(), group, True, None, verdict,
                        admissible_basis=listing, **extra)


def run(config: RunConfig, settings: Optional[Settings] = None,
        evaluator: Optional[RouteEvaluator] = None) -> Dict[str, Any]:
    """
    Execute one computation.

    Args:
        config: Validated run configuration
        settings: Resource caps (loaded from the environment when omitted)
        evaluator: Route evaluator collecting verdicts

    Returns:
        Validated report document
    """
    settings = settings or load_settings()
    evaluator = evaluator or RouteEvaluator(settings.golden_dir)
    logger.info(f"Running {config.subcommand} with {config.parameters()}")
    if config.subcommand in ('s2d2', 'unlink'):
        return _run_unlink(config, settings, evaluator)
    if config.subcommand in ('dp', 'cp2'):
        return _run_framed(config, settings, evaluator)
    return _run_center(config, settings, evaluator)
