"""Run verification campaigns by name and map their outcome to exit codes"""
import logging
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from harness.campaigns import (
    verify_an_arithmetic, verify_catalog_distinguishing, verify_distinguishing_constants,
    verify_lemma_divisor, verify_lemma_uniform, verify_main_theorem,
)
from models.campaign_models import CampaignReport, CampaignStatus, CampaignSuite
from models.config_models import ToolkitConfig
from models.graph_models import Graph

logger = logging.getLogger(__name__)

EXIT_PASSED = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INCOMPLETE = 2
EXIT_USAGE = 3

CAMPAIGNS = ["main", "divisor", "uniform", "arith", "constants", "catalog"]

Corpus = List[Tuple[str, Graph]]


def _runners(config: ToolkitConfig, workers: int, extended: bool,
             corpus: Optional[Corpus]) -> Dict[str, Callable[[], CampaignReport]]:
    return {
        "main": lambda: verify_main_theorem(corpus=corpus, config=config, workers=workers),
        "divisor": lambda: verify_lemma_divisor(config=config),
        "uniform": lambda: verify_lemma_uniform(config=config),
        "arith": lambda: verify_an_arithmetic(config=config),
        "constants": lambda: verify_distinguishing_constants(config=config),
        "catalog": lambda: verify_catalog_distinguishing(config=config, extended=extended, workers=workers),
    }


def graph6_corpus(graphs: Iterable[Graph]) -> Corpus:
    """Ids ``graph6-<line index>`` for graphs read from a file"""
    return [(f"graph6-{i:05d}", g) for i, g in enumerate(graphs)]


def run_campaign(name: str, config: Optional[ToolkitConfig] = None, workers: int = 1,
                 seed: int = 0, extended: bool = False, corpus: Optional[Corpus] = None) -> CampaignReport:
    """Run one campaign.

    ``seed`` is only logged; searches use fixed internal seeds so reports
    do not depend on it. ``corpus`` replaces the enumerated graphs of the
    main campaign.
    """
    config = config or ToolkitConfig()
    runners = _runners(config, workers, extended, corpus)
    if name not in runners:
        raise ValueError(f"Unknown campaign: {name} (choose from {', '.join(CAMPAIGNS)})")
    logger.info("Running campaign %s with %d worker(s), seed %d", name, workers, seed)
    return runners[name]()


def run_all(config: Optional[ToolkitConfig] = None, workers: int = 1, seed: int = 0,
            extended: bool = False, names: Optional[List[str]] = None,
            corpus: Optional[Corpus] = None) -> CampaignSuite:
    suite = CampaignSuite()
    for name in names or CAMPAIGNS:
        suite.campaigns.append(run_campaign(name, config, workers, seed, extended, corpus))
    return suite


def exit_code(status: CampaignStatus) -> int:
    if status == CampaignStatus.FAILED:
        return EXIT_COUNTEREXAMPLE
    if status == CampaignStatus.INCOMPLETE:
        return EXIT_INCOMPLETE
    return EXIT_PASSED
