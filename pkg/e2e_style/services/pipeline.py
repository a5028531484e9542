"""
Per-sample analysis shared by every batch operation.

One Toolkit (analyzer, aligner, detector) is built per configuration and
cached per process, so worker processes rebuild it once from the config JSON.
"""
import logging
from functools import lru_cache, partial
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from ..config import ToolkitConfig
from ..core.parallel import parallel_map
from ..core.text import TextAnalyzer
from ..schemas.alignment import Alignment, AlignmentReport
from ..schemas.analysis import AnalyzedUtterance
from ..schemas.corpus import Corpus
from ..schemas.mr import MeaningRepresentation
from ..schemas.style import StyleProfile
from .aligner import SlotAligner, alignment_report
from .detector import StyleDetector

logger = logging.getLogger(__name__)


class SampleAnalysis(BaseModel):
    model_config = ConfigDict(frozen=True)

    utterance: AnalyzedUtterance
    alignment: Alignment
    profile: StyleProfile


class Toolkit:
    """Analyzer, aligner and detector built from one configuration"""

    def __init__(self, config: Optional[ToolkitConfig] = None):
        self.config = config or ToolkitConfig()
        self.analyzer = TextAnalyzer(self.config.text)
        self.aligner = SlotAligner(self.config.aligner, self.analyzer)
        self.detector = StyleDetector(self.config.detector, self.analyzer, self.aligner)

    def process(self, mr: MeaningRepresentation, text: str) -> SampleAnalysis:
        utterance = self.analyzer.analyze(text)
        alignment = self.aligner.align_slots(mr, utterance)
        profile = self.detector.detect(utterance, mr, alignment)
        return SampleAnalysis(utterance=utterance, alignment=alignment, profile=profile)


@lru_cache(maxsize=8)
def toolkit_for(config_key: str) -> Toolkit:
    return Toolkit(ToolkitConfig.model_validate_json(config_key))


def _process(config_key: str, item: Tuple[MeaningRepresentation, str]) -> SampleAnalysis:
    mr, text = item
    return toolkit_for(config_key).process(mr, text)


def analyze_pairs(items: Sequence[Tuple[MeaningRepresentation, str]], config: Optional[ToolkitConfig] = None,
                  jobs: int = 1, desc: str = "analyze") -> List[SampleAnalysis]:
    config = config or ToolkitConfig()
    return parallel_map(partial(_process, config.cache_key()), items, jobs=jobs, desc=desc)


def analyze_corpus(corpus: Corpus, config: Optional[ToolkitConfig] = None, jobs: int = 1) -> List[SampleAnalysis]:
    return analyze_pairs([(s.mr, s.ref) for s in corpus.samples], config, jobs)


def profile_corpus(corpus: Corpus, config: Optional[ToolkitConfig] = None, jobs: int = 1) -> List[StyleProfile]:
    return [analysis.profile for analysis in analyze_corpus(corpus, config, jobs)]


def align_corpus(corpus: Corpus, config: Optional[ToolkitConfig] = None, jobs: int = 1) -> AlignmentReport:
    report = alignment_report([analysis.alignment for analysis in analyze_corpus(corpus, config, jobs)])
    logger.info("Aligned %d/%d slots (%.2f%%) over %d samples",
                report.aligned_slots, report.slots, 100 * report.alignment_rate, report.samples)
    return report
