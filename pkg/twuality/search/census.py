"""
Census of self-trial graphs that are neither self-dual nor self-Petrial.

Every connected ribbon graph lies in the orbit of an orientable embedded
bouquet, so the search runs over OEB classes. For each OEB H, each
stabilizer element (gamma, mu) and each alpha solving
alpha . gamma . phi_mu(alpha^-1) = (dt, ..., dt), the graph alpha.H is
self-trial via mu. One-point joins are dropped. A class is a graph together
with its dual, since the dual of a self-trial graph is self-trial and lies in
the same orbit. Candidates are deduplicated per OEB inside the workers and
merged in OEB order, so the first seed that reaches a class is kept.
"""

import multiprocessing
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from ..action import apply_gamma, apply_uniform, cycle_order_check, is_self_gamma
from ..base import CheckpointError, InvariantViolation
from ..chord import ChordDiagram, DiagramForm
from ..enumeration import oebs_up_to_iso
from ..graph import LabeledRibbonGraph
from ..group import EdgeOp, EdgePermutation, RibbonElement, SemidirectElement, all_ribbon_elements
from ..isomorphism import CanonicalCode, canonical_code
from .classify import classify, is_self_twual, twuality_witnesses
from .solver import solve_alpha
from .stabilizer import stabilizers

TRIALITY = EdgeOp.DELTA_TAU


@dataclass(frozen=True)
class Candidate:
    """A class found while processing the OEB at position oeb_index."""

    oeb_index: int
    graph: LabeledRibbonGraph
    alpha: RibbonElement


@dataclass(frozen=True)
class OebOutcome:
    index: int
    stabilizer_size: int
    candidates: Tuple[Candidate, ...]


@dataclass(frozen=True)
class CensusEntry:
    graph: LabeledRibbonGraph
    seed_oeb: ChordDiagram
    alpha: RibbonElement
    sigma: EdgePermutation


@dataclass
class CensusResult:
    n: int
    oebs: int
    entries: List[CensusEntry] = field(default_factory=list)
    stabilizer_elements: int = 0


CheckpointHook = Callable[[int, int, List[Candidate]], None]


def class_key(graph: LabeledRibbonGraph) -> CanonicalCode:
    """Canonical code shared by a graph and its dual."""
    return min(canonical_code(graph), canonical_code(apply_uniform(EdgeOp.DELTA, graph)))


def is_census_graph(graph: LabeledRibbonGraph) -> bool:
    """Neither self-dual nor self-Petrial, and not a one-point join."""
    if graph.is_one_point_join():
        return False
    return not is_self_twual(graph, EdgeOp.DELTA) and not is_self_twual(graph, EdgeOp.TAU)


def oeb_candidates(index: int, oeb: LabeledRibbonGraph) -> OebOutcome:
    target = RibbonElement.uniform(TRIALITY, oeb.n)
    stabilizer = stabilizers(oeb)
    seen = set()
    found = []
    for element in stabilizer:
        if not cycle_order_check(element.gamma, element.pi, TRIALITY):
            continue
        for alpha in solve_alpha(element.gamma, element.pi, target):
            graph = apply_gamma(alpha, oeb)
            key = class_key(graph)
            if key in seen:
                continue
            seen.add(key)
            if is_census_graph(graph):
                found.append(Candidate(index, graph, alpha))
    return OebOutcome(index, len(stabilizer), tuple(found))


def _process_oeb(task: Tuple[int, Tuple[int, ...]]) -> OebOutcome:
    index, offsets = task
    return oeb_candidates(index, ChordDiagram(DiagramForm.OFFSET, offsets).to_graph())


def _outcomes(
    tasks: List[Tuple[int, Tuple[int, ...]]], jobs: int
) -> Iterator[OebOutcome]:
    if jobs <= 1:
        yield from map(_process_oeb, tasks)
        return
    with multiprocessing.Pool(processes=jobs) as pool:
        # imap keeps OEB order so the merge stays deterministic
        yield from pool.imap(_process_oeb, tasks, chunksize=4)


def verify_entry(entry: CensusEntry) -> None:
    graph = entry.graph
    element = SemidirectElement(RibbonElement.uniform(TRIALITY, graph.n), entry.sigma)
    if not is_self_gamma(graph, element):
        raise InvariantViolation(f"{element} does not fix {graph}")
    if not is_census_graph(graph):
        raise InvariantViolation(f"{graph} is self-dual, self-Petrial or a one-point join")
    seed = entry.seed_oeb.to_graph()
    if canonical_code(apply_gamma(entry.alpha, seed)) != canonical_code(graph):
        raise InvariantViolation(f"{entry.alpha} does not carry {entry.seed_oeb} to {graph}")


class CensusRun:
    """One census over the OEB classes on n chords, resumable from an OEB index."""

    def __init__(
        self,
        n: int,
        jobs: int = 1,
        start_index: int = 0,
        seed_candidates: Sequence[Candidate] = (),
        on_checkpoint: Optional[CheckpointHook] = None,
        checkpoint_every: int = 25,
    ):
        if n < 1:
            raise ValueError(f"census needs at least one edge, got n={n}")
        self.n = n
        self.jobs = max(1, jobs)
        self.start_index = start_index
        self.on_checkpoint = on_checkpoint
        self.checkpoint_every = max(1, checkpoint_every)
        self._classes: Dict[CanonicalCode, Candidate] = {}
        self._merge(seed_candidates)

    def _merge(self, candidates: Iterable[Candidate]) -> None:
        for candidate in candidates:
            self._classes.setdefault(class_key(candidate.graph), candidate)

    def _checkpoint(self, next_index: int, total: int) -> None:
        if self.on_checkpoint is not None:
            self.on_checkpoint(next_index, total, list(self._classes.values()))

    def run(self) -> CensusResult:
        oebs = oebs_up_to_iso(self.n)
        total = len(oebs)
        if self.start_index > total:
            raise CheckpointError(f"start index {self.start_index} beyond {total} OEB classes")
        logger.info(
            f"Census n={self.n}: {total} OEB classes, starting at {self.start_index}, "
            f"{self.jobs} job(s)"
        )
        tasks = [(index, oebs[index].entries) for index in range(self.start_index, total)]
        result = CensusResult(self.n, total)
        processed = 0
        for outcome in _outcomes(tasks, self.jobs):
            self._merge(outcome.candidates)
            result.stabilizer_elements += outcome.stabilizer_size
            processed += 1
            if processed % self.checkpoint_every == 0:
                logger.info(
                    f"Census n={self.n}: {outcome.index + 1}/{total} OEBs, "
                    f"{len(self._classes)} classes so far"
                )
                self._checkpoint(outcome.index + 1, total)
        self._checkpoint(total, total)

        for candidate in self._classes.values():
            witnesses = twuality_witnesses(candidate.graph, TRIALITY)
            if not witnesses:
                raise InvariantViolation(f"{candidate.graph} has no triality witness")
            sigma = witnesses[0]
            entry = CensusEntry(candidate.graph, oebs[candidate.oeb_index], candidate.alpha, sigma)
            verify_entry(entry)
            result.entries.append(entry)
        logger.success(f"Census n={self.n}: {len(result.entries)} classes")
        return result


def census(n: int, jobs: int = 1, **options) -> List[CensusEntry]:
    return CensusRun(n, jobs=jobs, **options).run().entries


def orbit_census(n: int) -> List[LabeledRibbonGraph]:
    """Brute force over every (alpha, identity).H; slow, meant as a check for small n."""
    seen = set()
    found = []
    for diagram in oebs_up_to_iso(n):
        oeb = diagram.to_graph()
        for alpha in all_ribbon_elements(n):
            graph = apply_gamma(alpha, oeb)
            key = class_key(graph)
            if key in seen:
                continue
            seen.add(key)
            if classify(graph).is_class_three and not graph.is_one_point_join():
                found.append(graph)
    logger.info(f"Orbit census n={n}: {len(seen)} dual pairs, {len(found)} in class III")
    return found
