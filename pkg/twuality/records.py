"""Structured records for JSON output and census checkpoints."""

from typing import List

from pydantic import BaseModel, Field

from .chord import ChordDiagram, DiagramForm
from .graph import LabeledRibbonGraph, parse_graph, serialize_graph
from .group import parse_ops
from .isomorphism import invariants
from .search.census import Candidate, CensusEntry, CensusResult


class GraphRecord(BaseModel):
    n: int = Field(description="Number of edges")
    vertices: List[List[int]] = Field(description="Signed edge labels around each vertex")
    V: int
    E: int
    F: int
    euler: int = Field(description="Euler characteristic V - E + F")
    orientable: bool
    genus: int = Field(description="Orientable genus, or Euler genus when non-orientable")

    @classmethod
    def from_graph(cls, graph: LabeledRibbonGraph) -> "GraphRecord":
        stats = invariants(graph)
        return cls(
            n=graph.n,
            vertices=[list(v) for v in graph.vertices],
            V=stats.V,
            E=stats.E,
            F=stats.F,
            euler=stats.euler,
            orientable=stats.orientable,
            genus=stats.genus,
        )


class CensusRecord(GraphRecord):
    graph: str = Field(description="Graph in bracket notation")
    seed_oeb: str = Field(description="Seed OEB in end-label bracket notation")
    alpha: List[str] = Field(description="Edge operations carrying the seed OEB to the graph")
    sigma: str = Field(
        description="Edge permutation in cycle notation with (dt, sigma) fixing the graph"
    )

    @classmethod
    def from_entry(cls, entry: CensusEntry) -> "CensusRecord":
        base = GraphRecord.from_graph(entry.graph)
        return cls(
            **base.model_dump(),
            graph=serialize_graph(entry.graph),
            seed_oeb=str(entry.seed_oeb.convert(DiagramForm.END_LABEL)),
            alpha=[op.value for op in entry.alpha],
            sigma=str(entry.sigma),
        )


class CensusSummary(BaseModel):
    n: int
    classes: int
    oebs: int = Field(description="OEB classes searched")
    stabilizer_elements: int = Field(
        default=0, description="Stabilizer elements over the OEBs processed in this run"
    )

    @classmethod
    def from_result(cls, result: CensusResult) -> "CensusSummary":
        return cls(
            n=result.n,
            classes=len(result.entries),
            oebs=result.oebs,
            stabilizer_elements=result.stabilizer_elements,
        )


class CandidateRecord(BaseModel):
    oeb_index: int
    graph: str
    alpha: List[str]

    @classmethod
    def from_candidate(cls, candidate: Candidate) -> "CandidateRecord":
        return cls(
            oeb_index=candidate.oeb_index,
            graph=serialize_graph(candidate.graph),
            alpha=[op.value for op in candidate.alpha],
        )

    def to_candidate(self) -> Candidate:
        return Candidate(self.oeb_index, parse_graph(self.graph), parse_ops(self.alpha))


class CensusCheckpoint(BaseModel):
    n: int
    next_index: int = Field(ge=0, description="First OEB index not yet processed")
    total: int = Field(ge=0, description="Number of OEB classes on n chords")
    candidates: List[CandidateRecord] = Field(default_factory=list)

    def restore(self) -> List[Candidate]:
        return [record.to_candidate() for record in self.candidates]


def diagram_record(diagram: ChordDiagram) -> dict:
    return {"form": diagram.form.value, "entries": list(diagram.entries)}
