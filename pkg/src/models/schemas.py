"""Pydantic models for witnesses, certificates and reports."""

import json
from fractions import Fraction
from typing import Annotated, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field
from pydantic.functional_serializers import PlainSerializer
from pydantic.functional_validators import PlainValidator

from ..utils.rationals import format_rational, parse_rational

# Exact rationals travel as "p/q" strings
Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]


class Witness(BaseModel):
    """Base for immutable witness models."""
    model_config = ConfigDict(frozen=True)


class PathFamily(Witness):
    """Pairwise vertex-disjoint trimmed U-W paths."""
    kind: Literal["paths"] = "paths"
    U: List[int]
    W: List[int]
    paths: List[List[int]] = Field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.paths)


class Separator(Witness):
    """A vertex set S and a partition (A, B) of V(D) - S with no A->B arcs."""
    kind: Literal["separator"] = "separator"
    U: List[int]
    W: List[int]
    S: List[int]
    A: List[int]
    B: List[int]


class MengerResult(Witness):
    """A maximum path family together with its minimum separator."""
    family: PathFamily
    separator: Separator


class CyclePacking(Witness):
    """Cycles through a common hub, disjoint away from the hub."""
    hub: int
    cycles: List[List[int]] = Field(default_factory=list)

    @computed_field
    @property
    def size(self) -> int:
        return len(self.cycles)


class DensityParams(Witness):
    """Parameters r, alpha, beta, gamma, delta of the density lemmas."""
    r: int = Field(ge=1)
    alpha: Rational
    beta: Rational
    gamma: Rational
    delta: Rational


class DenseStep(Witness):
    """One recursion step: the violating cut found and the side kept."""
    cut_X: List[int]
    kept: Literal["X", "Y"]


class DenseWitness(Witness):
    """Recursion transcript of the dense-subdigraph search."""
    vertices: List[int]
    steps: List[DenseStep] = Field(default_factory=list)
    verified: bool


class LemmaCheck(Witness):
    """Outcome of the degree/size lemma precondition checks."""
    part1_ok: bool
    part2_ok: Optional[bool] = None
    gamma_on_boundary: bool = False
    delta_ratio_on_boundary: bool = False


class ThresholdValue(Witness):
    """The vertex-count threshold, exact or as a certified enclosure."""
    exact: Optional[Rational] = None
    lower: Rational
    upper: Rational


class ProofReplay(Witness):
    """Quantities of the cut argument at the chosen hub."""
    separator_size: int
    a_prime: int
    b_prime: int
    s_prime: int
    x_side: Literal["A'", "A'+S'"]
    x_size: int
    y_size: int
    cut_arcs: int
    cut_threshold: Rational
    boundary_arcs: int
    boundary_forward_arcs: int
    separator_capacity: int


class TraceReport(Witness):
    """Replay of the constructive cycle-packing pipeline."""
    params: DensityParams
    mode: Literal["exact", "heuristic"]
    dense: DenseWitness
    threshold: ThresholdValue
    hub: int
    hub_rule: Literal["high_degree", "dense_best"]
    packing: CyclePacking
    bound: int
    bound_met: bool
    replay: Optional[ProofReplay] = None


class LinkedCertificate(Witness):
    """A set L certifying dtw(D) >= k - 1 once verified up to k."""
    L: List[int]
    k: int = Field(ge=1)
    verified_upto: int = Field(default=0, ge=0)

    @computed_field
    @property
    def bound(self) -> int:
        return self.k - 1


class SeparationReplay(Witness):
    """Cut quantities around an unlinking set S of the dense part L.

    D'' is D[L - S] and the hub has both degrees in D'' at least delta*r.
    The reach side is V+ (reachable from the hub in D - S), or V- when V+
    meets more than three quarters of L; X is the reach side plus S.
    leaving_arcs counts arcs from X to Y (from Y to X on the in side).
    """
    unlinking_set: List[int]
    second_stage_size: int
    second_stage_dense: bool
    hub: Optional[int] = None
    reach: Optional[Literal["out", "in"]] = None
    reach_in_L: Optional[int] = None
    x_size: Optional[int] = None
    y_size: Optional[int] = None
    cut_arcs: Optional[int] = None
    cut_threshold: Rational
    leaving_arcs: Optional[int] = None
    leaving_limit: int


class Theorem2Report(Witness):
    """Linked-set certificate pipeline for the tree-width lower bound."""
    params: DensityParams
    mode: Literal["exact", "heuristic"]
    dense: DenseWitness
    certificate: LinkedCertificate
    bound: int
    failing_set: Optional[List[int]] = None
    replay: Optional[SeparationReplay] = None


class BoundsReport(Witness):
    """Closed-form bounds for r-regular digraphs."""
    r: int
    c_lower: int
    c_upper: int
    c_upper_capped: int
    dtw_lower: int
    limit_interval: Tuple[Rational, Rational]


class WallCoords(Witness):
    """Grid coordinates (x, y) of every wall vertex, indexed by vertex id."""
    k: int
    coords: List[Tuple[int, int]]

    def vertex(self, x: int, y: int) -> int:
        return (y - 1) * 2 * self.k + (x - 1)


def dump_json(model: BaseModel) -> str:
    """Serialise with sorted keys for reproducible output."""
    return json.dumps(model.model_dump(mode="json"), sort_keys=True)
