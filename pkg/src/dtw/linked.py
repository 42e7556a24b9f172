"""k-linked sets and the havens they induce.

L is k-linked when for every S with |S| < k some strongly connected
component of D - S holds more than half of L. Such an L gives
dtw(D) >= k - 1: mapping S to its majority component is a haven of order k.
"""

from dataclasses import dataclass
from functools import partial
from itertools import combinations
from math import comb
from typing import Iterable, List, Optional, Sequence, Tuple

from ..digraph.core import Digraph, VertexSet, scc_without, vertex_set
from ..models.schemas import LinkedCertificate
from ..utils.config import config
from ..utils.errors import BudgetExceededError, CertificateError, PreconditionError
from ..utils.logger import logger
from ..utils.parallel import first_hit

Shard = Tuple[int, int]


def _majority_component(D: Digraph, L: VertexSet, S: Iterable[int]) -> Optional[VertexSet]:
    members = set(L)
    for component in scc_without(D, S):
        if 2 * len(members.intersection(component)) > len(L):
            return component
    return None


def _scan_shard(D: Digraph, L: VertexSet, shard: Shard) -> Optional[VertexSet]:
    """First S of the given size and smallest member without a majority component."""
    size, first = shard
    if size == 0:
        return () if _majority_component(D, L, ()) is None else None
    for tail in combinations(range(first + 1, D.n), size - 1):
        S = (first, *tail)
        if _majority_component(D, L, S) is None:
            return S
    return None


def _check_budget(n: int, k: int) -> None:
    total = sum(comb(n, i) for i in range(min(k, n + 1)))
    if total > config.LINKED_SUBSET_BUDGET:
        raise BudgetExceededError(
            f"{total} deletion sets exceed the budget of {config.LINKED_SUBSET_BUDGET}"
        )


def find_unlinking_set(D: Digraph, L: Iterable[int], k: int, jobs: int = 1) -> Optional[VertexSet]:
    """The first S (size, then lexicographic) with |S| < k and no majority
    component of L in D - S, or None when L is k-linked."""
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    L = vertex_set(D, L)
    _check_budget(D.n, k)
    shards: List[Shard] = [(0, 0)]
    for size in range(1, min(k, D.n + 1)):
        shards.extend((size, first) for first in range(D.n - size + 1))
    failing = first_hit(partial(_scan_shard, D, L), shards, jobs)
    if failing is not None:
        logger.debug(f"L={list(L)} is not {k}-linked: S={list(failing)} leaves no majority component")
    return failing


def is_k_linked(D: Digraph, L: Iterable[int], k: int, jobs: int = 1) -> bool:
    return find_unlinking_set(D, L, k, jobs) is None


def certify_linked(D: Digraph, L: Iterable[int], k: int, jobs: int = 1) -> LinkedCertificate:
    """Run the exhaustive check and record how far it got.

    verified_upto is k when L is k-linked, otherwise the size of the first
    failing set (L is linked up to that order).
    """
    L = vertex_set(D, L)
    failing = find_unlinking_set(D, L, k, jobs)
    upto = k if failing is None else len(failing)
    return LinkedCertificate(L=list(L), k=k, verified_upto=upto)


def dtw_lower_bound(D: Digraph, cert: LinkedCertificate, jobs: int = 1) -> int:
    """k - 1 for a certificate that passes re-verification."""
    if cert.verified_upto < cert.k or not is_k_linked(D, cert.L, cert.k, jobs):
        raise CertificateError(f"L={cert.L} is not verified as {cert.k}-linked")
    return cert.k - 1


@dataclass(frozen=True)
class HavenEvaluator:
    """Lazy haven of order k: each query computes the majority component of D - S."""
    D: Digraph
    L: VertexSet
    k: int


def haven_eval(haven: HavenEvaluator, S: Iterable[int]) -> VertexSet:
    S = vertex_set(haven.D, S)
    if len(S) >= haven.k:
        raise PreconditionError(f"|S|={len(S)} is not below the haven order {haven.k}")
    component = _majority_component(haven.D, haven.L, S)
    if component is None:
        raise CertificateError(f"no majority SCC of L after deleting S={list(S)}")
    return component


def verify_haven_monotonicity(haven: HavenEvaluator,
                              chains: Sequence[Tuple[Iterable[int], Iterable[int]]]) -> bool:
    """rho(S) contains rho(S') for every supplied pair S within S'."""
    for small, large in chains:
        small, large = set(small), set(large)
        if not small <= large:
            logger.debug(f"Chain rejected: {sorted(small)} is not contained in {sorted(large)}")
            return False
        if not set(haven_eval(haven, large)) <= set(haven_eval(haven, small)):
            logger.debug(f"Haven not monotone on {sorted(small)} within {sorted(large)}")
            return False
    return True
