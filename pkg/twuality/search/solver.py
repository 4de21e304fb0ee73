"""
Solve alpha . gamma . phi_mu(alpha^-1) = gamma' for alpha.

Coordinatewise the equation reads alpha(mu^-1(j)) = gamma'(j)^-1 alpha(j) gamma(j),
so a value chosen at one point of a cycle of mu determines the whole cycle.
"""

import itertools
from typing import Dict, List, Tuple

from loguru import logger

from ..base import DegreeMismatchError
from ..group import EdgeOp, EdgePermutation, RibbonElement

_SEEDS = tuple(EdgeOp)


def _cycle_solutions(
    cycle: Tuple[int, ...], gamma: RibbonElement, gamma_prime: RibbonElement
) -> List[Dict[int, EdgeOp]]:
    """Consistent assignments on one cycle (i, mu^-1(i), mu^-2(i), ...)."""
    solutions = []
    for seed in _SEEDS:
        assignment = {}
        value = seed
        for position in cycle:
            assignment[position] = value
            value = gamma_prime.at(position).inverse() * value * gamma.at(position)
        if value is seed:
            solutions.append(assignment)
    return solutions


def solve_alpha(
    gamma: RibbonElement, mu: EdgePermutation, gamma_prime: RibbonElement
) -> List[RibbonElement]:
    n = mu.degree
    if not len(gamma) == n == len(gamma_prime):
        raise DegreeMismatchError(
            f"gamma ({len(gamma)}), mu ({n}) and gamma' ({len(gamma_prime)}) must share one degree"
        )
    per_cycle = []
    for cycle in mu.inverse().cycles(include_fixed=True):
        options = _cycle_solutions(cycle, gamma, gamma_prime)
        if not options:
            logger.debug(f"no seed closes on cycle {cycle} for {gamma} via {mu}")
            return []
        per_cycle.append(options)

    solutions = []
    for combination in itertools.product(*per_cycle):
        ops = [EdgeOp.ONE] * n
        for assignment in combination:
            for position, op in assignment.items():
                ops[position - 1] = op
        solutions.append(RibbonElement(tuple(ops)))
    solutions.sort(key=RibbonElement.sort_key)
    logger.debug(f"{len(solutions)} alpha solutions for {gamma} via {mu} -> {gamma_prime}")
    return solutions


def satisfies_alpha_equation(
    alpha: RibbonElement, gamma: RibbonElement, mu: EdgePermutation, gamma_prime: RibbonElement
) -> bool:
    return alpha * gamma * alpha.inverse().permuted(mu) == gamma_prime
