"""Genetic algorithm over customer permutations."""
from __future__ import annotations

import contextlib
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import TYPE_CHECKING, Callable, Iterator, Sequence

import numpy as np

import exceptions
from baseline import nearest_neighbor_order
from cost_engine import TOLERANCE, Solution, build_solution, evaluate, fitness
from instance import build_distance_matrix
from metric import Metric
from operators.crossover import crossover
from operators.mutation import mutate
from operators.selection import rank, tournament
from operators.split import decode, require_solvable

if TYPE_CHECKING:
    from config import GaConfig
    from instance import DistanceMatrix, Instance
    from operators.chromosome import Chromosome

logger = logging.getLogger(__name__)

Evaluator = Callable[[Sequence["Chromosome"]], list[float]]


@dataclass(frozen=True)
class SolveResult:
    """Best solution of a GA run and how the run got there.

    'history' holds the best Z found so far, once for the initial
    population and once per generation.
    """

    best_solution: Solution
    best_fitness: float
    generations_run: int
    history: tuple[float, ...]
    best_chromosome: Chromosome


def chromosome_cost(
    chrom: Chromosome, instance: Instance, dm: DistanceMatrix,
) -> float:
    """Return Z of a decoded chromosome, or inf if it needs too many vehicles.

    Z itself is always finite, so inf only ever marks an over-fleet decode.
    """
    routes = decode(chrom, instance, dm)
    if len(routes) > instance.fleet_size_v:
        return math.inf
    return evaluate(routes, instance, dm).total_z


def random_chromosome(
    customers: np.ndarray, rng: np.random.Generator,
) -> Chromosome:
    """Return a uniform random permutation of the customer nodes."""
    return tuple(rng.permutation(customers).tolist())


def initialize_population(
    instance: Instance,
    config: GaConfig,
    rng: np.random.Generator | None = None,
    dm: DistanceMatrix | None = None,
) -> list[Chromosome]:
    """Return the first generation.

    The first chromosome is the nearest-neighbor visiting order, the rest
    are uniform random permutations drawn from the seeded generator.
    """
    if rng is None:
        rng = np.random.default_rng(config.seed)
    if dm is None:
        dm = build_distance_matrix(instance)
    customers = np.fromiter(instance.customer_nodes, dtype=np.int64)
    population = [nearest_neighbor_order(instance, dm)]
    population.extend(
        random_chromosome(customers, rng)
        for _ in range(config.population_size - 1)
    )
    return population


def replace_duplicates(
    children: Sequence[Chromosome],
    seen: set[Chromosome],
    customers: np.ndarray,
    rng: np.random.Generator,
) -> list[Chromosome]:
    """Swap every child already in 'seen' for a fresh random permutation.

    A duplicate gets exactly one replacement draw, which may itself repeat
    once every permutation of a tiny instance has been tried. 'seen' is
    updated in place with the children returned.
    """
    fresh: list[Chromosome] = []
    for child in children:
        kept = random_chromosome(customers, rng) if child in seen else child
        seen.add(kept)
        fresh.append(kept)
    return fresh


@contextlib.contextmanager
def _evaluator(
    workers: int, instance: Instance, dm: DistanceMatrix,
) -> Iterator[Evaluator]:
    """Yield a function that costs a batch of chromosomes, in order."""
    cost = partial(chromosome_cost, instance=instance, dm=dm)
    if workers <= 1:
        yield lambda chroms: [cost(c) for c in chroms]
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        def evaluate_batch(chroms: Sequence[Chromosome]) -> list[float]:
            chunk = max(1, len(chroms) // (workers * 4))
            return list(pool.map(cost, chroms, chunksize=chunk))

        yield evaluate_batch


def _breed(
    population: list[Chromosome],
    costs: list[float],
    n_children: int,
    config: GaConfig,
    rng: np.random.Generator,
) -> list[Chromosome]:
    """Select parents by tournament and produce n_children offspring."""
    children: list[Chromosome] = []
    while len(children) < n_children:
        p1 = population[tournament(costs, config.tournament_size, rng)]
        p2 = population[tournament(costs, config.tournament_size, rng)]
        if rng.random() < config.crossover_rate:
            c1, c2 = crossover(p1, p2, rng)
        else:
            c1, c2 = p1, p2
        children.append(mutate(c1, config.mutation_rate, rng))
        children.append(mutate(c2, config.mutation_rate, rng))
    return children[:n_children]


def solve(
    instance: Instance,
    config: GaConfig,
    metric: Metric = Metric.EUCLIDEAN,
) -> SolveResult:
    """Run the GA on a single-merchant instance and return the best solution.

    Children that repeat a chromosome already evaluated in this run are
    swapped for random permutations. Halfway to the stall limit the whole
    non-elite population is replaced by random immigrants. The run stops
    after max_generations, or earlier once the best Z has not improved for
    stall_generations generations.
    """
    require_solvable(instance)
    config.check()
    dm = build_distance_matrix(instance, metric)
    rng = np.random.default_rng(config.seed)
    customers = np.fromiter(instance.customer_nodes, dtype=np.int64)

    population = initialize_population(instance, config, rng, dm)
    seen = set(population)
    with _evaluator(config.workers, instance, dm) as evaluate_all:
        costs = evaluate_all(population)
        best_index = rank(costs)[0]
        best_cost, best_chrom = costs[best_index], population[best_index]
        history = [best_cost]
        logger.debug("initial best Z %.6f", best_cost)

        generation = 0
        stall = 0
        while (generation < config.max_generations
               and stall < config.stall_generations):
            elite = rank(costs)[:config.elitism_count]
            n_children = config.population_size - len(elite)
            if stall and stall == config.stall_generations // 2:
                logger.debug(
                    "generation %d: stalled for %d, bringing in random "
                    "immigrants", generation, stall)
                children = [
                    random_chromosome(customers, rng)
                    for _ in range(n_children)
                ]
            else:
                children = _breed(population, costs, n_children, config, rng)
            children = replace_duplicates(children, seen, customers, rng)
            population = [population[i] for i in elite] + children
            costs = [costs[i] for i in elite] + evaluate_all(children)
            generation += 1

            leader = rank(costs)[0]
            if costs[leader] < best_cost - TOLERANCE:
                best_cost, best_chrom = costs[leader], population[leader]
                stall = 0
                logger.debug(
                    "generation %d: new best Z %.6f", generation, best_cost)
            else:
                stall += 1
            history.append(best_cost)

    if not math.isfinite(best_cost):
        msg = (f"no permutation fits the orders into "
               f"{instance.fleet_size_v} vehicle(s)")
        raise exceptions.Infeasible(msg)

    solution = build_solution(decode(best_chrom, instance, dm), instance, dm)
    logger.info(
        "%s: GA stopped after %d generation(s), best Z %.3f",
        instance.name, generation, solution.cost.total_z,
    )
    return SolveResult(
        best_solution=solution,
        best_fitness=fitness(solution.cost.total_z),
        generations_run=generation,
        history=tuple(history),
        best_chromosome=best_chrom,
    )
