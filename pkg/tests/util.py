"""Shared helpers: seeded random trees and rewrite perturbations."""

from __future__ import annotations

import random

from sandcastle.rewrite import AxiomSet, apply_step, single_steps
from sandcastle.trees import And, AttackTree, Base, Or, Sand

DEFAULT_SEED = 0xA77

_OPS = (Or, And, Sand)


def random_tree(rng: random.Random, max_nodes: int, bases: tuple[str, ...]) -> AttackTree:
    """Random binary tree with at most ``max_nodes`` nodes over ``bases``."""
    if max_nodes < 3 or rng.random() < 0.3:
        return Base(rng.choice(bases))
    ctor = rng.choice(_OPS)
    left_budget = rng.randint(1, max_nodes - 2)
    left = random_tree(rng, left_budget, bases)
    right = random_tree(rng, max_nodes - 1 - left_budget, bases)
    return ctor(left, right)


def perturb(
    rng: random.Random,
    tree: AttackTree,
    steps: int,
    axioms: AxiomSet = AxiomSet.PAPER,
) -> tuple[AttackTree, int]:
    """Apply up to ``steps`` random single axiom instances; returns the
    result and how many actually applied."""
    applied = 0
    current = tree
    for _ in range(steps):
        options = list(single_steps(current, axioms))
        if not options:
            break
        step, _ = rng.choice(options)
        current = apply_step(current, step)
        applied += 1
    return current, applied


def random_tree_with_redex(
    rng: random.Random, max_nodes: int, bases: tuple[str, ...], axioms: AxiomSet
) -> AttackTree:
    """Random tree guaranteed to admit at least one rewrite step."""
    while True:
        tree = random_tree(rng, max_nodes, bases)
        if any(True for _ in single_steps(tree, axioms)):
            return tree
