"""Straight-line programs: words in group generators, replayed on any carrier.

A program holds numbered slots; r1..rM are preloaded with the inputs and each
statement writes one slot.  Evaluation only needs `*`, `**` and equality on
the carrier, so the same program runs on permutations and on matrices — that
is the whole point: subgroup generators recorded as words in one
representation transfer to another.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ffield import FFMatrix
from .permgroup import Perm

MAX_SLOTS = 10_000

MUL = "MUL"
INV = "INV"
POW = "POW"


@dataclass(frozen=True)
class SLProgram:
    """statements: (target, MUL, i, j) | (target, INV, i) | (target, POW, i, e).

    An empty `returns` is meaningful: it encodes the trivial subgroup (no
    generators).
    """

    n_inputs: int
    statements: tuple
    returns: tuple

    def __post_init__(self):
        if self.n_inputs < 1:
            raise ValueError("programs need at least one input")
        defined = set(range(1, self.n_inputs + 1))
        for stmt in self.statements:
            target, op = stmt[0], stmt[1]
            if not 1 <= target <= MAX_SLOTS:
                raise ValueError(f"slot r{target} outside 1..{MAX_SLOTS}")
            if op == MUL:
                _, _, i, j = stmt
                operands = (i, j)
            elif op in (INV, POW):
                operands = (stmt[2],)
            else:
                raise ValueError(f"unknown opcode {op!r}")
            for s in operands:
                if s not in defined:
                    raise ValueError(f"slot r{s} used before definition")
            defined.add(target)
        for s in self.returns:
            if s not in defined:
                raise ValueError(f"returned slot r{s} never defined")

    @classmethod
    def from_words(cls, n_inputs, words):
        """Program computing one product of inputs per word (1-based indices).

        words = [] gives the empty-return program for the trivial subgroup.
        """
        statements = []
        outs = []
        nxt = n_inputs + 1
        for w in words:
            if len(w) == 0:
                raise ValueError("empty word has no generator encoding")
            cur = w[0]
            for i in w[1:]:
                statements.append((nxt, MUL, cur, i))
                cur = nxt
                nxt += 1
            outs.append(cur)
        return cls(n_inputs, tuple(statements), tuple(outs))


def _check_carrier(inputs):
    first = inputs[0]
    if isinstance(first, FFMatrix):
        for x in inputs:
            if not isinstance(x, FFMatrix) or x.field != first.field:
                raise ValueError("carrier mismatch")
            if x.rows != x.cols or (x.rows, x.cols) != (first.rows, first.cols):
                raise ValueError("matrix dimension mismatch")
    elif isinstance(first, Perm):
        for x in inputs:
            if not isinstance(x, Perm) or x.degree != first.degree:
                raise ValueError("carrier mismatch")
    else:
        t = type(first)
        if any(type(x) is not t for x in inputs):
            raise ValueError("carrier mismatch")


def evaluate(prog: SLProgram, inputs) -> list:
    """Run the program; returns one carrier element per return slot."""
    inputs = list(inputs)
    if len(inputs) != prog.n_inputs:
        raise ValueError(f"expected {prog.n_inputs} inputs, got {len(inputs)}")
    _check_carrier(inputs)
    slots = {i + 1: x for i, x in enumerate(inputs)}
    for stmt in prog.statements:
        target, op = stmt[0], stmt[1]
        if op == MUL:
            slots[target] = slots[stmt[2]] * slots[stmt[3]]
        elif op == INV:
            slots[target] = slots[stmt[2]] ** -1
        else:
            slots[target] = slots[stmt[2]] ** stmt[3]
    return [slots[s] for s in prog.returns]
