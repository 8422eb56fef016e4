"""Reference matrices used by the reproduction battery and the test suite.

Entries are written as 1-based (row, col) -> polynomial text over the
named context; everything else in the matrix is zero.
"""
from __future__ import annotations

from .matrices import RingMatrix
from .ring import RingContext
from .stringlinks import ctx_for_mode

TQ = RingContext(("t", "q"))


def _build(ctx, n, entries):
    parsed = {(i - 1, j - 1): ctx.parse(text) for (i, j), text in entries.items()}
    return RingMatrix.from_entries_dict(ctx, n, parsed)


LM9_SIGMA1_ENTRIES = {
    (1, 5): "q^2", (2, 4): "q^2*t^2", (3, 6): "q^2",
    (4, 2): "1", (4, 5): "1 - q^2*t",
    (5, 1): "t", (5, 4): "t - q^2*t",
    (6, 3): "1", (6, 6): "1 - q^2",
    (7, 8): "1", (8, 7): "t", (9, 9): "1",
}

LM9_SIGMA2_ENTRIES = {
    (1, 1): "1", (2, 3): "1", (3, 2): "t",
    (4, 7): "q^2", (5, 9): "q^2", (6, 8): "q^2*t^2",
    (7, 4): "1", (7, 7): "1 - q^2",
    (8, 6): "1", (8, 9): "1 - q^2*t",
    (9, 5): "t", (9, 8): "t - q^2*t",
}


def lm9_sigma(i):
    entries = {1: LM9_SIGMA1_ENTRIES, 2: LM9_SIGMA2_ENTRIES}[i]
    return _build(TQ, 9, entries)


EX312_SIGMA1_ENTRIES = {(2, 1): "v1", (1, 2): "u2", (3, 3): "1"}
EX312_SIGMA2INV_ENTRIES = {(1, 1): "1", (3, 2): "u2^-1", (2, 3): "v3^-1"}
EX312_PRODUCT_ENTRIES = {(2, 1): "v1", (3, 2): "u1^-1", (1, 3): "u2*v3^-1"}


def ex312_matrix(which):
    ctx = ctx_for_mode("multi", 3)
    entries = {
        "sigma1": EX312_SIGMA1_ENTRIES,
        "sigma2inv": EX312_SIGMA2INV_ENTRIES,
        "product": EX312_PRODUCT_ENTRIES,
    }[which]
    return _build(ctx, 3, entries)


def ex311_matrix():
    ctx = ctx_for_mode("multi", 2)
    return _build(ctx, 2, {(1, 1): "u2*v2", (2, 2): "u1*v1"})


SPECIALIZED_31_ENTRIES = {(1, 3): "t^-1", (2, 1): "t", (3, 2): "1"}


def specialized_31_matrix():
    ctx = RingContext(("t",))
    return _build(ctx, 3, SPECIALIZED_31_ENTRIES)
