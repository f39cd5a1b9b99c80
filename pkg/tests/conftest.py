"""Shared fixtures: the worked reference instances every test module leans on."""

from __future__ import annotations

import pytest

import posetblock as pb


@pytest.fixture
def ex45():
    """Z_7^13 with 1 <= 2 on [5], k = (2,3,4,2,2), Lee weight."""
    P = pb.build_poset(5, [(1, 2)])
    return P, pb.label_map([2, 3, 4, 2, 2]), pb.lee_weight(7)


@pytest.fixture
def ex69():
    """Z_7^8 with 1,2 <= 4 and 3 <= 5, k = (3,2,1,1,1), Lee weight, dim-1 code."""
    P = pb.build_poset(5, [(1, 4), (2, 4), (3, 5)])
    pi = pb.label_map([3, 2, 1, 1, 1])
    C = pb.linear_code(7, [[0, 0, 0, 0, 0, 0, 1, 1]])
    return P, pi, pb.lee_weight(7), C


@pytest.fixture
def ex73():
    """Z_7^10 with 1,2,3 below both 4 and 5, k_i = 2, Lee weight, dim-2 code."""
    P = pb.build_poset(5, [(i, top) for i in (1, 2, 3) for top in (4, 5)])
    pi = pb.label_map([2] * 5)
    C = pb.linear_code(
        7,
        [
            [0, 0, 0, 0, 0, 0, 1, 0, 1, 0],
            [0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
        ],
    )
    return P, pi, pb.lee_weight(7), C


def chain(n: int) -> "pb.Poset":
    return pb.build_poset(n, [(i, i + 1) for i in range(1, n)])


def antichain(n: int) -> "pb.Poset":
    return pb.build_poset(n, [])
