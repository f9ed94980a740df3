import pytest

from derangements import atlas
from derangements.affine import affine_corpus, as_permutation_group
from derangements.perm import (
    PermGroup, Permutation, alternating_group, cyclic_group, dihedral_group, symmetric_group,
)


def small_groups():
    """Hand-picked transitive groups of small degree."""
    c6 = cyclic_group(6)
    return {
        "S3": symmetric_group(3),
        "S4": symmetric_group(4),
        "S5": symmetric_group(5),
        "A4": alternating_group(4),
        "A5": alternating_group(5),
        "D8": dihedral_group(4),
        "D10": dihedral_group(5),
        "C6": c6,
        "C4": cyclic_group(4),
        "C2xC2": PermGroup([Permutation.from_cycles(4, (0, 1), (2, 3)),
                            Permutation.from_cycles(4, (0, 2), (1, 3))], degree=4),
    }


def transitive_corpus():
    """Every transitive test group: small groups, the atlas catalog, the affine corpus."""
    out = dict(small_groups())
    for entry in atlas.catalog():
        if "large" in entry.note:
            continue
        out[entry.key] = entry.construct()
    for pair in affine_corpus():
        if pair.degree <= 125:
            out[f"affine:{pair.name}"] = as_permutation_group(pair)
    return out


@pytest.fixture(scope="session")
def corpus():
    return transitive_corpus()


@pytest.fixture(scope="session")
def m11_12():
    return atlas.m11_degree12()


@pytest.fixture(scope="session")
def table1_results():
    from derangements.registry import run_scope
    return run_scope("table1")


@pytest.fixture(scope="session")
def table4_results():
    from derangements.registry import run_scope
    return run_scope("table4")
