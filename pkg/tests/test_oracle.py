import random

import pytest

from packmatch.instances import WDM, WSP, gen_planted, gen_random, parse_instance
from packmatch.oracle import (
    BudgetExceeded,
    OracleBudget,
    brute_force_solve,
    check_representation,
)
from packmatch.repset import RepQuery, Triple, represent


def test_p1_picks_heaviest():
    inst = parse_instance("WSP 2 1\nS a b 3\nS b c 9\nS c d -1\n")
    sol = brute_force_solve(inst)
    assert sol.picked == (1,) and sol.total_weight == 9


def test_two_disjoint_pairs():
    inst = parse_instance("WDM 2 2\nT a x 5\nT b y 1\nT a y 3\nT b x 4\n")
    sol = brute_force_solve(inst)
    assert sol.total_weight == 7 and sol.picked == (2, 3)


def test_reject_when_no_disjoint_pair():
    inst = parse_instance("WSP 2 2\nS a b 1\nS a c 1\nS b c 1\n")
    assert brute_force_solve(inst) is None


def test_tie_breaks_lexicographically():
    inst = parse_instance("WSP 2 1\nS a b 4\nS c d 4\n")
    assert brute_force_solve(inst).picked == (0,)


def test_budget():
    inst = gen_random(0, WSP, 2, 3, 10, 30, 0, 1)
    with pytest.raises(BudgetExceeded):
        brute_force_solve(inst, OracleBudget(100))
    with pytest.raises(ValueError):
        OracleBudget(0)


@pytest.mark.parametrize("seed", range(10))
def test_planted_lower_bound(seed):
    inst, planted = gen_planted(seed, WSP, 3, 2, 9, 10, -10, 10)
    assert brute_force_solve(inst).total_weight >= planted


@pytest.mark.parametrize("seed", range(5))
def test_permutation_invariant(seed):
    inst = gen_random(seed, WDM, 3, 2, 4, 14, -20, 20)
    rows = [[inst.label(x) for x in m.elements] + [str(m.weight)] for m in inst.members]
    random.Random(seed).shuffle(rows)
    text = "WDM 3 2\n" + "".join("T " + " ".join(r) + "\n" for r in rows)
    assert brute_force_solve(parse_instance(text)).total_weight == brute_force_solve(inst).total_weight


def test_reflexive():
    fam = [Triple((0, 1), 0, 3), Triple((1, 2), 1, 5)]
    assert check_representation(3, 2, 1, fam, fam) is None


def test_empty_subfamily_fails_at_empty_blocker():
    fam = [Triple((0,), 0, 3)]
    cex = check_representation(2, 1, 1, fam, [])
    assert cex.Y == () and cex.unserved is fam[0]


def test_weight_shortfall_detected():
    heavy, light = Triple((0,), 0, 9), Triple((1,), 1, 1)
    cex = check_representation(2, 1, 1, [heavy, light], [light])
    assert cex.Y == () and cex.unserved is heavy


def test_blocker_detected():
    a, b = Triple((0,), 0, 9), Triple((1,), 1, 1)
    cex = check_representation(2, 1, 1, [a, b], [a])
    assert cex.Y == (0,) and cex.unserved is b


def test_repset_example_passes():
    fam = [Triple((0,), 0, 3), Triple((1,), 1, 2), Triple((2,), 2, 1)]
    assert check_representation(3, 1, 1, fam, represent(RepQuery(3, 1, 1), fam)) is None
