from besse.moves import insert_trivial, shift
from besse.seifert import SeifertInvariants
from oracles import move_components, small_instances


def test_oracle_small_cases():
    cases = [
        ((2, 3),), ((1, 1), (2, 1)), ((1, 0),), ((1, 1),), (),
        ((2, 1), (2, -1)), ((1, -1), (2, 1), (2, 1)), ((2, 1), (2, 1)), ((3, 1),),
    ]
    lab = move_components(cases)
    assert lab[0] == lab[1]
    assert lab[2] == lab[4] != lab[3]
    assert lab[5] == lab[6] != lab[7]
    assert lab[8] not in (lab[0], lab[2])


def test_oracle_follows_library_shift():
    s = SeifertInvariants(0, ((3, 1), (5, 2)))
    t = shift(insert_trivial(s, 0), 1, 0, times=4)
    assert t.pairs == ((1, -4), (3, 13), (5, 2))
    lab = move_components([s.pairs, t.pairs])
    assert lab[0] == lab[1]


def test_instance_count():
    # 39 admissible pairs with a <= 5, |b| <= 5; multisets of size <= 3
    assert len(small_instances()) == 1 + 39 + 780 + 10660
