import json
from collections import Counter

import pytest

import copnc


def normal(g, part):
    """Every edge once; every vertex internal once and an end once."""
    used = Counter(e for t in part.trails for e in t.edges)
    if sorted(used) != list(range(g.edge_count)) or max(used.values()) != 1:
        return False
    internal, ends = Counter(), Counter()
    for t in part.trails:
        internal.update(t.vertices[1:-1])
        ends.update([t.vertices[0], t.vertices[-1]])
    return all(internal[v] == 1 and ends[v] == 1 for v in range(g.n))


def odd(part):
    return all(len(t) % 2 == 1 for t in part.trails)


def compatible(a, b):
    return all(a.marked_edge(v) != b.marked_edge(v) for v in range(len(a.matching()) * 2))


def test_generators():
    assert copnc.generate("petersen").n == 10
    assert copnc.generate("flower", 5).n == 20
    assert copnc.chromatic_index(copnc.generate("goldberg", 3)) == 4
    g = copnc.generate("cube")
    assert copnc.parse_graph6(g.graph6()) == g


def test_bad_parameter_carries_kind():
    with pytest.raises(copnc.Error) as info:
        copnc.generate("flower", 4)
    assert info.value.kind == "BadParameter"


@pytest.mark.parametrize("name", ["k4", "k33", "cube", "prism", "petersen"])
def test_matching_partition(name):
    g = copnc.generate(name)
    for m in copnc.perfect_matchings(g):
        p = copnc.from_matching(g, m)
        assert normal(g, p) and odd(p)
        assert sorted(p.matching()) == sorted(m)
        assert all(len(t) == 3 for t in p.trails)


def test_conformal_triple():
    g = copnc.generate("cube")
    t = copnc.conformal_triple(g, seed=4)
    assert all(normal(g, p) and odd(p) for p in t)
    assert compatible(t[0], t[1]) and compatible(t[1], t[2]) and compatible(t[0], t[2])
    with pytest.raises(copnc.Error):
        copnc.conformal_triple(copnc.generate("petersen"))


@pytest.mark.parametrize("triple", [lambda: copnc.petersen_triple(), lambda: copnc.flower_triple(5),
                                    lambda: copnc.goldberg_triple(5)])
def test_families_round_trip(triple):
    t = triple()
    n = 2 * len(t[0].matching())
    g = {10: copnc.generate("petersen"), 20: copnc.generate("flower", 5), 40: copnc.generate("goldberg", 5)}[n]
    text = copnc.certificate_json(g, t)
    assert json.loads(text)["schema"] == "copnc/1"
    ok, report = copnc.check_certificate(text, g)
    assert ok, report
    assert all(normal(g, p) and odd(p) for p in t)


def test_search_and_validate():
    g = copnc.generate("k4")
    t = copnc.find_triple(g)
    assert t is not None and all(odd(p) for p in t)
    assert copnc.find_triple(g, max_length=3) is None
    broken = [copnc.Trail(x.vertices, x.edges) for x in t[0].trails][1:]
    assert copnc.validate(g, broken)


def test_switch_class():
    g = copnc.generate("theta")
    p = copnc.from_matching(g, [0])
    members, diameter = copnc.switch_class(g, p, moves="conformal", matching=[0])
    assert len(members) == 1 and diameter == 0
