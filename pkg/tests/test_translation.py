import pytest
from hypothesis import given, settings

from saacbr import (
    Attack, BipolarFramework, Case, ConfigurationError, EdgeKind, FeatureSet, ModelConfig,
    NewCase, mine_framework, secondary_attacks, supported_attacks, translate,
)

from .conftest import NEW
from .generators import casebases, feature_sets
from .oracles import complex_attacks_bruteforce


def synthetic(nodes, attacks=(), supports=()):
    args = {n: Case(n, FeatureSet(), "+") for n in nodes}
    args["N"] = NewCase(FeatureSet())
    return BipolarFramework(
        args,
        frozenset(Attack(s, t, EdgeKind.IRRELEVANCE if s == "N" else EdgeKind.DIRECT)
                  for s, t in attacks),
        frozenset(supports), nodes[0], "N")


def test_figure1_supported_attack(casebase, saacbr):
    baf = mine_framework(casebase, saacbr.default_argument(), NEW, saacbr)
    assert supported_attacks(baf) == {("C4", "C1")}
    assert secondary_attacks(baf) == set()


def test_figure1_translation(casebase, saacbr):
    af = translate(mine_framework(casebase, saacbr.default_argument(), NEW, saacbr), saacbr)
    assert af.attacks == {("C1", "C0"), ("C3", "C1"), ("C2", "C3"), ("C4", "C1")}
    assert af.edges_of_kind(EdgeKind.SUPPORTED) == {("C4", "C1")}


def test_figure1_baseline_translation(casebase, aacbr):
    af = translate(mine_framework(casebase, aacbr.default_argument(), NEW, aacbr), aacbr)
    assert af.attacks == {("C1", "C0"), ("C3", "C1"), ("C2", "C3")}


def test_support_chain():
    baf = synthetic(["a", "b", "c", "d"], attacks=[("c", "d")], supports=[("a", "b"), ("b", "c")])
    assert supported_attacks(baf) == {("a", "d"), ("b", "d")}
    nodes = list(baf.arguments)
    expected, _ = complex_attacks_bruteforce(nodes, baf.attack_pairs(), baf.supports)
    assert supported_attacks(baf) == expected


def test_secondary_attack():
    baf = synthetic(["a", "b", "c"], attacks=[("a", "c")], supports=[("c", "b")])
    assert secondary_attacks(baf) == {("a", "b")}
    assert supported_attacks(baf) == set()


def test_new_case_never_sources_secondary_attacks():
    baf = synthetic(["a", "b", "c"], attacks=[("N", "c")], supports=[("c", "b")])
    assert secondary_attacks(baf) == set()


def test_no_supports_means_identity():
    baf = synthetic(["a", "b", "c"], attacks=[("a", "b"), ("b", "c")])
    config = ModelConfig(secondary_attacks=True)
    assert supported_attacks(baf) == secondary_attacks(baf) == set()
    assert translate(baf, config).edges == baf.attacks


def test_secondary_flag():
    baf = synthetic(["a", "b", "c"], attacks=[("a", "c")], supports=[("c", "b")])
    assert ("a", "b") not in translate(baf, ModelConfig()).attacks
    af = translate(baf, ModelConfig(secondary_attacks=True))
    assert af.edges_of_kind(EdgeKind.SECONDARY) == {("a", "b")}
    with pytest.raises(ConfigurationError):
        ModelConfig("aacbr", secondary_attacks=True)


def test_duplicate_pairs_keep_every_provenance():
    # a attacks d directly and also through a support chain a -> c -> d
    baf = synthetic(["a", "c", "d"], attacks=[("a", "d"), ("c", "d")], supports=[("a", "c")])
    af = translate(baf, ModelConfig())
    assert af.provenance()[("a", "d")] == {EdgeKind.DIRECT, EdgeKind.SUPPORTED}


def _mined(cb, x_new, secondary):
    config = ModelConfig(default_outcome="-", secondary_attacks=secondary)
    baf = mine_framework(cb, config.default_argument(), x_new, config)
    return baf, translate(baf, config)


@settings(max_examples=300, deadline=None)
@given(casebases(), feature_sets)
def test_complex_attacks_match_path_enumeration(cb, x_new):
    baf, af = _mined(cb, x_new, secondary=True)
    sup, sec = complex_attacks_bruteforce(list(baf.arguments), baf.attack_pairs(), baf.supports)
    assert af.edges_of_kind(EdgeKind.SUPPORTED) == sup
    assert af.edges_of_kind(EdgeKind.SECONDARY) == sec


@settings(max_examples=300, deadline=None)
@given(casebases(), feature_sets)
def test_complex_attack_direction_and_polarity(cb, x_new):
    baf, af = _mined(cb, x_new, secondary=True)
    arg = af.arguments
    assert baf.attacks <= af.edges
    for s, t in af.edges_of_kind(EdgeKind.SUPPORTED, EdgeKind.SECONDARY):
        assert arg[s].outcome != arg[t].outcome
        assert arg[s].characterisation.exceeds(arg[t].characterisation)


@settings(max_examples=200, deadline=None)
@given(casebases(), feature_sets)
def test_second_supported_pass_adds_nothing(cb, x_new):
    baf, af = _mined(cb, x_new, secondary=False)
    again = BipolarFramework(af.arguments, af.edges, baf.supports, baf.default_id, baf.new_id)
    assert supported_attacks(again) <= af.attacks
