
import pytest
from hypothesis import given, settings

from saacbr import (
    AttackFramework, Casebase, EdgeKind, Label, ModelConfig,
    defends, grounded_extension, grounded_oracle, least_fixpoint, mine_framework, translate,
)
from saacbr.semantics import complete_extensions

from .conftest import NEW
from .generators import attack_frameworks, casebases, feature_sets


def figure_af(casebase, config):
    return translate(mine_framework(casebase, config.default_argument(), NEW, config), config)


def test_defends(casebase, aacbr, saacbr):
    af_a = figure_af(casebase, aacbr)
    af_s = figure_af(casebase, saacbr)
    assert defends(frozenset(), "C2", af_a)
    assert defends(frozenset({"C2"}), "C1", af_a)
    assert not defends(frozenset({"C2"}), "C1", af_s)


def test_figure1_grounded(casebase, aacbr, saacbr):
    ga = grounded_extension(figure_af(casebase, aacbr))
    assert ga.extension == {"N", "C2", "C4", "C1"}
    assert ga.label("C0") is Label.OUT
    gs = grounded_extension(figure_af(casebase, saacbr))
    assert gs.extension == {"N", "C2", "C4", "C0"}
    assert gs.label("C1") is Label.OUT


def test_figure1_oracle(casebase, saacbr):
    assert grounded_oracle(figure_af(casebase, saacbr)) == {"N", "C2", "C4", "C0"}


def test_mutual_attack_is_undecided():
    g = grounded_extension(AttackFramework.from_pairs("ab", [("a", "b"), ("b", "a")]))
    assert g.extension == frozenset()
    assert g.labelling == {"a": Label.UNDECIDED, "b": Label.UNDECIDED}


def test_edgeless_and_odd_cycle():
    edgeless = AttackFramework.from_pairs("abc", [])
    assert grounded_oracle(edgeless) == grounded_extension(edgeless).extension == {"a", "b", "c"}
    cycle = AttackFramework.from_pairs("abc", [("a", "b"), ("b", "c"), ("c", "a")])
    assert grounded_oracle(cycle) == frozenset()
    assert complete_extensions(cycle) == [frozenset()]
    assert grounded_extension(cycle).extension == frozenset()


def test_chain_labelling_and_rounds():
    af = AttackFramework.from_pairs("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    g = grounded_extension(af)
    assert g.extension == {"a", "c"}
    assert [g.label(x) for x in "abcd"] == [Label.IN, Label.OUT, Label.IN, Label.OUT]
    assert g.rounds == (frozenset("a"), frozenset("ac"))
    assert g.iterations == 2


def test_oracle_refuses_large_instances():
    af = AttackFramework.from_pairs([f"a{i}" for i in range(20)], [])
    with pytest.raises(ValueError, match="too many"):
        grounded_oracle(af)


def test_unknown_argument_in_attack():
    with pytest.raises(ValueError):
        AttackFramework.from_pairs("ab", [("a", "z")])


@settings(max_examples=300, deadline=None)
@given(attack_frameworks())
def test_matches_both_oracles(af):
    g = grounded_extension(af)
    assert g.extension == least_fixpoint(af) == grounded_oracle(af)


@settings(max_examples=300, deadline=None)
@given(attack_frameworks())
def test_result_invariants(af):
    g = grounded_extension(af)
    attackers = af.attackers()
    ext = g.extension
    assert {a for a, l in g.labelling.items() if l is Label.IN} == ext
    for a, l in g.labelling.items():
        assert (l is Label.OUT) == (a not in ext and bool(attackers[a] & ext))
    assert not any(s in ext and t in ext for s, t in af.attacks)
    assert all(defends(ext, a, af) for a in ext)
    for earlier, later in zip(g.rounds, g.rounds[1:]):
        assert earlier < later
    assert g.iterations <= max(1, len(af.arguments))


@settings(max_examples=200, deadline=None)
@given(attack_frameworks())
def test_isolated_argument_is_accepted(af):
    plus = AttackFramework.from_pairs(list(af.arguments) + ["fresh"], af.attacks)
    assert grounded_extension(plus).extension == grounded_extension(af).extension | {"fresh"}


@settings(max_examples=200, deadline=None)
@given(casebases(), feature_sets)
def test_new_case_in_and_irrelevant_cases_out(cb, x_new):
    config = ModelConfig(default_outcome="-")
    af = translate(mine_framework(cb, config.default_argument(), x_new, config), config)
    g = grounded_extension(af)
    assert g.label("N") is Label.IN
    for _, t in af.edges_of_kind(EdgeKind.IRRELEVANCE):
        assert g.label(t) is Label.OUT


@settings(max_examples=200, deadline=None)
@given(casebases(), feature_sets)
def test_irrelevance_attack_equals_deletion(cb, x_new):
    config = ModelConfig(default_outcome="-")
    af = translate(mine_framework(cb, config.default_argument(), x_new, config), config)
    kept = Casebase(tuple(c for c in cb if x_new.features >= c.characterisation.features))
    af_del = translate(mine_framework(kept, config.default_argument(), x_new, config), config)
    full = grounded_extension(af).extension
    assert full - {"N"} == grounded_extension(af_del).extension - {"N"}
