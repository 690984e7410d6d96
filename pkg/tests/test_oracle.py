import pytest

from olp.classical import answer_sets, cn, reduct
from olp.oracle import (
    GeneratorConfig,
    UniverseTooLarge,
    check_theorems,
    chain_program,
    enumerate_subsets,
    generate_program,
    oracle_answer_sets,
    oracle_cn,
)
from olp.syntax import (
    Atom,
    Interpretation,
    Literal,
    literal_universe,
    rule,
    validate_order,
)
from .conftest import A, B, NA, interp


class TestEnumerateSubsets:
    def test_single_atom_universe(self):
        universe = frozenset({A, NA})
        assert list(enumerate_subsets(universe)) == [
            Interpretation.empty(),
            interp(A),
            interp(NA),
            Interpretation.lit(universe),
        ]

    def test_empty_universe(self):
        assert list(enumerate_subsets(frozenset())) == [Interpretation.empty()]

    def test_two_atom_count(self, ex3):
        assert len(list(enumerate_subsets(ex3.universe))) == 10

    def test_cap(self):
        universe = frozenset(
            Literal(Atom(f"x{i}"), n) for i in range(13) for n in (False, True)
        )
        with pytest.raises(UniverseTooLarge):
            list(enumerate_subsets(universe))


class TestOracleAnswerSets:
    def test_cycle(self, ex3):
        plain = ex3.strip_order()
        assert oracle_answer_sets(plain.rules, plain.universe) == frozenset(
            {interp(A), interp(B)}
        )

    def test_self_blocking_rule(self):
        rules = (rule("r1", A, nbody=[A]),)
        assert oracle_answer_sets(rules, literal_universe(rules)) == frozenset()

    def test_facts_only(self):
        rules = (rule("r1", A), rule("r2", B))
        assert oracle_answer_sets(rules, literal_universe(rules)) == frozenset(
            {interp(A, B)}
        )


class TestGenerator:
    def test_same_seed_same_program(self):
        cfg = GeneratorConfig(seed=99)
        assert generate_program(cfg) == generate_program(cfg)

    def test_zero_density_gives_empty_order(self):
        op = generate_program(GeneratorConfig(seed=4, order_density=0.0))
        assert not op.order

    def test_orders_always_validate(self):
        for seed in range(200):
            op = generate_program(GeneratorConfig(seed=seed, order_density=0.5))
            validate_order(op.order.generators, op.rules)

    def test_config_bounds(self):
        with pytest.raises(ValueError):
            GeneratorConfig(max_atoms=0)
        with pytest.raises(ValueError):
            GeneratorConfig(nbody_prob=1.5)

    def test_chain_program_shape(self):
        op = chain_program(5)
        assert len(op.rules) == 5
        assert ("r5", "r1") in op.order.pairs


class TestCheckTheorems:
    def test_two_rule_cycle_passes_everything(self, ex3):
        report = check_theorems(ex3, seed=1)
        assert report.ok, report.failures

    def test_corpus_passes_everything(self, ex4, ex5, ex7, defeasible):
        for op in (ex4, ex5, ex7, defeasible):
            report = check_theorems(op, seed=2)
            assert report.ok, (op, report.failures)

    def test_simplistic_substitution_is_detected(self, ex5):
        # The approximation property fails once the simplistic removal set
        # is substituted: its model makes b true, but the only preferred
        # answer set is {a}.
        from olp.prefwfs import preferred_wf_model
        from olp.preference import preferred_answer_sets

        model = preferred_wf_model(ex5, "simplistic")
        violations = [
            z
            for z in preferred_answer_sets(ex5)
            if not model.true_set <= z.literals
        ]
        assert violations

    def test_json_lines_are_valid(self, ex3):
        import json

        for line in check_theorems(ex3, seed=3).json_lines():
            record = json.loads(line)
            assert {"seed", "program_hash", "invariant", "status"} <= set(record)

    def test_engine_and_oracle_agree_on_generated_programs(self):
        for seed in range(150):
            op = generate_program(GeneratorConfig(seed=seed))
            assert answer_sets(op.rules, op.universe) == oracle_answer_sets(
                op.rules, op.universe
            )
            basic = reduct(op.rules, Interpretation.empty())
            assert cn(basic, op.universe) == oracle_cn(basic, op.universe)
