"""Abduction in abstract argumentation with dialogical proof search,
instantiated from abductive logic programs under partial stable models."""
from .af import (ArgumentationFramework, Mode, accepts, admissible_containing, complete_extensions,
                 conflict_free, defended_set, grounded_extension, supports)
from .aaf import (AbductiveAF, UnionSignature, all_explanations, explains, filter_by_args,
                  filter_by_attack, union_signature)
from .dialogue import (Dialogue, ExplanationWitness, OppAttack, OppOk, ProDefence, ProNegation,
                       ProWin, explained_by, info_state, info_states, search_credulous, search_skeptical,
                       validate_credulous, validate_skeptical)
from .lp import (Interpretation, LogicProgram, Rule, Truth, TransformedRule, gamma, gl_transform,
                 is_consequence, least_model, partial_stable_models)
from .instantiation import Argument, InstantiatedAF, generate_arguments, generate_attacks, instantiate
from .alp import (AbductiveLogicProgram, Hypothesis, Route, apply, build_aaf, explain_query,
                  explains_query, hypotheses, observation)

__version__ = "0.1.0"
