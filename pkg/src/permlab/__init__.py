"""permlab: permutation distances, landscapes, mutation operators, and EAs."""

from .perms import (RandomSource, cycle_count, derive_seed, identity, inverse,
                    is_permutation, iter_permutations, next_lexicographic,
                    random_permutation, rank_of, require_permutation, unrank)
from .distances import (MEASURES, PCA_MEASURES, CapExceededError,
                        DistanceMeasure, EditCosts, ReversalDistanceTable,
                        acyclic_edge, build_reversal_table, cyclic_edge,
                        cyclic_rtype, deviation, edit_distance, exact_match,
                        get_measure, interchange, kendall_tau, lee,
                        normalized_deviation, reinsertion, reversal_edit,
                        rtype, squared_deviation)
from .stats import (CorrelationAccumulator, DistanceDataset, PcaResult,
                    build_dataset, correlation_matrix, fdc, fdc_table,
                    jacobi_eigen, pearson, streamed_correlation)
from .landscapes import (Landscape, ProblemSpec, circle_atsp, circle_tsp,
                         fdc_landscape, haystack, noisy_haystack,
                         problem_spec, random_matrix_tsp)
from .mutation import (MutationOperator, OPERATOR_NAMES, adj_swap, block_move,
                       block_swap, cycle_mutation, insertion, make_operator,
                       reversal, scramble, swap, three_opt, uniform_scramble)
from .ea import (ComparisonResult, EaConfig, RunTrace, compare,
                 default_checkpoints, fitness, run, sus_select)

__version__ = "0.1.0"
