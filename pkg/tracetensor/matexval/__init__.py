from tracetensor.matexval.multipoly import MultiPoly  # NOQA
from tracetensor.matexval.polymatrix import PolyMatrix  # NOQA
from tracetensor.matexval.polymatrix import concrete_matrix  # NOQA
from tracetensor.matexval.polymatrix import generic_matrix  # NOQA
from tracetensor.matexval.polymatrix import kron  # NOQA
from tracetensor.matexval.polymatrix import kron_all  # NOQA
from tracetensor.matexval.polymatrix import parse_rational  # NOQA
from tracetensor.matexval.polymatrix import partial_trace_matrix  # NOQA
from tracetensor.matexval.operators import group_algebra_operator  # NOQA
from tracetensor.matexval.operators import perm_operator  # NOQA
from tracetensor.matexval.operators import perm_targets  # NOQA
from tracetensor.matexval.evaluation import Assignment  # NOQA
from tracetensor.matexval.evaluation import UnspecializedLambdaError  # NOQA
from tracetensor.matexval.evaluation import evaluate  # NOQA
from tracetensor.matexval.evaluation import evaluate_generic  # NOQA
from tracetensor.matexval.evaluation import evaluate_trace_scalar  # NOQA
from tracetensor.matexval.evaluation import generic_assignment  # NOQA
from tracetensor.matexval.evaluation import is_identity  # NOQA
from tracetensor.matexval.evaluation import is_identity_multilinear  # NOQA
from tracetensor.matexval.evaluation import random_assignment  # NOQA
from tracetensor.matexval.kernel import exact_rank  # NOQA
from tracetensor.matexval.kernel import expected_kernel_dimension  # NOQA
from tracetensor.matexval.kernel import gram_matrix  # NOQA
from tracetensor.matexval.kernel import hook_length_dimension  # NOQA
from tracetensor.matexval.kernel import identity_space_dimension  # NOQA
from tracetensor.matexval.kernel import kernel_dimension  # NOQA
