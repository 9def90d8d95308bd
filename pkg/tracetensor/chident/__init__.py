from tracetensor.chident.symmetric_functions import cayley_hamilton_polynomial  # NOQA
from tracetensor.chident.symmetric_functions import newton_identity  # NOQA
from tracetensor.chident.symmetric_functions import sigma_j  # NOQA
from tracetensor.chident.symmetric_functions import sigma_j_by_group_sum  # NOQA
from tracetensor.chident.identities import CH  # NOQA
from tracetensor.chident.identities import CH_recursive  # NOQA
from tracetensor.chident.identities import F_kd  # NOQA
from tracetensor.chident.identities import F_kd_recursive  # NOQA
from tracetensor.chident.identities import IdentitySpec  # NOQA
from tracetensor.chident.identities import antisymmetrizer_element  # NOQA
from tracetensor.chident.identities import falling_lambda  # NOQA
from tracetensor.chident.identities import frakT  # NOQA
from tracetensor.chident.identities import trace_polynomial_element  # NOQA
from tracetensor.chident.identities import trace_power_ledger  # NOQA
from tracetensor.chident.identities import weak_compositions  # NOQA
