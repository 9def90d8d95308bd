from tracetensor.symgroup.permutation import Permutation  # NOQA
from tracetensor.symgroup.permutation import compose  # NOQA
from tracetensor.symgroup.permutation import direct_product  # NOQA
from tracetensor.symgroup.permutation import format_cycles  # NOQA
from tracetensor.symgroup.permutation import parse_cycles  # NOQA
from tracetensor.symgroup.permutation import parse_index_set  # NOQA
from tracetensor.symgroup.permutation import parse_one_line  # NOQA
from tracetensor.symgroup.permutation import permutations_of  # NOQA
from tracetensor.symgroup.permutation import sign  # NOQA
from tracetensor.symgroup.permutation import symmetric_group  # NOQA
from tracetensor.symgroup.group_algebra import GroupAlgebraElement  # NOQA
from tracetensor.symgroup.group_algebra import antisymmetrizer  # NOQA
from tracetensor.symgroup.group_algebra import symmetrizer  # NOQA
from tracetensor.symgroup.splitting import CycleSplit  # NOQA
from tracetensor.symgroup.splitting import format_split  # NOQA
from tracetensor.symgroup.splitting import in_U  # NOQA
from tracetensor.symgroup.splitting import split_cycle_left  # NOQA
from tracetensor.symgroup.splitting import split_cycles  # NOQA
