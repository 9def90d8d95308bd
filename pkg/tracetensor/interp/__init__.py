from tracetensor.interp.interpretation import InterpContext  # NOQA
from tracetensor.interp.interpretation import NotMultilinearError  # NOQA
from tracetensor.interp.interpretation import encode  # NOQA
from tracetensor.interp.interpretation import interpret  # NOQA
from tracetensor.interp.interpretation import interpret_perm  # NOQA
from tracetensor.interp.certificate import CertificateError  # NOQA
from tracetensor.interp.certificate import CertificateStep  # NOQA
from tracetensor.interp.certificate import DeductionCertificate  # NOQA
from tracetensor.interp.certificate import STEP_KINDS  # NOQA
from tracetensor.interp.certificate import apply_step  # NOQA
from tracetensor.interp.certificate import replay_certificate  # NOQA
from tracetensor.interp.certificate import verify_certificate  # NOQA
from tracetensor.interp.reduction import reduce_to_basic  # NOQA
from tracetensor.interp.reduction import sample_reduction_problem  # NOQA
