"""Command-line front end.

Every subcommand reads its input from flags or JSON files and writes JSON (or
a single text line) to a file or standard output. Exit status is 0 on
success, 1 when a verified object turns out not to be an identity or a
certificate does not replay, and 2 on malformed input.
"""

import argparse
import logging
import sys

import numpy as np

from tracetensor.chident.identities import CH
from tracetensor.chident.identities import CH_recursive
from tracetensor.chident.identities import F_kd
from tracetensor.interp.certificate import DeductionCertificate
from tracetensor.interp.certificate import verify_certificate
from tracetensor.interp.interpretation import InterpContext
from tracetensor.interp.interpretation import encode
from tracetensor.interp.interpretation import interpret_perm
from tracetensor.interp.reduction import reduce_to_basic
from tracetensor.matexval.evaluation import is_identity
from tracetensor.matexval.evaluation import is_identity_multilinear
from tracetensor.symgroup.permutation import parse_cycles
from tracetensor.symgroup.permutation import parse_index_set
from tracetensor.symgroup.splitting import format_split
from tracetensor.symgroup.splitting import split_cycle_left
from tracetensor.symgroup.splitting import split_cycles
from tracetensor.twisted.element import TwistedElement
from tracetensor.twisted.traces import partial_trace
from tracetensor.utils.jsonio import read_json
from tracetensor.utils.jsonio import write_json

logger = logging.getLogger(__name__)


def _read_element(path) -> TwistedElement:
    return TwistedElement.from_dict(read_json(path))


def _write(obj, args):
    write_json(obj, args.output, pretty=args.pretty)
    if args.output not in (None, "-"):
        logger.info("wrote %s", args.output)


def cmd_ch(args):
    if args.recursive or args.formal_lambda:
        element = CH_recursive(args.k, args.d, formal=args.formal_lambda)
    else:
        element = CH(args.k, args.d)
    _write(element.to_dict(), args)
    return 0


def cmd_fkd(args):
    _write(F_kd(args.k, args.d).to_dict(), args)
    return 0


def cmd_verify(args):
    element = _read_element(args.file)
    if args.multilinear:
        ok = is_identity_multilinear(element, args.d)
    else:
        rng = np.random.RandomState(args.seed)
        ok = is_identity(element, args.d, trials=args.trials, random_state=rng)
    print("identity" if ok else "not an identity")
    return 0 if ok else 1


def cmd_interpret(args):
    ctx = InterpContext(args.n, args.k)
    tau = parse_cycles(args.perm, ctx.m)
    _write(interpret_perm(tau, ctx).to_dict(), args)
    return 0


def cmd_encode(args):
    element = _read_element(args.file)
    ctx = InterpContext(element.n, max(element.variables(), default=0))
    _write(encode(element, ctx).to_dict(), args)
    return 0


def cmd_split(args):
    perm = parse_cycles(args.perm, args.m)
    A = parse_index_set(args.A)
    split = split_cycle_left(perm, A) if args.left else split_cycles(perm, A)
    print(format_split(split))
    return 0


def cmd_ptrace(args):
    element = partial_trace(_read_element(args.file))
    if args.specialize is not None:
        element = element.specialize_lambda(args.specialize)
    _write(element.to_dict(), args)
    return 0


def cmd_reduce(args):
    n = args.m // 2 if args.n is None else args.n
    if not 0 <= n <= args.m:
        raise ValueError("--n must lie in 0..{}, got {}".format(args.m, n))
    ctx = InterpContext(n, args.m - n)
    sigma = parse_cycles(args.perm, args.m)
    cert = reduce_to_basic(sigma, parse_index_set(args.C), ctx, args.d)
    _write(cert.to_dict(), args)
    return 0


def cmd_check_cert(args):
    cert = DeductionCertificate.from_dict(read_json(args.cert))
    ok = verify_certificate(cert)
    print("valid" if ok else "invalid")
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tracetensor",
        description="Tensor trace identities with exact arithmetic.")
    parser.add_argument("--log-level", type=int, default=logging.WARNING,
                        help="Level of the Python logging module (e.g. 10 for DEBUG)")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("-o", "--output", type=str, default=None,
                        help="Output file; '-' or omitted writes to stdout")
    fmt = output.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false",
                     help="Compact JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true",
                     help="Indented JSON")
    output.set_defaults(pretty=False)

    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("ch", parents=[output],
                       help="Generate the n-tensor Cayley-Hamilton element")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--formal-lambda", action="store_true",
                   help="Keep tr(1) as the formal symbol L (uses the trace recursion)")
    p.add_argument("--recursive", action="store_true",
                   help="Build through repeated partial traces of A_{d+1}")
    p.set_defaults(func=cmd_ch)

    p = sub.add_parser("fkd", parents=[output],
                       help="Generate the multilinear relation F_{k,d}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_fkd)

    p = sub.add_parser("verify", help="Check that an element vanishes on d x d matrices")
    p.add_argument("file", type=str)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--multilinear", action="store_true",
                   help="Decide through the permutation operator of the encoding")
    p.add_argument("--trials", type=int, default=2,
                   help="Random integer evaluations before the generic one")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("interpret", parents=[output],
                       help="Interpret a permutation of S_{n+k}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--perm", type=str, required=True, help="Cycle notation")
    p.set_defaults(func=cmd_interpret)

    p = sub.add_parser("encode", parents=[output],
                       help="Encode a multilinear element as a permutation element")
    p.add_argument("file", type=str)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("split", help="Split a permutation over (A, B)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--perm", type=str, required=True, help="Cycle notation")
    p.add_argument("--A", type=str, required=True, help="Comma list of indices")
    p.add_argument("--left", action="store_true",
                   help="Use the left-handed variant")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("ptrace", parents=[output],
                       help="Partial trace over the last tensor slot")
    p.add_argument("file", type=str)
    p.add_argument("--specialize", type=int, default=None, metavar="D",
                   help="Replace L by D afterwards")
    p.set_defaults(func=cmd_ptrace)

    p = sub.add_parser("reduce", parents=[output],
                       help="Certify sigma A(C) from a basic relation")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=None,
                   help="Tensor arity (default m // 2)")
    p.add_argument("--perm", type=str, required=True, help="Cycle notation")
    p.add_argument("--C", type=str, required=True, help="Comma list of d + 1 indices")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("check-cert", help="Replay a deduction certificate")
    p.add_argument("cert", type=str)
    p.set_defaults(func=cmd_check_cert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as e:
        print("tracetensor: error: {}".format(e), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
