import argparse
import logging

from tracetensor.matexval.kernel import expected_kernel_dimension
from tracetensor.matexval.kernel import identity_space_dimension
from tracetensor.matexval.kernel import kernel_dimension


def main():
    parser = argparse.ArgumentParser(
        description='Tabulate the dimension of the kernel of Q[S_m] acting on '
                    '(Q^d)^{(x)m} against the hook length prediction.')
    parser.add_argument('--max-m', type=int, default=5)
    parser.add_argument('--max-d', type=int, default=3)
    parser.add_argument('--uniqueness', action='store_true',
                        help='also check that the relation space of each '
                             'F_{k,d} is one-dimensional')
    parser.add_argument('--log-level', type=int, default=logging.INFO)
    args = parser.parse_args()
    logging.basicConfig(level=args.log_level)
    logger = logging.getLogger(__name__)

    print('m\td\tkernel\texpected')
    for m in range(1, args.max_m + 1):
        for d in range(1, args.max_d + 1):
            dim = kernel_dimension(m, d)
            expected = expected_kernel_dimension(m, d)
            assert dim == expected, (m, d, dim, expected)
            print('{}\t{}\t{}\t{}'.format(m, d, dim, expected))

    if args.uniqueness:
        for d in range(1, args.max_d + 1):
            for k in range(d + 2):
                dim = identity_space_dimension(d + 1 - k, k, d)
                logger.info('k=%d d=%d: relation space of dimension %d', k, d, dim)
                assert dim == 1, (k, d, dim)


if __name__ == '__main__':
    main()
