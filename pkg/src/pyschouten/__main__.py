import logging
import sys
from typing import List, Optional

from pyschouten.commands import run


def main(argv: Optional[List[str]] = None):
    """
    Command-line entry point of PySchouten.

    Subcommands:
    - `bracket F G [--mode old|multibase|geometric]`: Schouten bracket of two functionals.
    - `laplacian F`: naive BV Laplacian.
    - `jacobi F G H [--mode ...] [--diagonal]`: Jacobi residual.
    - `euler F [--field q|qd] [--index N] [--side left|right]`: variational derivative.
    - `exact F` and `primitive F`: triviality test and primitive of a density.
    - `zimes F G`, `delta2 F`, `commutator X Y`: identity checks, with `--assert-holds` to gate on the verdict.
    - `paper-suite [--seed N] [--samples N]` (alias `reproduce`): runs the embedded reproduction checks.

    Inputs are paths to `.fun` files or inline sources such as `"int qd*q_x dx"`.
    Exit status is 0 on success, 1 when a verdict fails and 2 on usage or parse errors.
    """
    argv = sys.argv[1:] if argv is None else argv
    verbose = "-v" in argv or "--verbose" in argv
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

    result = run(argv)
    if result.output:
        print(result.output)
    if result.error:
        print(result.error, file=sys.stderr)
    sys.exit(result.status)


if __name__ == "__main__":
    main()
