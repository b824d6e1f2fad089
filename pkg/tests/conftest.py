import io
from contextlib import redirect_stderr, redirect_stdout

import pytest

from bwtunnel.cli import main as cli_main

# Two-decimal reference roots of the limiting equations for b = 3,
# sigma = 1 on the window [-40, 40] (the well-known test configuration).
KNOWN_SIGMA_PLUS = (-18.26, -2.70, 2.28, 35.09)
KNOWN_SIGMA_MINUS = (-11.74, -1.01, 8.77)
KNOWN_SIGMA_PRIME = (-35.82, -11.66, 26.87)
# The mirror arrangement has a fourth nonzero root almost on top of the
# shared-set root near -35.82 (separation ~ 4e-3); on coarse plots the
# two ridges are indistinguishable.
EXTRA_SIGMA_MINUS_ROOT = -35.8248


@pytest.fixture
def run_cli():
    def _run(argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = cli_main(list(argv))
        return code, out.getvalue(), err.getvalue()

    return _run
