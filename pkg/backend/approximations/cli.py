import io
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass

from django.core.management import ManagementUtility


@dataclass(frozen=True)
class CommandResult:
    code: int
    stdout: str
    stderr: str


def run_command(argv):
    """Run one command line as ``manage.py`` would and capture its output.

    ``argv`` excludes the program name, e.g.
    ``['approx', 'spaces/space_c.json', '--set', 'h2,h3,h4']``.
    """
    out, err = io.StringIO(), io.StringIO()
    code = 0
    with redirect_stdout(out), redirect_stderr(err):
        try:
            ManagementUtility(['manage.py', *argv]).execute()
        except SystemExit as error:
            if error.code is None:
                code = 0
            else:
                code = error.code if isinstance(error.code, int) else 1
    return CommandResult(code, out.getvalue(), err.getvalue())
