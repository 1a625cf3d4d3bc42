class InteractiveShell(object):
    """An enhanced, interactive shell for Python.

    Methods
    -------
    run_cell
        Run a complete cell.
    """

    banner = ''

    def run_cell(self, raw_cell):
        pass


class Magics(object):
    """Base class for implementing magic functions.
    Shell functions which can be reached as %function_name.
    """

    def __init__(self, shell=None):
        self.shell = shell
