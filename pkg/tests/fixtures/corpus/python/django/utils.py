class _Private:
    """Helper.  """

    def _x(self):
        pass


class Empty:
    """"""


class lazy:
    """lazy evaluation wrapper; see __call__"""

    def __call__(self):
        pass


if True:
    class Conditional:
        """Defined conditionally."""

        async def run(self):
            pass
