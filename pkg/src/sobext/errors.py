"""Exceptions shared across the pipeline."""


class InvariantViolation(RuntimeError):
    """A structural guarantee of the construction failed.

    ``check`` is a short slug naming the violated property, e.g.
    ``"tower-top-easy"`` or ``"stopping-rule-isolation"``. The CLI maps this
    exception to exit code 2.
    """

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        msg = f"invariant violated [{check}]"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
