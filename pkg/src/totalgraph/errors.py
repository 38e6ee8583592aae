"""Exception types shared across the package."""


class MalformedInputError(ValueError):
    """Input text or edge data that does not describe a simple graph."""


class DomainError(ValueError):
    """A well-formed graph that falls outside an operation's domain."""


class PreconditionError(ValueError):
    """An argument violates a documented precondition."""


class Refusal(Exception):
    """A check rejected its input.

    ``code`` is a short machine-readable tag, ``detail`` a human-readable
    explanation naming the offending vertices or condition.
    """

    def __init__(self, code: str, detail: str = ""):
        super().__init__(f"{code}: {detail}" if detail else code)
        self.code = code
        self.detail = detail

    @property
    def witness(self) -> str:
        return f"{self.code} {self.detail}".strip()
