"""Exception hierarchy shared by all modules."""


class AbdargError(Exception):
    """Base class for every error raised by the package."""


class MemberOutsideFramework(AbdargError):
    def __init__(self, members):
        self.members = frozenset(members)
        super().__init__(f"not arguments of the framework: {', '.join(sorted(self.members))}")


class UnknownArgument(AbdargError):
    def __init__(self, argument):
        self.argument = argument
        super().__init__(f"unknown argument: {argument}")


class UnknownAbducible(AbdargError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown abducible framework: {name}")


class UnknownAtom(AbdargError):
    def __init__(self, atom):
        self.atom = atom
        super().__init__(f"atom does not occur in the program: {atom}")


class InterpretationOutOfVocabulary(AbdargError):
    pass


class VocabularyTooLarge(AbdargError):
    pass


class TooManyAbducibles(AbdargError):
    pass


class IndexOutOfRange(AbdargError):
    pass


class DialogueRejected(AbdargError):
    """A dialogue does not match the production rules.

    ``index`` is the 1-based position of the first offending move; a value of
    ``len(moves) + 1`` means the dialogue ended where another move was due.
    """

    def __init__(self, index: int, rule: str):
        self.index = index
        self.rule = rule
        super().__init__(f"move {index}: {rule}")


class ConflictInProPosition(DialogueRejected):
    pass


class ParseError(AbdargError):
    """Malformed input text. ``line``/``column`` are 1-based."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 source: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(self._render())

    def _render(self) -> str:
        where = self.source or "<input>"
        if self.line is not None:
            where += f":{self.line}"
            if self.column is not None:
                where += f":{self.column}"
        return f"{where}: {type(self).__name__}: {self.message}"


class UndeclaredArgument(ParseError):
    pass


class DuplicateName(ParseError):
    pass


class MissingBase(ParseError):
    pass


class AbducibleNotInProgram(ParseError):
    pass


class VariableNotSupported(ParseError):
    pass
