from typing import Optional


class ToolkitError(Exception):
    """Base class for every error raised by the toolkit"""


class MRParseError(ToolkitError):
    """A meaning representation item could not be parsed"""

    def __init__(self, message: str, item: str, offset: int):
        self.item = item
        self.offset = offset  # byte offset of the item in the UTF-8 encoded MR string
        super().__init__(f"{message}: {item!r} at byte offset {offset}")


class MRStructureError(ToolkitError):
    """The MR parsed but violates a structural constraint (duplicates, dangling references)"""


class CorpusFormatError(ToolkitError):
    """A corpus file has the wrong schema, or one of its rows is malformed"""

    def __init__(self, message: str, row: Optional[int] = None):
        self.row = row
        prefix = f"row {row}: " if row is not None else ""
        super().__init__(prefix + message)


class CorpusIOError(ToolkitError):
    """A corpus, report or config file could not be read or written"""


class ConfigError(ToolkitError):
    """Invalid configuration, schema file or lexicon override"""


class OntologyError(ToolkitError):
    """A slot value outside the documented ontology"""


class RelexicalizationError(ToolkitError):
    """A placeholder has no corresponding slot in the MR"""

    def __init__(self, placeholder: str):
        self.placeholder = placeholder
        super().__init__(f"No MR slot for placeholder {placeholder}")
