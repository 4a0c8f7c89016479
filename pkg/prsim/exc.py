import errno
import logging

logger = logging.getLogger(__name__)


class PRSimError(Exception):
    """
    Root of the PRSim Exception hierarchy. Every error the library raises on
    purpose derives from it:

    - :class:`PRSimUsageError` (also a ``ValueError``): bad arguments, such as
      parameters out of range, unknown nodes or a mismatched index
    - :class:`ConfigError`: a config file or ``PRSIM_*`` variable is unusable
    - :class:`GraphFormatError`: an edge list could not be parsed
    - :class:`IndexFileError`: a serialized index could not be read
    - :class:`FileAccessError`: the operating system refused a file
    """


class PRSimUsageError(PRSimError, ValueError):
    """
    A ``PRSimUsageError`` may be thrown in cases in which the library
    detects that it is being used improperly.

    These errors typically indicate that some contract regarding library usage
    (e.g. querying with an index built for another graph) has been violated.
    """


class ParameterError(PRSimUsageError):
    """
    A numeric parameter is outside of its valid range.

    :ivar name: The parameter name, as it appears in the signature (str)
    :ivar value: The offending value
    :ivar invariant: The violated invariant, e.g. ``"0 < c < 1"`` (str)
    """

    def __init__(self, name, value, invariant):
        self.name = name
        self.value = value
        self.invariant = invariant
        super().__init__(f"{name}={value!r} violates {invariant}")


class NodeOutOfRangeError(PRSimUsageError, IndexError):
    """
    A node id does not name a node of the graph.

    :ivar node: The requested node
    :ivar n: Number of nodes in the graph
    """

    def __init__(self, node, n):
        self.node = node
        self.n = n
        super().__init__(f"node {node!r} is not in [0, {n})")


class IndexMismatchError(PRSimUsageError):
    """
    A ``HubIndex`` was paired with a graph or with query parameters it was
    not built for.

    :ivar field: Name of the mismatching attribute (``"n"``, ``"m"`` or ``"c"``)
    :ivar expected: Value recorded in the index
    :ivar actual: Value found on the graph or parameters
    """

    def __init__(self, field, expected, actual):
        self.field = field
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"index was built with {field}={expected!r}, got {field}={actual!r}"
        )


class OracleCapacityError(PRSimUsageError):
    """
    A dense, quadratic-memory oracle was requested on a graph above the
    configured node cap.
    """

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"exact oracle needs n <= {cap}, graph has n={n}")


class ConfigError(PRSimError):
    """
    A config file or environment variable holds something PRSim cannot use.

    :ivar option: The option being read, or None for the file as a whole
    :ivar value: The raw string that failed to cast, or None
    :ivar source: Where the value came from, e.g. ``PRSIM_EPS`` or
                  ``[profile smoke]``
    """

    def __init__(self, message, option=None, value=None, source=None):
        self.option = option
        self.value = value
        self.source = source
        super().__init__(message)


class GraphFormatError(PRSimError):
    """
    An edge list could not be parsed.

    :ivar path: The file being read (str or None)
    :ivar line_number: 1-based line number of the offending line, or None if the
                       problem concerns the file as a whole
    :ivar line: The offending line, without its line terminator
    """

    def __init__(self, message, path=None, line_number=None, line=None):
        self.path = path
        self.line_number = line_number
        self.line = line
        self.message = message
        super().__init__(*self._get_args())

    def _get_args(self):
        """
        Get arguments to pass to the Exception base class. These args are
        displayed in stack traces.
        """
        if self.line_number is None:
            return (f"{self.path}: {self.message}",)
        return (f"{self.path}:{self.line_number}: {self.message}",)


class EmptyGraphError(GraphFormatError):
    """The edge list holds no edges."""


class NodeIdOverflowError(GraphFormatError):
    """A node id does not fit the 64-bit signed id space."""


class IndexFileError(PRSimError):
    """
    A serialized ``HubIndex`` could not be read.

    :ivar path: The index file (str or None)
    """

    def __init__(self, message, path=None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class BadMagicError(IndexFileError):
    """The file does not start with the index magic bytes."""


class VersionMismatchError(IndexFileError):
    """The file was written by an unsupported format version."""

    def __init__(self, found, supported, path=None):
        self.found = found
        self.supported = supported
        super().__init__(
            f"index format version {found} is not supported (expected {supported})",
            path=path,
        )


class TruncatedIndexError(IndexFileError):
    """The file ended before the structure it declares was complete."""


class FileAccessError(PRSimError):
    """
    Error reading or writing a file on behalf of the library.

    Holds onto the original exception, but also takes a message to explain it.
    """

    def __init__(self, msg, exc, path=None):
        super().__init__(msg)
        self.underlying_exception = exc
        self.path = path


class MissingFileError(FileAccessError):
    """The file does not exist."""


class FilePermissionError(FileAccessError):
    """The file exists but may not be read or written."""


def convert_os_error(exc, path=None):
    """Converts an incoming OSError to a PRSim FileAccessError"""
    if isinstance(exc, FileNotFoundError) or exc.errno == errno.ENOENT:
        return MissingFileError(f"no such file: {path}", exc, path=path)
    if isinstance(exc, PermissionError):
        return FilePermissionError(f"permission denied: {path}", exc, path=path)
    logger.debug(f"unclassified OSError on {path}: {exc}")
    return FileAccessError(f"could not access {path}: {exc.strerror}", exc, path=path)
