from prsim.utils.hashing import sha256_file
from prsim.utils.timing import Timer

__all__ = ("sha256_file", "Timer")
