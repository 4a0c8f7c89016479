"""
Binary index files.

All fields are little-endian::

    magic       8 bytes  b"PRSIMIDX"
    version     u32      1
    n, m        u64, u64
    c, eps      f64, f64
    r_max       f64
    j0          u64
    hub_count   u64
    hub_count times:
        w            u64
        level_count  u32
        level_count times:
            level        u32
            tuple_count  u64
            tuple_count times: v u64, psi f64
"""
import logging
import struct

import numpy as np

from prsim.exc import (
    BadMagicError,
    TruncatedIndexError,
    VersionMismatchError,
    convert_os_error,
)
from prsim.index.hub_index import HubIndex

logger = logging.getLogger(__name__)

MAGIC = b"PRSIMIDX"
FORMAT_VERSION = 1

_HEADER = struct.Struct("<8sIQQdddQQ")
_HUB = struct.Struct("<QI")
_LEVEL = struct.Struct("<IQ")
TUPLE_DTYPE = np.dtype([("v", "<u8"), ("psi", "<f8")])


def dumps(index):
    """
    Encode ``index`` as bytes.
    """
    chunks = [
        _HEADER.pack(
            MAGIC,
            FORMAT_VERSION,
            index.n,
            index.m,
            index.c,
            index.eps,
            index.r_max,
            index.j0,
            len(index),
        )
    ]
    for w in index.hubs:
        levels = index.levels(w)
        chunks.append(_HUB.pack(w, len(levels)))
        for level in sorted(levels):
            tuples = levels[level]
            chunks.append(_LEVEL.pack(level, len(tuples)))
            chunks.append(np.array(tuples, dtype=TUPLE_DTYPE).tobytes())
    return b"".join(chunks)


def _unpack(fmt, data, offset, path):
    if offset + fmt.size > len(data):
        raise TruncatedIndexError(
            f"file ends at byte {len(data)}, expected {fmt.size} more bytes "
            f"at offset {offset}",
            path=path,
        )
    return fmt.unpack_from(data, offset), offset + fmt.size


def loads(data, path=None):
    """
    Decode an index from bytes produced by :func:`dumps`.
    """
    if data[: len(MAGIC)] != MAGIC:
        raise BadMagicError("not a PRSim index file (bad magic)", path=path)
    header, offset = _unpack(_HEADER, data, 0, path)
    _, version, n, m, c, eps, r_max, j0, hub_count = header
    if version != FORMAT_VERSION:
        raise VersionMismatchError(version, FORMAT_VERSION, path=path)

    hubs = {}
    for _ in range(hub_count):
        (w, level_count), offset = _unpack(_HUB, data, offset, path)
        levels = {}
        for _ in range(level_count):
            (level, tuple_count), offset = _unpack(_LEVEL, data, offset, path)
            nbytes = tuple_count * TUPLE_DTYPE.itemsize
            if offset + nbytes > len(data):
                raise TruncatedIndexError(
                    f"hub {w} level {level} declares {tuple_count} tuples "
                    "past the end of the file",
                    path=path,
                )
            arr = np.frombuffer(
                data, dtype=TUPLE_DTYPE, count=tuple_count, offset=offset
            )
            offset += nbytes
            levels[level] = list(zip(arr["v"].tolist(), arr["psi"].tolist()))
        hubs[w] = levels
    if offset != len(data):
        logger.warning(f"{path}: {len(data) - offset} trailing bytes ignored")
    return HubIndex(n, m, c, eps, j0, hubs, r_max=r_max)


def serialize(index, path):
    """
    Write ``index`` to ``path``.
    """
    try:
        with open(path, "wb") as f:
            f.write(dumps(index))
    except OSError as e:
        raise convert_os_error(e, path=str(path))
    logger.info(f"Wrote {index!r} to {path}")


def deserialize(path):
    """
    Read an index written by :func:`serialize`.
    """
    try:
        with open(path, "rb") as f:
            data = f.read()
    except OSError as e:
        raise convert_os_error(e, path=str(path))
    index = loads(data, path=str(path))
    logger.info(f"Read {index!r} from {path}")
    return index
