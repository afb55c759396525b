"""Coefficient files.

Text: one record per line, ``index v_1 ... v_d`` separated by single
spaces, ascending index, trailing newline.  Lines starting with ``#`` are
comments.

Binary (little endian): a 16-byte header

    offset 0   4 bytes  magic ``b"EPCF"``
    offset 4   u16      format version (1)
    offset 6   u16      width d (values per record)
    offset 8   u64      record count

followed by ``count * (1 + d)`` int64 values, each record being the index
then its ``d`` values.
"""
from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .errors import CapacityError, InvalidArgument

MAGIC = b"EPCF"
VERSION = 1
_HEADER = struct.Struct("<4sHHQ")


def _records(indices, values):
    idx = [int(i) for i in indices]
    vals = [v if isinstance(v, (list, tuple)) else (v,) for v in values]
    if len(idx) != len(vals):
        raise InvalidArgument("indices and values differ in length")
    widths = {len(v) for v in vals}
    if len(widths) > 1:
        raise InvalidArgument("all records must have the same width")
    return idx, vals, (widths.pop() if widths else 1)


def format_text(indices, values) -> str:
    idx, vals, _ = _records(indices, values)
    return "".join(f"{i} " + " ".join(str(int(x)) for x in v) + "\n" for i, v in zip(idx, vals))


def write_text(path, indices, values):
    Path(path).write_text(format_text(indices, values), encoding="utf-8")


def parse_text(text: str):
    """Inverse of :func:`format_text`: ``(indices, values)`` with tuples of ints."""
    idx, vals = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError as exc:
            raise InvalidArgument(f"line {lineno}: {exc}") from exc
        if len(nums) < 2:
            raise InvalidArgument(f"line {lineno}: expected an index and at least one value")
        idx.append(nums[0])
        vals.append(tuple(nums[1:]))
    return idx, vals


def read_text(path):
    return parse_text(Path(path).read_text(encoding="utf-8"))


def encode_binary(indices, values) -> bytes:
    idx, vals, d = _records(indices, values)
    lim = 1 << 63
    rows = []
    for i, v in zip(idx, vals):
        row = (i,) + tuple(int(x) for x in v)
        if any(not -lim <= x < lim for x in row):
            raise CapacityError("value does not fit the 64-bit binary format; use text output")
        rows.append(row)
    body = np.array(rows, dtype="<i8").reshape(len(rows), 1 + d) if rows else np.zeros((0, 1 + d), "<i8")
    return _HEADER.pack(MAGIC, VERSION, d, len(rows)) + body.tobytes()


def decode_binary(data: bytes):
    if len(data) < _HEADER.size:
        raise InvalidArgument("binary coefficient data is shorter than its header")
    magic, version, d, count = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise InvalidArgument(f"bad magic {magic!r}")
    if version != VERSION:
        raise InvalidArgument(f"unsupported format version {version}")
    need = _HEADER.size + 8 * count * (1 + d)
    if len(data) != need:
        raise InvalidArgument(f"expected {need} bytes, got {len(data)}")
    body = np.frombuffer(data, dtype="<i8", offset=_HEADER.size).reshape(count, 1 + d)
    return body[:, 0].tolist(), [tuple(r) for r in body[:, 1:].tolist()]


def write_binary(path, indices, values):
    Path(path).write_bytes(encode_binary(indices, values))


def read_binary(path):
    return decode_binary(Path(path).read_bytes())


def read_any(path):
    """Read a coefficient file in either format (sniffed from the magic)."""
    data = Path(path).read_bytes()
    if data[:4] == MAGIC:
        return decode_binary(data)
    return parse_text(data.decode("utf-8"))
