"""Read-only, sequentially accessed integer sequences with access accounting.

Every algorithm in the package touches its input only through
:meth:`SequenceSource.iter_view` (or the callback flavour :func:`scan`).  The
source models a tape head sitting on the boundaries ``0..n`` between cells:
reading cell ``i`` moving forward takes the head from ``i`` to ``i + 1``, and
moving backward from ``i + 1`` to ``i``.  Repositioning the head before a scan
costs the distance travelled, and every change in the direction of motion is
a reversal.
"""

from __future__ import annotations

import os
import re
import struct
from array import array
from dataclasses import dataclass, fields
from enum import Enum
from typing import Callable, Iterator, NamedTuple, Optional, Sequence

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class Element(NamedTuple):
    value: int
    position: int


class Direction(str, Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


class ParseError(ValueError):
    """Malformed input file."""

    def __init__(self, message: str, *, token: Optional[int] = None,
                 line: Optional[int] = None, offset: Optional[int] = None) -> None:
        where = []
        if token is not None:
            where.append(f"token {token}")
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.token = token
        self.line = line
        self.offset = offset


@dataclass
class AccessStats:
    reads: int = 0
    forward_passes: int = 0
    backward_passes: int = 0
    reversals: int = 0
    seek_cost: int = 0

    def copy(self) -> "AccessStats":
        return AccessStats(**{f.name: getattr(self, f.name) for f in fields(self)})

    def __sub__(self, other: "AccessStats") -> "AccessStats":
        return AccessStats(**{f.name: getattr(self, f.name) - getattr(other, f.name)
                              for f in fields(self)})

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class ValueWindow:
    """Open interval of admissible values; ``None`` means unbounded."""

    lower: Optional[int] = None
    upper: Optional[int] = None

    def __post_init__(self) -> None:
        if self.lower is not None and self.upper is not None and self.lower >= self.upper:
            raise ValueError(f"empty window ({self.lower}, {self.upper})")

    def __contains__(self, value: int) -> bool:
        return ((self.lower is None or value > self.lower)
                and (self.upper is None or value < self.upper))

    def intersect(self, other: "ValueWindow") -> Optional["ValueWindow"]:
        """Intersection of two windows, or ``None`` when it admits no integer."""
        lo = _max_opt(self.lower, other.lower)
        hi = _min_opt(self.upper, other.upper)
        if lo is not None and hi is not None and hi - lo < 2:
            return None
        return ValueWindow(lo, hi)


UNBOUNDED = ValueWindow()


def _max_opt(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def _min_opt(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass(frozen=True)
class IndexRange:
    """Inclusive range of positions ``first..last``; empty when ``first > last``."""

    first: int
    last: int

    def __post_init__(self) -> None:
        if self.first > self.last + 1:
            raise ValueError(f"invalid range [{self.first}..{self.last}]")

    def __len__(self) -> int:
        return self.last - self.first + 1

    @property
    def empty(self) -> bool:
        return self.first > self.last


class SequenceSource:
    """Base class: subclasses provide ``length`` and :meth:`_fetch`."""

    length: int

    def __init__(self, length: int) -> None:
        self.length = length
        self.stats = AccessStats()
        self._head = 0
        self._dir = 0

    def __len__(self) -> int:
        return self.length

    @property
    def cursor(self) -> int:
        """Head boundary: 0 is before-start, ``length`` is past-end."""
        return self._head

    def full_range(self) -> IndexRange:
        return IndexRange(0, self.length - 1)

    def _fetch(self, i: int) -> int:
        raise NotImplementedError

    def _move(self, target: int) -> None:
        delta = target - self._head
        if delta:
            self._turn(1 if delta > 0 else -1)
            self.stats.seek_cost += abs(delta)
            self._head = target

    def _turn(self, d: int) -> None:
        if self._dir and d != self._dir:
            self.stats.reversals += 1
        self._dir = d

    def _charge_pass(self, direction: Direction, rng: IndexRange) -> None:
        if rng.empty:
            return
        if rng.first < 0 or rng.last >= self.length:
            raise IndexError(f"range [{rng.first}..{rng.last}] outside source of length {self.length}")
        size = len(rng)
        st = self.stats
        if direction is Direction.FORWARD:
            self._move(rng.first)
            self._turn(1)
            self._head = rng.last + 1
            st.forward_passes += 1
        else:
            self._move(rng.last + 1)
            self._turn(-1)
            self._head = rng.first
            st.backward_passes += 1
        st.reads += size
        st.seek_cost += size

    def _positions(self, direction: Direction, rng: IndexRange) -> range:
        if direction is Direction.FORWARD:
            return range(rng.first, rng.last + 1)
        return range(rng.last, rng.first - 1, -1)

    def iter_view(self, direction: Direction = Direction.FORWARD,
                  window: ValueWindow = UNBOUNDED,
                  rng: Optional[IndexRange] = None) -> Iterator[tuple[int, int]]:
        """Yield ``(value, position)`` for the elements of ``rng`` inside ``window``.

        One pass is charged, and one read per element of the range whether or
        not it passes the filter.  Positions are always global.
        """
        if rng is None:
            rng = self.full_range()
        self._charge_pass(direction, rng)
        lo, hi = window.lower, window.upper
        fetch = self._fetch
        for p in self._positions(direction, rng):
            v = fetch(p)
            if (lo is None or v > lo) and (hi is None or v < hi):
                yield v, p

    def close(self) -> None:
        pass

    def __enter__(self) -> "SequenceSource":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


class ArraySource(SequenceSource):
    def __init__(self, values: Sequence[int]) -> None:
        try:
            data = array("q", values)
        except OverflowError as exc:
            raise ValueError("values must fit in a signed 64-bit integer") from exc
        super().__init__(len(data))
        self._data = data

    def _fetch(self, i: int) -> int:
        return self._data[i]

    def iter_view(self, direction: Direction = Direction.FORWARD,
                  window: ValueWindow = UNBOUNDED,
                  rng: Optional[IndexRange] = None) -> Iterator[tuple[int, int]]:
        # Same contract as the base class, specialised for speed.
        if rng is None:
            rng = self.full_range()
        self._charge_pass(direction, rng)
        data = self._data
        lo, hi = window.lower, window.upper
        positions = self._positions(direction, rng)
        if lo is None and hi is None:
            for p in positions:
                yield data[p], p
        elif hi is None:
            for p in positions:
                v = data[p]
                if v > lo:
                    yield v, p
        elif lo is None:
            for p in positions:
                v = data[p]
                if v < hi:
                    yield v, p
        else:
            for p in positions:
                v = data[p]
                if lo < v < hi:
                    yield v, p


_CHUNK = 1 << 16


class BinarySource(SequenceSource):
    """Little-endian int64 file, read through a single chunk cache."""

    def __init__(self, path: str | os.PathLike) -> None:
        size = os.path.getsize(path)
        if size % 8:
            raise ParseError(f"binary input size {size} is not a multiple of 8", offset=size - size % 8)
        super().__init__(size // 8)
        self._f = open(path, "rb")
        self._base = -1
        self._chunk = b""
        self._per_chunk = _CHUNK // 8

    def _fetch(self, i: int) -> int:
        base = i - i % self._per_chunk
        if base != self._base:
            self._f.seek(base * 8)
            self._chunk = self._f.read(_CHUNK)
            self._base = base
        return struct.unpack_from("<q", self._chunk, (i - base) * 8)[0]

    def close(self) -> None:
        self._f.close()


_WS = frozenset(b" \t\n\r\v\f")


def _parse_token(tok: bytes, index: int, line: int, offset: int) -> int:
    body = tok[1:] if tok[:1] == b"-" else tok
    if not body or not body.isdigit():
        raise ParseError(f"invalid integer {tok.decode('ascii', 'replace')!r}",
                         token=index, line=line, offset=offset)
    v = int(tok)
    if not INT64_MIN <= v <= INT64_MAX:
        raise ParseError(f"integer {v} outside the signed 64-bit range",
                         token=index, line=line, offset=offset)
    return v


_TOKEN = re.compile(rb"\S+")
_TAIL = re.compile(rb"\S*\Z")


def _iter_tokens(f) -> Iterator[tuple[bytes, int, int]]:
    """Stream ``(token, line, byte_offset)`` from a binary file object."""
    line = 1
    pending = b""
    base = 0
    while True:
        chunk = f.read(_CHUNK)
        data = pending + chunk
        # an unterminated trailing token waits for the next chunk
        cut = _TAIL.search(data).start() if chunk else len(data)
        pos = 0
        for m in _TOKEN.finditer(data, 0, cut):
            line += data.count(b"\n", pos, m.start())
            pos = m.start()
            yield m.group(), line, base + m.start()
        line += data.count(b"\n", pos, cut)
        pending = data[cut:]
        base += cut
        if not chunk:
            return


class TextSource(SequenceSource):
    """Whitespace separated decimal integers.

    Opening validates the whole file in one streaming pass to learn the
    length.  Afterwards a token cursor ``(index, byte offset)`` moves one
    token at a time in either direction, so memory stays at one chunk.
    """

    def __init__(self, path: str | os.PathLike) -> None:
        self._f = open(path, "rb")
        count = 0
        first = None
        for tok, line, off in _iter_tokens(self._f):
            _parse_token(tok, count + 1, line, off)
            if first is None:
                first = off
            count += 1
        super().__init__(count)
        self._size = os.path.getsize(path)
        self._base = -1
        self._chunk = b""
        self._tok = 0
        self._tok_start = first if first is not None else 0

    def _byte(self, off: int) -> int:
        if not self._base <= off < self._base + len(self._chunk):
            base = max(0, off - _CHUNK // 2)
            self._f.seek(base)
            self._chunk = self._f.read(_CHUNK)
            self._base = base
        return self._chunk[off - self._base]

    def _token_end(self, start: int) -> int:
        end = start
        while end < self._size and self._byte(end) not in _WS:
            end += 1
        return end

    def _step_forward(self) -> None:
        off = self._token_end(self._tok_start)
        while self._byte(off) in _WS:
            off += 1
        self._tok += 1
        self._tok_start = off

    def _step_backward(self) -> None:
        off = self._tok_start - 1
        while self._byte(off) in _WS:
            off -= 1
        while off > 0 and self._byte(off - 1) not in _WS:
            off -= 1
        self._tok -= 1
        self._tok_start = off

    def _fetch(self, i: int) -> int:
        while self._tok < i:
            self._step_forward()
        while self._tok > i:
            self._step_backward()
        start = self._tok_start
        end = self._token_end(start)
        if self._base <= start and end <= self._base + len(self._chunk):
            tok = self._chunk[start - self._base:end - self._base]
        else:
            tok = bytes(self._byte(k) for k in range(start, end))
        return int(tok)

    def close(self) -> None:
        self._f.close()


def open_array(values: Sequence[int]) -> ArraySource:
    return ArraySource(values)


def open_file(path: str | os.PathLike, format: str = "text") -> SequenceSource:
    if format == "text":
        return TextSource(path)
    if format == "binary":
        return BinarySource(path)
    raise ValueError(f"unknown format {format!r}")


def scan(source: SequenceSource, direction: Direction, window: ValueWindow,
         rng: Optional[IndexRange], visitor: Callable[[Element], None]) -> AccessStats:
    """Visit the filtered view once and return the accounting delta."""
    before = source.stats.copy()
    for v, p in source.iter_view(direction, window, rng):
        visitor(Element(v, p))
    return source.stats - before


def stats(source: SequenceSource) -> AccessStats:
    return source.stats.copy()
