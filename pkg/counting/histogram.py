"""
Moment histograms: r(v) = #{(x_1..x_s) ∈ ({1..N}^d)^s : Σ Φ(x_j) = v}.

Keys are moment vectors packed into one Python integer whose big-endian
byte form is the concatenation of fixed-width coordinates. Every coordinate
of an s-fold sum fits its field, so adding two keys adds the vectors.
"""
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import islice, repeat

from lab.conf import lab_setting
from lab.exceptions import ParameterError, ResourceCapError
from monomials.systems import phi_eval

logger = logging.getLogger(__name__)

# rough CPython cost of one dict slot holding an int key and an int count
_ENTRY_OVERHEAD_BYTES = 100


@dataclass(frozen=True)
class KeyCodec:
    """Fixed-width big-endian packing of moment vectors."""

    widths: tuple

    @classmethod
    def for_system(cls, system, s, N):
        return cls(tuple(
            max(1, math.ceil((s * N ** degree).bit_length() / 8))
            for degree in system.degrees
        ))

    @property
    def total_bytes(self):
        return sum(self.widths)

    def encode(self, vector):
        key = 0
        for value, width in zip(vector, self.widths):
            if not 0 <= value < 1 << (8 * width):
                raise ParameterError(f"coordinate {value} does not fit {width} bytes")
            key = (key << (8 * width)) | value
        return key

    def decode(self, key):
        values = []
        for width in reversed(self.widths):
            values.append(key & ((1 << (8 * width)) - 1))
            key >>= 8 * width
        return tuple(reversed(values))

    def key_bytes(self, key):
        return key.to_bytes(self.total_bytes, "big")


@dataclass
class MomentHistogram:
    system: object
    s: int
    N: int
    codec: KeyCodec
    table: Counter = field(repr=False)

    def __len__(self):
        return len(self.table)

    @property
    def total(self):
        return sum(self.table.values())

    def count(self, vector):
        return self.table.get(self.codec.encode(vector), 0)

    def vectors(self):
        """(moment vector, count) pairs in key order."""
        return [(self.codec.decode(key), count) for key, count in sorted(self.table.items())]

    def sum_of_squares(self, workers=1):
        counts = list(self.table.values())
        if workers <= 1 or len(counts) < 2 * workers:
            return sum(c * c for c in counts)
        size = math.ceil(len(counts) / workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = pool.map(lambda part: sum(c * c for c in part), _chunks(counts, size))
            return sum(partials)


def _chunks(items, size):
    it = iter(items)
    return iter(lambda: list(islice(it, size)), [])


def _convolve_shard(shard, right):
    out = Counter()
    for key_left, count_left in shard:
        for key_right, count_right in right.items():
            out[key_left + key_right] += count_left * count_right
    return out


def convolve(left, right, workers=1):
    """
    Sum-set convolution of two packed-key tables. Shards of the larger table
    convolve in worker processes and merge associatively.
    """
    if not left or not right:
        return Counter()
    if len(right) > len(left):
        left, right = right, left
    items = list(left.items())
    if workers <= 1 or len(items) < 2 * workers:
        return _convolve_shard(items, right)
    size = math.ceil(len(items) / workers)
    merged = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for partial in pool.map(_convolve_shard, _chunks(items, size), repeat(right)):
            merged.update(partial)
    return merged


def estimate_table_bytes(system, s, N, split):
    codec = KeyCodec.for_system(system, s, N)
    keys = N ** (system.d * max(split, s - split))
    return keys * (_ENTRY_OVERHEAD_BYTES + codec.total_bytes)


def _power(base, times, workers):
    table = Counter({0: 1})
    for _ in range(times):
        table = convolve(table, base, workers)
    return table


def build_histogram(system, s, N, split=None, *, workers=None, mem_cap=None):
    """Histogram of s-fold sums, built from the split- and (s−split)-fold ones."""
    if s < 1 or N < 1:
        raise ParameterError(f"s and N must be positive, got s={s}, N={N}")
    split = math.ceil(s / 2) if split is None else split
    if not 1 <= split <= s:
        raise ParameterError(f"split must lie in [1, {s}], got {split}")
    workers = lab_setting("THREADS", workers)
    cap = lab_setting("MEM_CAP", mem_cap)

    estimate = estimate_table_bytes(system, s, N, split)
    if estimate > cap:
        raise ResourceCapError(
            f"histogram for {system.label}, s={s}, N={N} needs about {estimate} bytes (cap {cap})",
            estimate=estimate,
            cap=cap,
        )

    codec = KeyCodec.for_system(system, s, N)
    base = Counter(codec.encode(phi_eval(system, x)) for x in system.points(N))
    left = _power(base, split, workers)
    right = _power(base, s - split, workers)
    logger.debug("%s s=%d N=%d: halves have %d and %d keys", system.label, s, N, len(left), len(right))
    table = convolve(left, right, workers)
    return MomentHistogram(system, s, N, codec, table)
