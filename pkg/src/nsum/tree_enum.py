"""Free-tree enumeration and the neighbour-sum census.

Every free tree is generated exactly once, rooted at its centroid:

* one centroid: a root plus a multiset of rooted subtrees, each of size at
  most ``(n - 1) // 2``;
* two centroids (``n`` even): an unordered pair of rooted trees of size
  ``n / 2`` joined at their roots.

Rooted trees come from a catalog built by the same multiset rule, where each
tree is identified by its position in the catalog. Multisets are
non-increasing sequences of catalog ids, so the generator never backtracks
out of a dead end: a size-1 subtree always completes any remainder.

The top-level choice (largest subtree at the centroid, or first half of a
bicentroidal pair) splits the search into branches; shard ``s`` of ``k``
takes the branches whose index is ``s`` modulo ``k``.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
import time
from dataclasses import asdict, dataclass
from functools import lru_cache
from multiprocessing import Pool
from pathlib import Path
from typing import Iterator

from .ns_checker import satisfies_ns_parents
from .tree_core import Tree, parents_from_level_sequence, tree_from_level_sequence

__all__ = [
    "RootedCatalog",
    "level_sequences",
    "enumerate_trees",
    "count_trees",
    "count_ns",
    "CensusRecord",
    "CensusReport",
    "census",
    "density_check",
    "load_cache",
    "write_cache",
    "default_cache_path",
    "KNOWN_SIGMA",
    "OTTER_ALPHA",
]

log = logging.getLogger(__name__)

# printed census, n = 1..20
KNOWN_SIGMA = (0, 1, 0, 0, 1, 2, 2, 6, 14, 29, 63, 166, 405, 977, 2481, 6530,
               16757, 43534, 115700, 308527)
# Otter's growth constant; sigma(n)/tau(n) is bounded below by 1/alpha^4
OTTER_ALPHA = 2.9557


class RootedCatalog:
    """All rooted trees up to ``max_size`` vertices, ordered by size."""

    def __init__(self, max_size: int):
        self.max_size = max_size
        self.sizes: list[int] = []
        self.seqs: list[tuple[int, ...]] = []
        # last_id[s] = one past the last id with size <= s
        self.last_id = [0] * (max_size + 1)
        for m in range(1, max_size + 1):
            for kids in self.multisets(m - 1, len(self.sizes) - 1):
                seq = [0]
                for k in kids:
                    seq.extend(d + 1 for d in self.seqs[k])
                self.sizes.append(m)
                self.seqs.append(tuple(seq))
            self.last_id[m] = len(self.sizes)

    def __len__(self):
        return len(self.sizes)

    def count(self, size: int) -> int:
        return self.last_id[size] - self.last_id[size - 1]

    def ids_of_size(self, size: int) -> range:
        return range(self.last_id[size - 1], self.last_id[size])

    def multisets(self, total: int, max_id: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
        """Non-increasing id tuples with sizes summing to ``total``.

        Ids are at most ``max_id`` and sizes at most ``cap``.
        """
        if total == 0:
            yield ()
            return
        limit = total if cap is None else min(total, cap)
        top = min(max_id, self.last_id[min(limit, self.max_size)] - 1)
        for i in range(top, -1, -1):
            s = self.sizes[i]
            for rest in self.multisets(total - s, i, cap):
                yield (i,) + rest


@lru_cache(maxsize=8)
def _catalog(max_size: int) -> RootedCatalog:
    return RootedCatalog(max_size)


def _branches(n: int):
    """Top-level branches as (kind, first_id) in a fixed order."""
    if n <= 2:
        return [("base", -1)]
    cap = (n - 1) // 2
    cat = _catalog(max(cap, n // 2))
    out = [("uni", i) for i in range(cat.last_id[cap] - 1, -1, -1)]
    if n % 2 == 0:
        out.extend(("bi", i) for i in cat.ids_of_size(n // 2))
    return out


def _branch_sequences(n: int, kind: str, first: int) -> Iterator[tuple[int, ...]]:
    if kind == "base":
        yield (0,) if n == 1 else (0, 1)
        return
    cap = (n - 1) // 2
    cat = _catalog(max(cap, n // 2))
    seqs = cat.seqs
    if kind == "uni":
        s = cat.sizes[first]
        if s > n - 1:
            return
        head = tuple(d + 1 for d in seqs[first])
        for rest in cat.multisets(n - 1 - s, first, cap):
            seq = [0]
            seq.extend(head)
            for k in rest:
                seq.extend(d + 1 for d in seqs[k])
            yield tuple(seq)
    else:
        a = seqs[first]
        for j in range(first, cat.last_id[n // 2]):
            yield a + tuple(d + 1 for d in seqs[j])


def level_sequences(n: int, shard: int = 0, shards: int = 1) -> Iterator[tuple[int, ...]]:
    """One level sequence per isomorphism class of trees on ``n`` vertices.

    The sequences are rooted at a centroid; they are not the canonical
    forms of :mod:`nsum.canon`.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= shard < shards:
        raise ValueError("need 0 <= shard < shards")
    for b, (kind, first) in enumerate(_branches(n)):
        if b % shards == shard:
            yield from _branch_sequences(n, kind, first)


def enumerate_trees(n: int) -> Iterator[Tree]:
    for seq in level_sequences(n):
        yield tree_from_level_sequence(seq)


def count_trees(n: int) -> int:
    return sum(1 for _ in level_sequences(n))


@dataclass(frozen=True)
class CensusRecord:
    n: int
    tau: int
    sigma: int
    elapsed: float


@dataclass
class CensusReport:
    records: dict[int, CensusRecord]

    def sigma_sequence(self) -> list[int]:
        return [self.records[n].sigma for n in sorted(self.records)]

    def tau(self, n: int) -> int:
        return self.records[n].tau

    def sigma(self, n: int) -> int:
        return self.records[n].sigma


def _count_shard(args) -> tuple[int, int]:
    n, shard, shards = args
    tau = sigma = 0
    for seq in level_sequences(n, shard, shards):
        tau += 1
        if satisfies_ns_parents(parents_from_level_sequence(seq)):
            sigma += 1
    return tau, sigma


def count_ns(n: int, shards: int = 1, processes: int | None = None) -> tuple[int, int]:
    """(tau(n), sigma(n)); shards run in a process pool when ``processes`` > 1."""
    jobs = [(n, s, shards) for s in range(shards)]
    if processes is None:
        processes = min(shards, os.cpu_count() or 1)
    if processes > 1 and shards > 1:
        with Pool(processes) as pool:
            parts = pool.map(_count_shard, jobs)
    else:
        parts = [_count_shard(j) for j in jobs]
    return sum(p[0] for p in parts), sum(p[1] for p in parts)


def default_cache_path() -> Path:
    env = os.environ.get("NSUM_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "nsum" / "census.jsonl"


def load_cache(path) -> dict[int, CensusRecord]:
    path = Path(path)
    if not path.exists():
        return {}
    records = {}
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if line:
                rec = CensusRecord(**json.loads(line))
                records[rec.n] = rec
    return records


def write_cache(path, records: dict[int, CensusRecord]) -> None:
    """Rewrite the JSON-lines cache atomically."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            for n in sorted(records):
                fh.write(json.dumps(asdict(records[n])) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def census(n_max: int, shards: int = 1, cache=None, fresh: bool = False,
           processes: int | None = None, progress=None) -> CensusReport:
    """tau(n) and sigma(n) for n = 1..n_max, reusing and extending ``cache``."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    records = {} if (cache is None or fresh) else load_cache(cache)
    kept = {n: r for n, r in records.items() if n <= n_max}
    for n in range(1, n_max + 1):
        if n in kept:
            continue
        start = time.perf_counter()
        tau, sigma = count_ns(n, shards, processes)
        rec = CensusRecord(n, tau, sigma, round(time.perf_counter() - start, 3))
        records[n] = kept[n] = rec
        log.info("n=%d tau=%d sigma=%d (%.1fs)", n, tau, sigma, rec.elapsed)
        if progress is not None:
            progress(rec)
        if cache is not None:
            write_cache(cache, records)
    return CensusReport(kept)


def density_check(n_max: int, report: CensusReport | None = None) -> list[dict]:
    """Per n in 5..n_max: does sigma(n) >= tau(n - 4) hold?"""
    if n_max < 5:
        raise ValueError("n_max must be at least 5")
    if report is None:
        report = census(n_max)
    reference = 1 / OTTER_ALPHA ** 4
    rows = []
    for n in range(5, n_max + 1):
        sigma, tau = report.sigma(n), report.tau(n)
        rows.append({
            "n": n,
            "sigma": sigma,
            "tau_n_minus_4": report.tau(n - 4),
            "holds": sigma >= report.tau(n - 4),
            "ratio": sigma / tau,
            "reference": reference,
        })
    return rows
