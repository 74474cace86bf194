"""Census of prime positive braid knots of small genus.

A knot of genus g given by a positive braid on n strands, with every
generator used at least twice (otherwise the braid destabilises or the
closure splits), has b1 = 2g and length 2g + n - 1, which forces n <= 2g.
Words are generated directly in their lexicographic normal form for
commutation of distant generators, kept only if minimal under cyclic rotation
as well, and then deduplicated by the oriented canonical code of the linking
graph.
"""

from __future__ import annotations

import csv
import json
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .braidword import BraidWord, linking_graph
from .invariants import Fingerprint, fingerprint
from .oracle import alexander_closure, genus_from_word
from .planegraph import canonical_code

Word = tuple[int, ...]


class CensusError(RuntimeError):
    pass


def _commute(a: int, b: int) -> bool:
    return abs(a - b) >= 2


def lex_normal_form(word: Sequence[int]) -> Word:
    """Lexicographically least word equal to ``word`` up to commuting distant generators."""
    rest = list(word)
    out = []
    while rest:
        # among letters that commute to the front, take the smallest
        best = None
        for i, a in enumerate(rest):
            if (best is None or a < rest[best]) and all(_commute(a, b) for b in rest[:i]):
                best = i
        out.append(rest.pop(best))
    return tuple(out)


def is_lex_normal(word: Sequence[int]) -> bool:
    for k in range(1, len(word)):
        if not _may_append(word[:k], word[k]):
            return False
    return True


def _may_append(word: Sequence[int], a: int) -> bool:
    for b in reversed(word):
        if not _commute(a, b):
            return True
        if b > a:
            return False
    return True


def cyclic_class(word: Sequence[int], stop_below: Word | None = None) -> set[Word] | None:
    """All normal forms reachable by cyclic rotation and commutation.

    If ``stop_below`` is given and a smaller normal form turns up, return None.
    """
    start = lex_normal_form(word)
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for i, a in enumerate(w):
            if not all(_commute(a, b) for b in w[:i]):
                continue
            nxt = lex_normal_form(w[:i] + w[i + 1:] + (a,))
            if nxt in seen:
                continue
            if stop_below is not None and nxt < stop_below:
                return None
            seen.add(nxt)
            stack.append(nxt)
    return seen


def canonical_word(word: Sequence[int]) -> Word:
    """Least normal form over cyclic rotation and commutation."""
    return min(cyclic_class(word))


def is_canonical(word: Word) -> bool:
    """Whether a word already in normal form is the least of its cyclic class."""
    # cheap necessary test: no plain rotation is smaller
    for k in range(1, len(word)):
        if word[k:] + word[:k] < word:
            return False
    return cyclic_class(word, stop_below=word) is not None


def _is_knot(word: Sequence[int], n: int) -> bool:
    perm = list(range(n))
    for i in word:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    s, steps = perm[0], 1
    while s != 0:
        s = perm[s]
        steps += 1
    return steps == n


def normal_words(n: int, length: int, prefix: Word = (1,), min_uses: int = 2) -> Iterator[Word]:
    """Normal-form words over ``1..n-1`` of the given length extending ``prefix``, each generator used enough."""
    counts = [0] * n
    for a in prefix:
        counts[a] += 1
    word = list(prefix)
    gens = range(1, n)

    def missing() -> int:
        return sum(max(0, min_uses - counts[i]) for i in gens)

    def rec():
        rem = length - len(word)
        if rem == 0:
            if missing() == 0:
                yield tuple(word)
            return
        if missing() > rem:
            return
        for a in gens:
            if _may_append(word, a):
                word.append(a)
                counts[a] += 1
                yield from rec()
                counts[a] -= 1
                word.pop()

    if len(prefix) > length or not is_lex_normal(prefix):
        return
    yield from rec()


def candidate_words(n: int, length: int, prefix: Word = (1,)) -> Iterator[Word]:
    """Canonical words whose closure is a knot."""
    for w in normal_words(n, length, prefix):
        if _is_knot(w, n) and is_canonical(w):
            yield w


@dataclass(frozen=True)
class CensusRecord:
    word: Word
    strands: int
    genus: int
    fingerprint: Fingerprint
    oriented_code: str
    unoriented_code: str
    class_size: int = 1

    @property
    def length(self) -> int:
        return len(self.word)

    def word_text(self) -> str:
        return " ".join(map(str, self.word))

    def sort_key(self) -> tuple:
        return (self.genus, self.strands, self.length, self.word)

    def to_json(self) -> dict:
        return {
            "word": self.word_text(),
            "strands": self.strands,
            "length": self.length,
            "genus": self.genus,
            "fingerprint": self.fingerprint.to_json(),
            "oriented_code": self.oriented_code,
            "unoriented_mirror_code": self.unoriented_code,
            "class_size": self.class_size,
        }


def evaluate(word: Word, strands: int) -> CensusRecord | None:
    """Record for a canonical word, or None when the linking graph is disconnected."""
    bw = BraidWord.of(word, strands)
    g = linking_graph(bw)
    if not g.is_connected():
        return None
    fp = fingerprint(g)
    _, genus = genus_from_word(bw)
    if fp.alexander != alexander_closure(bw) or fp.genus != genus or fp.components != 1:
        raise CensusError(f"pipeline and oracle disagree on {bw}")
    return CensusRecord(
        word,
        strands,
        genus,
        fp,
        canonical_code(g).hex(),
        canonical_code(g, "unoriented", "also-mirror").hex(),
    )


def work_units(max_genus: int, prefix_len: int = 4) -> list[tuple[int, int, Word]]:
    """(strands, length, prefix) jobs covering the whole census."""
    units = []
    for genus in range(1, max_genus + 1):
        for n in range(2, 2 * genus + 1):
            length = 2 * genus + n - 1
            k = min(prefix_len, length)
            for p in _prefixes(n, k):
                units.append((n, length, p))
    return units


def _prefixes(n: int, k: int) -> list[Word]:
    out = [(1,)]
    for _ in range(k - 1):
        out = [w + (a,) for w in out for a in range(1, n) if _may_append(w, a)]
    return out


def _run_unit(unit: tuple[int, int, Word]) -> list[CensusRecord]:
    n, length, prefix = unit
    out = []
    for w in candidate_words(n, length, prefix):
        rec = evaluate(w, n)
        if rec is not None:
            out.append(rec)
    return out


def default_jobs() -> int:
    env = os.environ.get("CHECKER_JOBS")
    if env:
        return max(1, int(env))
    return 1


def raw_records(max_genus: int, jobs: int | None = None) -> list[CensusRecord]:
    """Every canonical knot word with connected linking graph, in canonical order."""
    if max_genus < 1:
        raise ValueError("maxGenus must be at least 1")
    jobs = default_jobs() if jobs is None else jobs
    units = work_units(max_genus)
    if jobs <= 1:
        chunks = map(_run_unit, units)
        records = [r for chunk in chunks for r in chunk]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = [r for chunk in pool.map(_run_unit, units, chunksize=4) for r in chunk]
    records.sort(key=CensusRecord.sort_key)
    return records


def dedupe(records: Iterable[CensusRecord]) -> list[CensusRecord]:
    """One record per oriented graph code (the first in canonical order), checking bucket homogeneity."""
    buckets: dict[str, list[CensusRecord]] = defaultdict(list)
    for r in records:
        buckets[r.oriented_code].append(r)
    out = []
    for code, group in buckets.items():
        keys = {r.fingerprint.key() for r in group}
        if len(keys) != 1:
            raise CensusError(f"graph code {code[:16]}... carries {len(keys)} fingerprints")
        first = min(group, key=CensusRecord.sort_key)
        out.append(CensusRecord(first.word, first.strands, first.genus, first.fingerprint,
                                first.oriented_code, first.unoriented_code, len(group)))
    out.sort(key=CensusRecord.sort_key)
    return out


def census(max_genus: int, jobs: int | None = None) -> list[CensusRecord]:
    return dedupe(raw_records(max_genus, jobs))


def fingerprint_classes(records: Iterable[CensusRecord]) -> dict[int, list[Fingerprint]]:
    """Distinct fingerprints per genus, in order of first appearance."""
    out: dict[int, dict[tuple, Fingerprint]] = defaultdict(dict)
    for r in records:
        out[r.genus].setdefault(r.fingerprint.key(), r.fingerprint)
    return {g: list(d.values()) for g, d in sorted(out.items())}


def write_jsonl(records: Iterable[CensusRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(json.dumps(r.to_json(), separators=(",", ":")) + "\n")


def write_csv(records: Iterable[CensusRecord], path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["word", "strands", "length", "genus", "alexander", "signature", "determinant", "class_size"])
        for r in records:
            fp = r.fingerprint
            w.writerow([r.word_text(), r.strands, r.length, r.genus, str(fp.alexander),
                        "" if fp.signature is None else fp.signature, fp.determinant, r.class_size])


def read_jsonl(path: str) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]
