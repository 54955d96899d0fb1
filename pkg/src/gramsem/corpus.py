"""Count-based construction of noun vectors and verb/adjective tensors.

Noun vectors come from either plain co-occurrence counts (a basis word seen
within a token window of the target) or structured dependency-property
counts (the target was the subject of some verb, object of some verb, or
argument of some adjective).  Relational word tensors are Kronecker sums of
argument vectors over the word's corpus occurrences.

Input text is assumed pre-tokenized and lowercased, one document per line;
triples and adjective-argument records arrive pre-parsed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import SpaceMismatchError
from .vectorspace import (
    PLAIN,
    STRUCTURED,
    BasisRegistry,
    SemTensor,
    WeightedVector,
    kronecker,
    kronecker3,
    tensor_add,
)


@dataclass(frozen=True)
class TripleRecord:
    """One verb occurrence: subject, verb, optional direct/indirect object."""

    subject: str
    verb: str
    obj: str | None = None
    iobj: str | None = None

    def __post_init__(self) -> None:
        if not self.subject or not self.verb:
            raise ValueError("triple needs a non-empty subject and verb")
        if self.iobj is not None and self.obj is None:
            raise ValueError("a triple with an indirect object needs a direct object")


@dataclass
class CountAccumulator:
    """Mutable counting state: per-target basis counts plus document frequencies.

    The only mutable stage of the pipeline; builders fill one (or several,
    in parallel) and ``merge`` combines them by pointwise sum.
    """

    space: BasisRegistry
    counts: dict[str, dict[int, int]] = field(default_factory=dict)
    doc_frequency: dict[int, int] = field(default_factory=dict)
    doc_count: int = 0

    def bump(self, target: str, basis_index: int, by: int = 1) -> None:
        row = self.counts.setdefault(target, {})
        row[basis_index] = row.get(basis_index, 0) + by

    def count(self, target: str, label: str) -> int:
        return self.counts.get(target, {}).get(self.space.index(label), 0)

    def merge(self, other: "CountAccumulator") -> "CountAccumulator":
        """Pointwise-sum combination; doc_count is additive."""
        if self.space != other.space:
            raise SpaceMismatchError("cannot merge accumulators over different spaces")
        merged = CountAccumulator(self.space)
        for acc in (self, other):
            for target, row in acc.counts.items():
                for i, c in row.items():
                    merged.bump(target, i, c)
            for i, c in acc.doc_frequency.items():
                merged.doc_frequency[i] = merged.doc_frequency.get(i, 0) + c
            merged.doc_count += acc.doc_count
        return merged


def count_cooccurrence(
    documents: Iterable[Sequence[str]],
    targets: Iterable[str],
    basis: BasisRegistry,
    window: int = 5,
) -> CountAccumulator:
    """Count basis words within ``window`` tokens of each target occurrence.

    Windows never cross document boundaries; the occurrence position itself
    is excluded.  Tokens that are neither targets nor basis words are
    ignored.  Document frequencies count, per basis word, the number of
    documents it occurs in at all.
    """
    if basis.kind != PLAIN:
        raise ValueError("co-occurrence counting needs a plain basis")
    if window < 1:
        raise ValueError("window must be >= 1")
    target_set = set(targets)
    acc = CountAccumulator(basis)
    for tokens in documents:
        acc.doc_count += 1
        seen: set[int] = set()
        for position, token in enumerate(tokens):
            if token in basis:
                seen.add(basis.index(token))
            if token not in target_set:
                continue
            lo = max(0, position - window)
            hi = min(len(tokens), position + window + 1)
            for neighbour in range(lo, hi):
                if neighbour == position:
                    continue
                context = tokens[neighbour]
                if context in basis:
                    acc.bump(token, basis.index(context))
        for i in seen:
            acc.doc_frequency[i] = acc.doc_frequency.get(i, 0) + 1
    return acc


def count_properties(
    triples: Iterable[TripleRecord],
    adjective_pairs: Iterable[tuple[str, str]],
    targets: Iterable[str],
    basis: BasisRegistry,
) -> CountAccumulator:
    """Count dependency properties on a structured basis.

    A target scores on ``subj-V`` when it is the subject of verb V, on
    ``obj-V`` (``iobj-V``) as its direct (indirect) object, and on ``arg-A``
    as the argument of adjective A.  Property labels missing from the basis
    are skipped.  Each record counts as one document for frequencies.
    """
    if basis.kind != STRUCTURED:
        raise ValueError("property counting needs a structured basis")
    target_set = set(targets)
    acc = CountAccumulator(basis)

    def record(events: list[tuple[str | None, str]]) -> None:
        acc.doc_count += 1
        seen: set[int] = set()
        for word, label in events:
            if label not in basis:
                continue
            i = basis.index(label)
            seen.add(i)
            if word is not None and word in target_set:
                acc.bump(word, i)
        for i in seen:
            acc.doc_frequency[i] = acc.doc_frequency.get(i, 0) + 1

    for triple in triples:
        events = [(triple.subject, f"subj-{triple.verb}")]
        if triple.obj is not None:
            events.append((triple.obj, f"obj-{triple.verb}"))
        if triple.iobj is not None:
            events.append((triple.iobj, f"iobj-{triple.verb}"))
        record(events)
    for adjective, argument in adjective_pairs:
        record([(argument, f"arg-{adjective}")])
    return acc


def raw_vectors(acc: CountAccumulator) -> dict[str, WeightedVector]:
    """Raw counts as vector weights."""
    return {
        target: WeightedVector(acc.space, {i: float(c) for i, c in row.items()})
        for target, row in acc.counts.items()
    }


def tfidf(acc: CountAccumulator) -> dict[str, WeightedVector]:
    """TF/IDF weighting: count * ln(doc_count / doc_frequency).

    The natural-log variant is used throughout so reported numbers are
    reproducible; a basis word seen in every document weighs zero, and one
    never seen at all also weighs zero.
    """
    if acc.doc_count < 1:
        raise ValueError("tfidf needs at least one counted document")
    idf = {
        i: math.log(acc.doc_count / df) if df > 0 else 0.0
        for i, df in acc.doc_frequency.items()
    }
    out: dict[str, WeightedVector] = {}
    for target, row in acc.counts.items():
        weights = {i: c * idf.get(i, 0.0) for i, c in row.items()}
        out[target] = WeightedVector(acc.space, weights)
    return out


def _zero_tensor(order: int, space: BasisRegistry | None, vectors: Sequence) -> SemTensor:
    if vectors:
        space = vectors[0].space if not isinstance(vectors[0], tuple) else vectors[0][0].space
    if space is None:
        raise ValueError("an empty occurrence list needs an explicit space")
    return SemTensor(space, order, {})


def build_verb_tensor(
    occurrences: Sequence[tuple[WeightedVector, WeightedVector]],
    *,
    space: BasisRegistry | None = None,
) -> SemTensor:
    """Transitive verb weights: the Kronecker-product sum subj_k (x) obj_k."""
    total = _zero_tensor(2, space, occurrences)
    for subj, obj in occurrences:
        total = tensor_add(total, kronecker(subj, obj))
    return total


def build_ditransitive_tensor(
    occurrences: Sequence[tuple[WeightedVector, WeightedVector, WeightedVector]],
    *,
    space: BasisRegistry | None = None,
) -> SemTensor:
    """Ditransitive verb weights: sum of subj (x) obj (x) iobj products."""
    total = _zero_tensor(3, space, occurrences)
    for subj, obj, iobj in occurrences:
        total = tensor_add(total, kronecker3(subj, obj, iobj))
    return total


def build_intransitive_tensor(
    subjects: Sequence[WeightedVector], *, space: BasisRegistry | None = None
) -> SemTensor:
    """Intransitive verb weights: the order-1 sum of its subject vectors."""
    total = _zero_tensor(1, space, subjects)
    for subj in subjects:
        total = tensor_add(total, SemTensor.from_vector(subj))
    return total


def build_adjective_tensor(
    arguments: Sequence[WeightedVector], *, space: BasisRegistry | None = None
) -> SemTensor:
    """Adjective weights in diagonal form: the order-1 sum of argument vectors."""
    total = _zero_tensor(1, space, arguments)
    for argument in arguments:
        total = tensor_add(total, SemTensor.from_vector(argument))
    return total


# ---------------------------------------------------------------------------
# Readers.  Corpus: one whitespace-tokenized document per line.  Triples:
# TSV subject/verb/object(/indirect object), empty object = intransitive.
# Adjectives: TSV adjective/argument.  Basis: one label per line.
# ---------------------------------------------------------------------------


def read_corpus(path) -> list[list[str]]:
    documents = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            tokens = line.split()
            if tokens:
                documents.append(tokens)
    return documents


def read_triples(path) -> list[TripleRecord]:
    records = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if not 2 <= len(parts) <= 4:
                raise ValueError(f"{path}:{lineno}: expected 2-4 tab-separated fields")
            parts += [""] * (4 - len(parts))
            subject, verb, obj, iobj = parts
            records.append(
                TripleRecord(subject, verb, obj or None, iobj or None)
            )
    return records


def read_adjective_pairs(path) -> list[tuple[str, str]]:
    pairs = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise ValueError(f"{path}:{lineno}: expected 'adjective<TAB>argument'")
            pairs.append((parts[0], parts[1]))
    return pairs


def read_basis(path, name: str | None = None, kind: str = PLAIN) -> BasisRegistry:
    labels = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            label = line.strip()
            if label and not label.startswith("#"):
                labels.append(label)
    if name is None:
        import os

        name = os.path.splitext(os.path.basename(path))[0]
    return BasisRegistry(name, tuple(labels), kind)
