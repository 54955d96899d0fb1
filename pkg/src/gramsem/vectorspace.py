"""Sparse weighted vectors and low-order tensors over a named basis space.

Vectors and tensors are coordinate-sparse: only nonzero weights are stored,
keyed by dense basis indices (or index tuples).  All values are immutable
after construction and every operation here is a pure function, so they can
be shared freely across threads.
"""

from __future__ import annotations

import math
import os
import tempfile
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np

from .errors import SpaceMismatchError

PLAIN = "plain"
STRUCTURED = "structured"


@dataclass(frozen=True)
class BasisRegistry:
    """Bijection between basis labels and dense indices for one space.

    ``kind`` is ``"plain"`` for bare-word bases and ``"structured"`` for
    relation-annotated bases, whose labels must look like ``rel-word``
    (e.g. ``arg-fluffy``, ``subj-chase``, ``obj-buy``).
    """

    name: str
    labels: tuple[str, ...]
    kind: str = PLAIN
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("space name must be non-empty")
        if self.kind not in (PLAIN, STRUCTURED):
            raise ValueError(f"unknown basis kind: {self.kind!r}")
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        index: dict[str, int] = {}
        for i, label in enumerate(labels):
            if not label:
                raise ValueError("basis labels must be non-empty")
            if label in index:
                raise ValueError(f"duplicate basis label: {label!r}")
            if self.kind == STRUCTURED:
                cut = label.find("-")
                if cut <= 0 or cut == len(label) - 1:
                    raise ValueError(
                        f"structured label must have the form 'rel-word': {label!r}"
                    )
            index[label] = i
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"label {label!r} not in space {self.name!r}") from None

    def label(self, i: int) -> str:
        return self.labels[i]


def _as_index(i, space: BasisRegistry) -> int:
    try:
        i = operator.index(i)
    except TypeError:
        raise ValueError(f"index {i!r} is not an integer") from None
    if not 0 <= i < len(space):
        raise ValueError(f"index {i} out of range for space {space.name!r}")
    return i


def _clean_entries(space: BasisRegistry, entries: Mapping[int, float]) -> dict[int, float]:
    clean: dict[int, float] = {}
    for i, w in entries.items():
        i = _as_index(i, space)
        w = float(w)
        if not math.isfinite(w):
            raise ValueError(f"non-finite weight {w!r} at index {i}")
        if w != 0.0:
            clean[i] = w
    return clean


@dataclass(frozen=True)
class WeightedVector:
    """Sparse map basis-index -> weight, bound to one space.

    Treat instances as immutable values; build modified copies through the
    module-level operations instead of mutating ``entries``.
    """

    space: BasisRegistry
    entries: Mapping[int, float]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _clean_entries(self.space, self.entries))

    @classmethod
    def from_labels(cls, space: BasisRegistry, weights: Mapping[str, float]) -> "WeightedVector":
        return cls(space, {space.index(label): w for label, w in weights.items()})

    @classmethod
    def basis_vector(cls, space: BasisRegistry, label: str) -> "WeightedVector":
        return cls(space, {space.index(label): 1.0})

    def get(self, i: int) -> float:
        return self.entries.get(i, 0.0)

    def weight(self, label: str) -> float:
        return self.entries.get(self.space.index(label), 0.0)

    def labelled(self) -> dict[str, float]:
        return {self.space.label(i): w for i, w in sorted(self.entries.items())}

    def to_dense(self) -> np.ndarray:
        out = np.zeros(len(self.space))
        for i, w in self.entries.items():
            out[i] = w
        return out

    def is_zero(self) -> bool:
        return not self.entries


@dataclass(frozen=True)
class SemTensor:
    """Sparse order-1/2/3 tensor over a space, stored as coordinate entries.

    Order-2 tensors hold transitive-verb (and general adjective) weights,
    order-3 ditransitive weights, order-1 the diagonal form used for
    intransitive verbs, adjectives and adverbs.
    """

    space: BasisRegistry
    order: int
    entries: Mapping[tuple[int, ...], float]

    def __post_init__(self) -> None:
        if self.order not in (1, 2, 3):
            raise ValueError(f"tensor order must be 1, 2 or 3, got {self.order}")
        clean: dict[tuple[int, ...], float] = {}
        for key, w in self.entries.items():
            key = tuple(_as_index(i, self.space) for i in key)
            if len(key) != self.order:
                raise ValueError(f"index tuple {key} does not match order {self.order}")
            w = float(w)
            if not math.isfinite(w):
                raise ValueError(f"non-finite weight {w!r} at {key}")
            if w != 0.0:
                clean[key] = w
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_labels(
        cls, space: BasisRegistry, order: int, weights: Mapping[tuple[str, ...] | str, float]
    ) -> "SemTensor":
        entries: dict[tuple[int, ...], float] = {}
        for key, w in weights.items():
            if isinstance(key, str):
                key = (key,)
            entries[tuple(space.index(label) for label in key)] = w
        return cls(space, order, entries)

    @classmethod
    def from_vector(cls, v: WeightedVector) -> "SemTensor":
        """View a vector as an order-1 tensor over the same space."""
        return cls(v.space, 1, {(i,): w for i, w in v.entries.items()})

    def get(self, key: tuple[int, ...]) -> float:
        return self.entries.get(tuple(key), 0.0)

    def to_vector(self) -> WeightedVector:
        if self.order != 1:
            raise ValueError("only order-1 tensors convert to vectors")
        return WeightedVector(self.space, {k[0]: w for k, w in self.entries.items()})

    def to_dense(self) -> np.ndarray:
        out = np.zeros((len(self.space),) * self.order)
        for key, w in self.entries.items():
            out[key] = w
        return out

    def labelled(self) -> dict[tuple[str, ...], float]:
        return {
            tuple(self.space.label(i) for i in key): w
            for key, w in sorted(self.entries.items())
        }

    def is_zero(self) -> bool:
        return not self.entries


Sparse = WeightedVector | SemTensor


def _check_same_space(a: Sparse, b: Sparse) -> None:
    if a.space != b.space:
        raise SpaceMismatchError(
            f"operands live in different spaces: {a.space.name!r} vs {b.space.name!r}"
        )
    a_order = a.order if isinstance(a, SemTensor) else None
    b_order = b.order if isinstance(b, SemTensor) else None
    if a_order != b_order:
        raise SpaceMismatchError(f"operand orders differ: {a_order} vs {b_order}")


def _merged_sum(a: Mapping, b: Mapping) -> dict:
    out = dict(a)
    for k, w in b.items():
        out[k] = out.get(k, 0.0) + w
    return out


def add(v: WeightedVector, w: WeightedVector) -> WeightedVector:
    """Component-wise sum of two vectors in the same space."""
    _check_same_space(v, w)
    return WeightedVector(v.space, _merged_sum(v.entries, w.entries))


def pointwise_mul(v: WeightedVector, w: WeightedVector) -> WeightedVector:
    """Component-wise product; only indices present in both survive."""
    _check_same_space(v, w)
    small, big = (v.entries, w.entries) if len(v.entries) <= len(w.entries) else (w.entries, v.entries)
    return WeightedVector(v.space, {i: a * big[i] for i, a in small.items() if i in big})


def scale(v: Sparse, factor: float) -> Sparse:
    """Multiply every weight by ``factor``."""
    if isinstance(v, SemTensor):
        return SemTensor(v.space, v.order, {k: w * factor for k, w in v.entries.items()})
    return WeightedVector(v.space, {i: w * factor for i, w in v.entries.items()})


def inner(v: Sparse, w: Sparse) -> float:
    """Sum of products over shared coordinates (the cup contraction).

    Iterates shared keys in sorted order so the result is deterministic and
    exactly symmetric in its arguments.
    """
    _check_same_space(v, w)
    common = v.entries.keys() & w.entries.keys()
    return sum(v.entries[k] * w.entries[k] for k in sorted(common))


def norm(v: Sparse) -> float:
    """Euclidean length sqrt(<v, v>)."""
    return math.sqrt(sum(w * w for _, w in sorted(v.entries.items())))


def cosine(v: Sparse, w: Sparse) -> float:
    """Inner product normalized by the lengths, in [-1, 1].

    Tensors of equal order over the same space are compared through their
    flattened coordinate form.  If either operand has zero length the
    similarity is 0 by convention: a vanished sentence vector carries no
    evidence, and comparisons against it must not abort an evaluation run.
    """
    _check_same_space(v, w)
    nv, nw = norm(v), norm(w)
    if nv == 0.0 or nw == 0.0:
        return 0.0
    if v.entries == w.entries:
        return 1.0
    value = inner(v, w) / (nv * nw)
    return max(-1.0, min(1.0, value))


def kronecker(v: WeightedVector, w: WeightedVector) -> SemTensor:
    """Tensor product of two vectors: entry (i, j) = v_i * w_j."""
    _check_same_space(v, w)
    entries = {
        (i, j): a * b
        for i, a in sorted(v.entries.items())
        for j, b in sorted(w.entries.items())
    }
    return SemTensor(v.space, 2, entries)


def kronecker3(u: WeightedVector, v: WeightedVector, w: WeightedVector) -> SemTensor:
    """Order-3 tensor product: entry (i, j, k) = u_i * v_j * w_k."""
    _check_same_space(u, v)
    _check_same_space(u, w)
    entries = {
        (i, j, k): a * b * c
        for i, a in sorted(u.entries.items())
        for j, b in sorted(v.entries.items())
        for k, c in sorted(w.entries.items())
    }
    return SemTensor(u.space, 3, entries)


def tensor_add(a: SemTensor, b: SemTensor) -> SemTensor:
    """Component-wise sum of two tensors of equal order."""
    _check_same_space(a, b)
    return SemTensor(a.space, a.order, _merged_sum(a.entries, b.entries))


def tensor_pointwise_mul(a: SemTensor, b: SemTensor) -> SemTensor:
    """Component-wise product of two tensors of equal order."""
    _check_same_space(a, b)
    small, big = (a.entries, b.entries) if len(a.entries) <= len(b.entries) else (b.entries, a.entries)
    return SemTensor(a.space, a.order, {k: x * big[k] for k, x in small.items() if k in big})


# ---------------------------------------------------------------------------
# File formats.  All files are UTF-8 TSV with a first line
#     #space <TAB> <name> <TAB> <kind>
# naming the space; later lines starting with '#' are comments.  Weights are
# printed with repr() (shortest exact round-trip, always >= 6 significant
# digits) and rows are sorted so rebuilding a file is byte-identical.
# ---------------------------------------------------------------------------


@contextmanager
def atomic_write(path: str | os.PathLike) -> Iterator:
    """Write to a temp file and rename into place; no partial file on failure."""
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            yield handle
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _write_header(handle, space: BasisRegistry) -> None:
    handle.write(f"#space\t{space.name}\t{space.kind}\n")


def _read_rows(
    path: str | os.PathLike, space: BasisRegistry | None
) -> tuple[tuple[str, str], list[str], list[list[str]]]:
    with open(path, encoding="utf-8") as handle:
        first = handle.readline()
        parts = first.rstrip("\n").split("\t")
        if len(parts) != 3 or parts[0] != "#space":
            raise ValueError(f"{path}: missing '#space' header line")
        name, kind = parts[1], parts[2]
        if space is not None and (space.name != name or space.kind != kind):
            raise ValueError(
                f"{path}: header names space {name!r} ({kind}), "
                f"expected {space.name!r} ({space.kind})"
            )
        rows = []
        comments = []
        for line in handle:
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                comments.append(line)
                continue
            rows.append(line.split("\t"))
        return (name, kind), comments, rows


def save_vector(path: str | os.PathLike, v: WeightedVector) -> None:
    with atomic_write(path) as handle:
        _write_header(handle, v.space)
        for label, w in sorted(v.labelled().items()):
            handle.write(f"{label}\t{w!r}\n")


def load_vector(path: str | os.PathLike, space: BasisRegistry) -> WeightedVector:
    _, _, rows = _read_rows(path, space)
    weights: dict[str, float] = {}
    for row in rows:
        if len(row) != 2:
            raise ValueError(f"{path}: expected 'label<TAB>weight', got {row!r}")
        label, w = row
        if label in weights:
            raise ValueError(f"{path}: duplicate label {label!r}")
        weights[label] = float(w)
    return WeightedVector.from_labels(space, weights)


def save_tensor(path: str | os.PathLike, t: SemTensor) -> None:
    with atomic_write(path) as handle:
        _write_header(handle, t.space)
        handle.write(f"#order\t{t.order}\n")
        for labels, w in sorted(t.labelled().items()):
            handle.write("\t".join(labels) + f"\t{w!r}\n")


def load_tensor(path: str | os.PathLike, space: BasisRegistry, order: int | None = None) -> SemTensor:
    _, comments, rows = _read_rows(path, space)
    for comment in comments:
        parts = comment.split("\t")
        if len(parts) == 2 and parts[0] == "#order" and order is None:
            order = int(parts[1])
    if not rows and order is None:
        raise ValueError(f"{path}: cannot infer order of an empty tensor file")
    entries: dict[tuple[str, ...], float] = {}
    for row in rows:
        key, w = tuple(row[:-1]), float(row[-1])
        if order is None:
            order = len(key)
        if len(key) != order:
            raise ValueError(f"{path}: inconsistent arity in row {row!r}")
        if key in entries:
            raise ValueError(f"{path}: duplicate entry {key!r}")
        entries[key] = w
    return SemTensor.from_labels(space, order, entries)


def save_vectors(
    path: str | os.PathLike, vectors: Mapping[str, WeightedVector], space: BasisRegistry
) -> None:
    """Write a word -> vector collection as rows ``word<TAB>label<TAB>weight``."""
    with atomic_write(path) as handle:
        _write_header(handle, space)
        for word in sorted(vectors):
            v = vectors[word]
            if v.space != space:
                raise SpaceMismatchError(f"vector for {word!r} is not in space {space.name!r}")
            for label, w in sorted(v.labelled().items()):
                handle.write(f"{word}\t{label}\t{w!r}\n")


def load_vectors(path: str | os.PathLike, space: BasisRegistry) -> dict[str, WeightedVector]:
    _, _, rows = _read_rows(path, space)
    weights: dict[str, dict[str, float]] = {}
    for row in rows:
        if len(row) != 3:
            raise ValueError(f"{path}: expected 'word<TAB>label<TAB>weight', got {row!r}")
        word, label, w = row
        per_word = weights.setdefault(word, {})
        if label in per_word:
            raise ValueError(f"{path}: duplicate entry for {word!r}/{label!r}")
        per_word[label] = float(w)
    return {word: WeightedVector.from_labels(space, ws) for word, ws in weights.items()}
