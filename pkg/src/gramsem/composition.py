"""Sentence meaning construction from word vectors, tensors and reductions.

A sentence's meaning is the pointwise product of the verb's weight tensor
with the tensor product of its (adjective-modified) argument vectors, so a
transitive sentence lives in the pair space over N, an intransitive one in
N itself and a ditransitive one in the triple space.  Meanings from smaller
spaces embed into larger ones by padding missing argument axes with the
superposition of all basis vectors, which leaves cosines between same-order
meanings unchanged.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Mapping, Sequence

from .errors import CompositionError, UngrammaticalError
from .pregroup import AtomicType, Lexicon, PregroupType, ReductionResult, is_sentence, reduce
from .vectorspace import (
    BasisRegistry,
    SemTensor,
    WeightedVector,
    load_tensor,
    load_vectors,
    save_tensor,
    save_vectors,
)


class SentenceSpace(Enum):
    """Where a composed meaning lives: N, N pair, N triple, or the 2-dim truth space."""

    N = "N"
    N2 = "N*N"
    N3 = "N*N*N"
    TRUTH = "B2"

    @property
    def order(self) -> int:
        return {"N": 1, "N*N": 2, "N*N*N": 3, "B2": 1}[self.value]


TRUTH_SPACE = BasisRegistry("B2", ("false", "true"))


@dataclass(frozen=True)
class SentenceMeaning:
    value: SemTensor
    sentence_space: SentenceSpace

    def __post_init__(self) -> None:
        if self.value.order != self.sentence_space.order:
            raise ValueError(
                f"tensor order {self.value.order} does not match "
                f"sentence space {self.sentence_space.value}"
            )
        if self.sentence_space is SentenceSpace.TRUTH and len(self.value.space) != 2:
            raise ValueError("truth-space meanings need a 2-element basis")


@dataclass(frozen=True)
class LexicalSemantics:
    """Word meanings: plain vectors plus relational tensors.

    ``vectors`` holds distributional vectors (nouns, and optionally verbs or
    adjectives for the folding baselines); ``tensors`` holds the relational
    representations whose order must match the word's grammatical arity.
    """

    space: BasisRegistry
    vectors: Mapping[str, WeightedVector]
    tensors: Mapping[str, SemTensor]

    def __post_init__(self) -> None:
        for word, v in self.vectors.items():
            if v.space != self.space:
                raise CompositionError(f"vector for {word!r} is not in space {self.space.name!r}")
        for word, t in self.tensors.items():
            if t.space != self.space:
                raise CompositionError(f"tensor for {word!r} is not in space {self.space.name!r}")
        object.__setattr__(self, "vectors", dict(self.vectors))
        object.__setattr__(self, "tensors", dict(self.tensors))

    def vector(self, word: str) -> WeightedVector:
        try:
            return self.vectors[word]
        except KeyError:
            raise CompositionError(f"no vector for word {word!r}") from None

    def tensor(self, word: str, order: int | None = None) -> SemTensor:
        try:
            t = self.tensors[word]
        except KeyError:
            raise CompositionError(f"no tensor for word {word!r}") from None
        if order is not None and t.order != order:
            raise CompositionError(
                f"tensor for {word!r} has order {t.order}, expected {order}"
            )
        return t


_SPACE_BY_ORDER = {1: SentenceSpace.N, 2: SentenceSpace.N2, 3: SentenceSpace.N3}


def compose_transitive(
    subj: WeightedVector, verb: SemTensor, obj: WeightedVector
) -> SentenceMeaning:
    """Meaning of subject-verb-object: entry (i, j) = C_ij * subj_i * obj_j."""
    _check_composable(verb, 2, subj, obj)
    entries = {}
    for i, a in subj.entries.items():
        for j, b in obj.entries.items():
            c = verb.entries.get((i, j))
            if c is not None:
                entries[(i, j)] = c * a * b
    return SentenceMeaning(SemTensor(subj.space, 2, entries), SentenceSpace.N2)


def compose_intransitive(subj: WeightedVector, verb: SemTensor) -> SentenceMeaning:
    """Meaning of subject-verb: entry i = C_i * subj_i, living in N itself."""
    _check_composable(verb, 1, subj)
    entries = {}
    for i, a in subj.entries.items():
        c = verb.entries.get((i,))
        if c is not None:
            entries[(i,)] = c * a
    return SentenceMeaning(SemTensor(subj.space, 1, entries), SentenceSpace.N)


def compose_ditransitive(
    subj: WeightedVector, verb: SemTensor, obj: WeightedVector, iobj: WeightedVector
) -> SentenceMeaning:
    """Meaning with two objects: entry (i, j, k) = C_ijk * subj_i * obj_j * iobj_k."""
    _check_composable(verb, 3, subj, obj, iobj)
    entries = {}
    for i, a in subj.entries.items():
        for j, b in obj.entries.items():
            for k, c in iobj.entries.items():
                w = verb.entries.get((i, j, k))
                if w is not None:
                    entries[(i, j, k)] = w * a * b * c
    return SentenceMeaning(SemTensor(subj.space, 3, entries), SentenceSpace.N3)


def compose_adjective(adj: SemTensor, noun: WeightedVector) -> WeightedVector:
    """Apply an adjective to a noun vector.

    Diagonal (order-1) adjectives filter the noun pointwise; full order-2
    adjectives act as a matrix: result_i = sum_j C_ij * noun_j.
    """
    if adj.order == 1:
        _check_composable(adj, 1, noun)
        entries = {}
        for i, a in noun.entries.items():
            c = adj.entries.get((i,))
            if c is not None:
                entries[i] = c * a
        return WeightedVector(noun.space, entries)
    if adj.order == 2:
        _check_composable(adj, 2, noun)
        entries: dict[int, float] = {}
        for (i, j), c in sorted(adj.entries.items()):
            a = noun.entries.get(j)
            if a is not None:
                entries[i] = entries.get(i, 0.0) + c * a
        return WeightedVector(noun.space, entries)
    raise CompositionError(f"adjective tensors must have order 1 or 2, got {adj.order}")


def _check_composable(verb: SemTensor, order: int, *vectors: WeightedVector) -> None:
    if verb.order != order:
        raise CompositionError(f"expected an order-{order} tensor, got order {verb.order}")
    for v in vectors:
        if v.space != verb.space:
            raise CompositionError(
                f"argument space {v.space.name!r} differs from tensor space {verb.space.name!r}"
            )


def embed_to_transitive(m: SentenceMeaning) -> SentenceMeaning:
    """Pad an N meaning into the pair space: entry (i, j) = m_i for every j.

    Equivalent to tensoring with the superposition of all basis vectors on
    the missing object axis; cosines between same-order meanings survive
    unchanged because inner products and norms scale uniformly.
    """
    if m.sentence_space is not SentenceSpace.N:
        raise CompositionError("only N meanings embed into the pair space")
    dim = len(m.value.space)
    entries = {
        (i, j): w for (i,), w in sorted(m.value.entries.items()) for j in range(dim)
    }
    return SentenceMeaning(SemTensor(m.value.space, 2, entries), SentenceSpace.N2)


def embed_to_ditransitive(m: SentenceMeaning) -> SentenceMeaning:
    """Pad an N or pair-space meaning into the triple space the same way."""
    dim = len(m.value.space)
    if m.sentence_space is SentenceSpace.N:
        entries = {
            (i, j, k): w
            for (i,), w in sorted(m.value.entries.items())
            for j in range(dim)
            for k in range(dim)
        }
    elif m.sentence_space is SentenceSpace.N2:
        entries = {
            (i, j, k): w
            for (i, j), w in sorted(m.value.entries.items())
            for k in range(dim)
        }
    else:
        raise CompositionError("only N and N*N meanings embed into the triple space")
    return SentenceMeaning(SemTensor(m.value.space, 3, entries), SentenceSpace.N3)


def align_orders(a: SentenceMeaning, b: SentenceMeaning) -> tuple[SentenceMeaning, SentenceMeaning]:
    """Embed the smaller-order meaning so both live in the same space."""
    target = max(a.sentence_space.order, b.sentence_space.order)

    def lift(m: SentenceMeaning) -> SentenceMeaning:
        if m.sentence_space.order == target:
            return m
        return embed_to_transitive(m) if target == 2 else embed_to_ditransitive(m)

    return lift(a), lift(b)


# ---------------------------------------------------------------------------
# Whole-sentence composition over the grammatical patterns used in practice:
# [Adj* N] V [Adj* N] [Adj* N] for verbs of arity 1-3, plus bare Adj* N
# noun phrases.  The reduction's contraction plan is recomputed from the
# recognized pattern and must match, which guards against dispatching a
# string whose cancellations mean something else.
# ---------------------------------------------------------------------------

_NOUN = PregroupType((AtomicType("n"),))
_ADJ = PregroupType((AtomicType("n"), AtomicType("n", -1)))


def _verb_arity(typ: PregroupType, s_base: str, n_base: str) -> int | None:
    atoms = typ.atoms
    if len(atoms) < 2 or atoms[0] != AtomicType(n_base, 1) or atoms[1] != AtomicType(s_base, 0):
        return None
    tail = atoms[2:]
    if any(a != AtomicType(n_base, -1) for a in tail) or len(tail) > 2:
        return None
    return 1 + len(tail)


def _classify(typ: PregroupType, s_base: str, n_base: str) -> tuple[str, int]:
    if typ == PregroupType((AtomicType(n_base),)):
        return ("noun", 0)
    if typ == PregroupType((AtomicType(n_base), AtomicType(n_base, -1))):
        return ("adj", 0)
    arity = _verb_arity(typ, s_base, n_base)
    if arity is not None:
        return ("verb", arity)
    raise CompositionError(f"unsupported word type for composition: {typ}")


def _choose_types(
    words: Sequence[str], grammar: Lexicon, s_base: str, n_base: str
) -> tuple[tuple[PregroupType, ...], ReductionResult]:
    """Pick one type per word so the string reduces to [s] (or failing that [n])."""
    options = [grammar.types_for(w) for w in words]
    noun_phrase = None
    for combo in product(*options):
        result = reduce(combo)
        if is_sentence(result, s_base):
            return combo, result
        if noun_phrase is None and result.residual.atoms == (AtomicType(n_base),):
            noun_phrase = (combo, result)
    if noun_phrase is not None:
        return noun_phrase
    raise UngrammaticalError(f"{' '.join(words)!r} does not reduce to a sentence or noun phrase")


def _expected_links(groups: list[list[int]], verb: int | None, offsets: list[int]) -> set[tuple[int, int]]:
    """Cup links the recognized pattern must produce, over flattened atoms."""
    links: set[tuple[int, int]] = set()
    heads = []
    for group in groups:
        *adjectives, noun = group
        for word in adjectives:
            links.add((offsets[word] + 1, offsets[word + 1]))
        heads.append(offsets[group[0]])
    if verb is not None:
        links.add((heads[0], offsets[verb]))
        # The verb's n^l atoms cancel inside-out: its last atom takes the
        # first object, the one before it the second object.
        for slot, head in enumerate(heads[1:]):
            links.add((offsets[verb + 1] - 1 - slot, head))
    return links


def compose_sentence(
    words: Sequence[str],
    lex: LexicalSemantics,
    grammar: Lexicon,
    s_base: str = "s",
    n_base: str = "n",
) -> SentenceMeaning:
    """Compose a whole sentence (or noun phrase) by its grammatical structure.

    Adjectives apply to their noun first (nearest first when stacked), then
    the verb's tensor contracts with the resulting argument vectors.  Raises
    ``UngrammaticalError`` when the types do not reduce, and
    ``CompositionError`` when semantics are missing or of the wrong arity.
    """
    if not words:
        raise CompositionError("cannot compose an empty word sequence")
    types, reduction = _choose_types(words, grammar, s_base, n_base)
    roles = [_classify(t, s_base, n_base) for t in types]

    offsets = []
    total = 0
    for t in types:
        offsets.append(total)
        total += len(t.atoms)

    groups: list[list[int]] = []
    verb: int | None = None
    arity = 0
    pending: list[int] = []
    for position, (role, info) in enumerate(roles):
        if role == "adj":
            pending.append(position)
        elif role == "noun":
            groups.append(pending + [position])
            pending = []
        else:
            if verb is not None or pending:
                raise CompositionError("unsupported sentence pattern")
            verb = position
            arity = info
    if pending:
        raise CompositionError("dangling adjective without a noun")
    expected_groups = 0 if verb is None else arity
    if verb is None:
        if len(groups) != 1:
            raise CompositionError("unsupported sentence pattern")
    elif len(groups) != expected_groups or verb != len(groups[0]):
        raise CompositionError("unsupported sentence pattern")

    if set(reduction.links) != _expected_links(groups, verb, offsets):
        raise CompositionError("contraction plan does not match the recognized pattern")

    def noun_vector(group: list[int]) -> WeightedVector:
        *adjectives, noun = group
        vector = lex.vector(words[noun])
        for adjective in reversed(adjectives):
            vector = compose_adjective(lex.tensor(words[adjective]), vector)
        return vector

    arguments = [noun_vector(g) for g in groups]
    if verb is None:
        return SentenceMeaning(SemTensor.from_vector(arguments[0]), SentenceSpace.N)
    tensor = lex.tensor(words[verb], order=arity)
    if arity == 1:
        return compose_intransitive(arguments[0], tensor)
    if arity == 2:
        return compose_transitive(arguments[0], tensor, arguments[1])
    return compose_ditransitive(arguments[0], tensor, arguments[1], arguments[2])


# ---------------------------------------------------------------------------
# Truth-theoretic instantiation: the verb tensor is the indicator of a
# relation over a domain of individuals, and a composed sentence is true
# exactly when it carries any weight.
# ---------------------------------------------------------------------------


def truth_theoretic_verb(
    relation: Sequence[tuple[str, str]] | set[tuple[str, str]],
    domain_space: BasisRegistry,
) -> SemTensor:
    """Indicator tensor of a binary relation over named individuals."""
    entries = {}
    for subject, obj in relation:
        entries[(domain_space.index(subject), domain_space.index(obj))] = 1.0
    return SemTensor(domain_space, 2, entries)


def truth_value(m: SentenceMeaning) -> bool:
    """A meaning is true when its total mass is positive."""
    return sum(m.value.entries.values()) > 0


def truth_meaning(m: SentenceMeaning) -> SentenceMeaning:
    """Project a meaning onto the 2-dimensional truth space basis."""
    index = TRUTH_SPACE.index("true" if truth_value(m) else "false")
    return SentenceMeaning(SemTensor(TRUTH_SPACE, 1, {(index,): 1.0}), SentenceSpace.TRUTH)


# ---------------------------------------------------------------------------
# Directory layout: nouns.tsv holds the plain word vectors (nouns plus any
# verb/adjective vectors the folding baselines need), verbs/<verb>.tsv and
# adjectives/<adj>.tsv hold the relational tensors.
# ---------------------------------------------------------------------------


def load_semantics(directory: str | os.PathLike, space: BasisRegistry) -> LexicalSemantics:
    directory = os.fspath(directory)
    vectors_path = os.path.join(directory, "nouns.tsv")
    vectors = load_vectors(vectors_path, space) if os.path.exists(vectors_path) else {}
    tensors: dict[str, SemTensor] = {}
    for sub in ("verbs", "adjectives"):
        folder = os.path.join(directory, sub)
        if not os.path.isdir(folder):
            continue
        for entry in sorted(os.listdir(folder)):
            if not entry.endswith(".tsv"):
                continue
            word = entry[: -len(".tsv")]
            if word in tensors:
                raise CompositionError(f"duplicate tensor definition for {word!r}")
            tensors[word] = load_tensor(os.path.join(folder, entry), space)
    return LexicalSemantics(space, vectors, tensors)


def save_semantics(
    directory: str | os.PathLike,
    lex: LexicalSemantics,
    adjectives: Sequence[str] = (),
) -> None:
    """Write the directory layout; ``adjectives`` names the tensors that go
    under adjectives/ (order-1 tensors are otherwise intransitive verbs)."""
    directory = os.fspath(directory)
    os.makedirs(os.path.join(directory, "verbs"), exist_ok=True)
    os.makedirs(os.path.join(directory, "adjectives"), exist_ok=True)
    save_vectors(os.path.join(directory, "nouns.tsv"), lex.vectors, lex.space)
    adjective_set = set(adjectives)
    for word, tensor in sorted(lex.tensors.items()):
        sub = "adjectives" if word in adjective_set else "verbs"
        save_tensor(os.path.join(directory, sub, f"{word}.tsv"), tensor)
