"""Disambiguation experiments: score sentence pairs, correlate with humans.

A dataset is a list of sentence pairs with gold ratings in [1, 7] and a
HIGH/LOW tag.  Several rows may share an id, one per annotator.  Models:

* ``categorical``   cosine of grammatically composed meanings (meanings of
                    different orders are embedded into the larger space),
* ``add``           cosine of the summed word vectors,
* ``multiply``      cosine of the pointwise-multiplied word vectors,
* ``weighted_add``  alpha * (noun vectors) + beta * (verb vector),
* ``verb_baseline`` cosine of the two verb representations alone.

For the folding models a verb contributes its order-1 tensor where it has
one, or its plain co-occurrence vector; ``verb_folding`` picks the policy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .composition import LexicalSemantics, align_orders, compose_sentence
from .errors import CompositionError, DegenerateDataError
from .pregroup import Lexicon, PregroupType, AtomicType
from .vectorspace import WeightedVector, add, cosine, pointwise_mul, scale

MODELS = ("categorical", "add", "multiply", "weighted_add", "verb_baseline")
HIGH = "HIGH"
LOW = "LOW"


@dataclass(frozen=True)
class SentencePair:
    pair_id: str
    sentence_1: tuple[str, ...]
    sentence_2: tuple[str, ...]
    gold_rating: float | None = None
    tag: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "sentence_1", tuple(self.sentence_1))
        object.__setattr__(self, "sentence_2", tuple(self.sentence_2))
        if not self.sentence_1 or not self.sentence_2:
            raise ValueError("both sentences must be non-empty")
        if self.gold_rating is not None and not 1.0 <= self.gold_rating <= 7.0:
            raise ValueError(f"rating {self.gold_rating} outside [1, 7]")
        if self.tag is not None and self.tag not in (HIGH, LOW):
            raise ValueError(f"tag must be HIGH or LOW, got {self.tag!r}")


@dataclass(frozen=True)
class ModelScore:
    mean_high: float
    mean_low: float
    rho: float


@dataclass(frozen=True)
class ExperimentReport:
    scores: Mapping[str, ModelScore]

    def table(self) -> str:
        lines = [f"{'Model':<14}{'High':>8}{'Low':>8}{'rho':>8}"]
        for model, s in self.scores.items():
            lines.append(f"{model:<14}{s.mean_high:>8.2f}{s.mean_low:>8.2f}{s.rho:>8.2f}")
        return "\n".join(lines)

    def tsv_lines(self) -> list[str]:
        rows = ["model\tmean_high\tmean_low\trho"]
        for model, s in self.scores.items():
            rows.append(f"{model}\t{s.mean_high!r}\t{s.mean_low!r}\t{s.rho!r}")
        return rows


def _word_roles(
    words: Sequence[str], grammar: Lexicon, s_base: str, n_base: str
) -> list[tuple[str, str]]:
    """Tag each word noun/adj/verb from its (first) lexicon type."""
    roles = []
    for word in words:
        typ = grammar.types_for(word)[0]
        if typ == PregroupType((AtomicType(n_base),)):
            roles.append((word, "noun"))
        elif typ == PregroupType((AtomicType(n_base), AtomicType(n_base, -1))):
            roles.append((word, "adj"))
        elif any(a.base == s_base for a in typ.atoms):
            roles.append((word, "verb"))
        else:
            roles.append((word, "noun"))
    return roles


def _fold_representation(
    word: str, role: str, lex: LexicalSemantics, verb_folding: str
) -> WeightedVector:
    """The vector a word contributes to the add/multiply/weighted folds."""
    if role == "noun":
        return lex.vector(word)
    tensor = lex.tensors.get(word)
    if verb_folding == "vector":
        return lex.vector(word)
    if tensor is not None and tensor.order == 1:
        return tensor.to_vector()
    if verb_folding == "tensor":
        raise CompositionError(
            f"cannot fold {word!r}: its tensor has order {tensor.order if tensor else '?'};"
            " provide a plain vector and use verb_folding='vector' or 'auto'"
        )
    # auto: fall back to the word's plain co-occurrence vector
    return lex.vector(word)


def _folded(
    words: Sequence[str],
    lex: LexicalSemantics,
    grammar: Lexicon,
    combine: str,
    verb_folding: str,
    alpha: float = 0.5,
    beta: float = 0.5,
    s_base: str = "s",
    n_base: str = "n",
) -> WeightedVector:
    roles = _word_roles(words, grammar, s_base, n_base)
    parts = []
    for word, role in roles:
        v = _fold_representation(word, role, lex, verb_folding)
        if combine == "weighted_add":
            v = scale(v, beta if role == "verb" else alpha)
        parts.append(v)
    out = parts[0]
    for v in parts[1:]:
        out = pointwise_mul(out, v) if combine == "multiply" else add(out, v)
    return out


def _the_verb(words: Sequence[str], grammar: Lexicon, s_base: str, n_base: str) -> str:
    verbs = [w for w, role in _word_roles(words, grammar, s_base, n_base) if role == "verb"]
    if len(verbs) != 1:
        raise CompositionError(f"expected exactly one verb in {' '.join(words)!r}")
    return verbs[0]


def model_similarity(
    pair: SentencePair,
    model: str,
    lex: LexicalSemantics,
    grammar: Lexicon,
    *,
    alpha: float = 0.5,
    beta: float = 0.5,
    verb_folding: str = "auto",
    s_base: str = "s",
    n_base: str = "n",
) -> float:
    """Similarity of the pair's sentences under one model, in [-1, 1]."""
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; choose from {MODELS}")
    if verb_folding not in ("auto", "tensor", "vector"):
        raise ValueError(f"unknown verb_folding {verb_folding!r}")
    s1, s2 = pair.sentence_1, pair.sentence_2
    if model == "categorical":
        m1 = compose_sentence(s1, lex, grammar, s_base, n_base)
        m2 = compose_sentence(s2, lex, grammar, s_base, n_base)
        m1, m2 = align_orders(m1, m2)
        return cosine(m1.value, m2.value)
    if model == "verb_baseline":
        v1 = _the_verb(s1, grammar, s_base, n_base)
        v2 = _the_verb(s2, grammar, s_base, n_base)
        t1, t2 = lex.tensors.get(v1), lex.tensors.get(v2)
        if verb_folding != "vector" and t1 is not None and t2 is not None and t1.order == t2.order:
            return cosine(t1, t2)
        return cosine(lex.vector(v1), lex.vector(v2))
    combine = {"add": "add", "multiply": "multiply", "weighted_add": "weighted_add"}[model]
    f1 = _folded(s1, lex, grammar, combine, verb_folding, alpha, beta, s_base, n_base)
    f2 = _folded(s2, lex, grammar, combine, verb_folding, alpha, beta, s_base, n_base)
    return cosine(f1, f2)


def average_ranks(values: Sequence[float]) -> list[float]:
    """1-based ranks; ties get the mean of the ranks they span."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    start = 0
    while start < len(order):
        stop = start
        while stop + 1 < len(order) and values[order[stop + 1]] == values[order[start]]:
            stop += 1
        mean_rank = (start + stop) / 2 + 1
        for position in range(start, stop + 1):
            ranks[order[position]] = mean_rank
        start = stop + 1
    return ranks


def spearman_rho(model_scores: Sequence[float], human_ratings: Sequence[float]) -> float:
    """Pearson correlation of average ranks.

    Raises ``DegenerateDataError`` when either list is constant (the
    correlation is undefined there, and silently returning 0 would hide a
    broken model).
    """
    if len(model_scores) != len(human_ratings):
        raise ValueError("score and rating lists must have equal length")
    if len(model_scores) < 2:
        raise ValueError("need at least two observations")
    if len(set(model_scores)) == 1 or len(set(human_ratings)) == 1:
        raise DegenerateDataError("correlation undefined on constant input")
    rx = average_ranks(model_scores)
    ry = average_ranks(human_ratings)
    n = len(rx)
    mx = math.fsum(rx) / n
    my = math.fsum(ry) / n
    cov = math.fsum((a - mx) * (b - my) for a, b in zip(rx, ry))
    vx = math.fsum((a - mx) ** 2 for a in rx)
    vy = math.fsum((b - my) ** 2 for b in ry)
    return cov / math.sqrt(vx * vy)


def high_low_means(
    pairs: Sequence[SentencePair], scores: Sequence[float]
) -> tuple[float, float]:
    """Mean model score over HIGH-tagged and LOW-tagged pairs."""
    if len(pairs) != len(scores):
        raise ValueError("pairs and scores must align")
    highs = [s for p, s in zip(pairs, scores) if p.tag == HIGH]
    lows = [s for p, s in zip(pairs, scores) if p.tag == LOW]
    if any(p.tag is None for p in pairs):
        raise ValueError("every pair needs a HIGH/LOW tag")
    if not highs or not lows:
        raise DegenerateDataError("need at least one pair in each tag class")
    return (math.fsum(highs) / len(highs), math.fsum(lows) / len(lows))


def _group_rows(dataset: Sequence[SentencePair]) -> list[tuple[SentencePair, list[float]]]:
    """Collapse annotator rows: one representative pair + all its ratings."""
    grouped: dict[str, tuple[SentencePair, list[float]]] = {}
    for row in dataset:
        if row.pair_id not in grouped:
            grouped[row.pair_id] = (row, [])
        head, ratings = grouped[row.pair_id]
        if (row.sentence_1, row.sentence_2, row.tag) != (
            head.sentence_1,
            head.sentence_2,
            head.tag,
        ):
            raise ValueError(f"conflicting rows for pair id {row.pair_id!r}")
        if row.gold_rating is not None:
            ratings.append(row.gold_rating)
    return list(grouped.values())


def run_experiment(
    dataset: Sequence[SentencePair],
    models: Sequence[str],
    lex: LexicalSemantics,
    grammar: Lexicon,
    *,
    alpha: float = 0.5,
    beta: float = 0.5,
    verb_folding: str = "auto",
    annotator_mode: str = "mean",
    s_base: str = "s",
    n_base: str = "n",
) -> ExperimentReport:
    """Score every pair under every model and correlate with the gold ratings.

    With several annotator rows per pair, ``annotator_mode="mean"``
    correlates against per-pair rating means and ``"pooled"`` repeats each
    pair's score once per individual rating.
    """
    if not dataset:
        raise ValueError("empty dataset")
    if annotator_mode not in ("mean", "pooled"):
        raise ValueError(f"unknown annotator_mode {annotator_mode!r}")
    grouped = _group_rows(dataset)
    if any(not ratings for _, ratings in grouped):
        raise ValueError("every pair needs at least one gold rating")
    report: dict[str, ModelScore] = {}
    for model in models:
        scores = [
            model_similarity(
                pair, model, lex, grammar,
                alpha=alpha, beta=beta, verb_folding=verb_folding,
                s_base=s_base, n_base=n_base,
            )
            for pair, _ in grouped
        ]
        if annotator_mode == "mean":
            xs = scores
            ys = [math.fsum(ratings) / len(ratings) for _, ratings in grouped]
        else:
            xs, ys = [], []
            for score, (_, ratings) in zip(scores, grouped):
                xs.extend([score] * len(ratings))
                ys.extend(ratings)
        rho = spearman_rho(xs, ys)
        mean_high, mean_low = high_low_means([p for p, _ in grouped], scores)
        report[model] = ModelScore(mean_high, mean_low, rho)
    return ExperimentReport(report)


def read_dataset(path) -> list[SentencePair]:
    """TSV rows ``id  sentence1  sentence2  rating  tag`` (ratings optional)."""
    rows = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if not 3 <= len(parts) <= 5:
                raise ValueError(f"{path}:{lineno}: expected 3-5 tab-separated fields")
            parts += [""] * (5 - len(parts))
            pair_id, s1, s2, rating, tag = parts
            rows.append(
                SentencePair(
                    pair_id,
                    tuple(s1.split()),
                    tuple(s2.split()),
                    float(rating) if rating else None,
                    tag or None,
                )
            )
    return rows


def save_dataset(path, dataset: Sequence[SentencePair]) -> None:
    from .vectorspace import atomic_write

    with atomic_write(path) as handle:
        for row in dataset:
            rating = "" if row.gold_rating is None else repr(row.gold_rating)
            handle.write(
                "\t".join(
                    (
                        row.pair_id,
                        " ".join(row.sentence_1),
                        " ".join(row.sentence_2),
                        rating,
                        row.tag or "",
                    )
                )
                + "\n"
            )
