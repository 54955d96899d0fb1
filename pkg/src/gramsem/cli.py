"""Command-line entry point for batch builds, similarity queries and evaluation.

Subcommands: ``build-nouns``, ``build-verb``, ``build-adj``, ``sim``,
``eval``.  All outputs are plain TSV written via write-then-rename with
sorted rows, so reruns over identical inputs are byte-identical and a
failed run never leaves a partial file.  Skipped-record counts go to a
single machine-readable ``summary`` line on stderr.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import composition, corpus, evaluation, pregroup, vectorspace
from .errors import GramsemError

_ALL_MODELS = list(evaluation.MODELS)


_SPACE_NAME = "N"


def _space_from(basis_path: str, semantics_dir: str | None) -> vectorspace.BasisRegistry:
    """Basis registry for the CLI run; nouns.tsv's header fixes name and kind."""
    name = _SPACE_NAME
    kind = vectorspace.PLAIN
    if semantics_dir:
        nouns_path = os.path.join(semantics_dir, "nouns.tsv")
        if os.path.exists(nouns_path):
            with open(nouns_path, encoding="utf-8") as handle:
                parts = handle.readline().rstrip("\n").split("\t")
            if len(parts) == 3 and parts[0] == "#space":
                name, kind = parts[1], parts[2]
    return corpus.read_basis(basis_path, name=name, kind=kind)


def _summary(**counts) -> None:
    fields = "\t".join(f"{key}={value}" for key, value in counts.items())
    print(f"summary\t{fields}", file=sys.stderr)


def cmd_build_nouns(args) -> int:
    space = corpus.read_basis(args.basis, name=_SPACE_NAME, kind=vectorspace.PLAIN)
    if not space.labels:
        raise GramsemError(f"basis file {args.basis} is empty")
    documents = corpus.read_corpus(args.corpus)
    if not documents:
        raise GramsemError(f"corpus file {args.corpus} has no documents")
    targets = sorted({token for doc in documents for token in doc})
    acc = corpus.count_cooccurrence(documents, targets, space, window=args.window)
    vectors = corpus.tfidf(acc) if args.weighting == "tfidf" else corpus.raw_vectors(acc)
    out = args.out or "nouns.tsv"
    vectorspace.save_vectors(out, vectors, space)
    _summary(documents=len(documents), targets=len(targets), written=out)
    return 0


def _load_noun_vectors(args, space):
    nouns_path = os.path.join(args.semantics_dir, "nouns.tsv")
    if not os.path.exists(nouns_path):
        raise GramsemError(f"{nouns_path} not found; run build-nouns first")
    return vectorspace.load_vectors(nouns_path, space)


def cmd_build_verb(args) -> int:
    space = _space_from(args.basis, args.semantics_dir)
    vectors = _load_noun_vectors(args, space)
    records = [t for t in corpus.read_triples(args.triples) if t.verb == args.verb]
    if not records:
        raise GramsemError(f"verb {args.verb!r} does not occur in {args.triples}")
    arity = 3 if records[0].iobj else (2 if records[0].obj else 1)
    skipped = 0
    occurrences = []
    for record in records:
        nouns = [record.subject, record.obj, record.iobj][: arity if arity > 1 else 1]
        record_arity = 3 if record.iobj else (2 if record.obj else 1)
        if record_arity != arity or any(n not in vectors for n in nouns if n):
            skipped += 1
            continue
        if arity == 1:
            occurrences.append(vectors[record.subject])
        elif arity == 2:
            occurrences.append((vectors[record.subject], vectors[record.obj]))
        else:
            occurrences.append(
                (vectors[record.subject], vectors[record.obj], vectors[record.iobj])
            )
    builder = {
        1: corpus.build_intransitive_tensor,
        2: corpus.build_verb_tensor,
        3: corpus.build_ditransitive_tensor,
    }[arity]
    tensor = builder(occurrences, space=space)
    out = args.out or os.path.join(args.semantics_dir, "verbs", f"{args.verb}.tsv")
    os.makedirs(os.path.dirname(out) or ".", exist_ok=True)
    vectorspace.save_tensor(out, tensor)
    _summary(verb=args.verb, occurrences=len(occurrences), skipped_triples=skipped, written=out)
    return 0


def cmd_build_adj(args) -> int:
    space = _space_from(args.basis, args.semantics_dir)
    vectors = _load_noun_vectors(args, space)
    pairs = [p for p in corpus.read_adjective_pairs(args.triples) if p[0] == args.adjective]
    if not pairs:
        raise GramsemError(f"adjective {args.adjective!r} does not occur in {args.triples}")
    skipped = 0
    arguments = []
    for _, noun in pairs:
        if noun not in vectors:
            skipped += 1
            continue
        arguments.append(vectors[noun])
    tensor = corpus.build_adjective_tensor(arguments, space=space)
    out = args.out or os.path.join(args.semantics_dir, "adjectives", f"{args.adjective}.tsv")
    os.makedirs(os.path.dirname(out) or ".", exist_ok=True)
    vectorspace.save_tensor(out, tensor)
    _summary(
        adjective=args.adjective, occurrences=len(arguments), skipped_pairs=skipped, written=out
    )
    return 0


def cmd_sim(args) -> int:
    space = _space_from(args.basis, args.semantics_dir)
    lex = composition.load_semantics(args.semantics_dir, space)
    grammar = pregroup.load_lexicon(args.lexicon)
    pair = evaluation.SentencePair(
        "cli", tuple(args.sentence1.split()), tuple(args.sentence2.split())
    )
    value = evaluation.model_similarity(pair, args.model, lex, grammar)
    print(f"{value:.6f}")
    return 0


def cmd_eval(args) -> int:
    space = _space_from(args.basis, args.semantics_dir)
    lex = composition.load_semantics(args.semantics_dir, space)
    grammar = pregroup.load_lexicon(args.lexicon)
    dataset = evaluation.read_dataset(args.dataset)
    models = args.model or _ALL_MODELS
    report = evaluation.run_experiment(dataset, models, lex, grammar)
    print(report.table())
    if args.out:
        with vectorspace.atomic_write(args.out) as handle:
            for line in report.tsv_lines():
                handle.write(line + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gramsem",
        description="Grammar-driven tensor composition of word vectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-nouns", help="count co-occurrences and write word vectors")
    p.add_argument("--corpus", required=True, help="one tokenized document per line")
    p.add_argument("--basis", required=True, help="one basis label per line")
    p.add_argument("--window", type=int, default=5, help="context window size (default 5)")
    p.add_argument("--weighting", choices=("raw", "tfidf"), default="tfidf")
    p.add_argument("--out", help="output vector file (default nouns.tsv)")
    p.set_defaults(func=cmd_build_nouns)

    p = sub.add_parser("build-verb", help="sum argument Kronecker products into a verb tensor")
    p.add_argument("verb")
    p.add_argument("--triples", required=True, help="TSV subject/verb/object(/indirect)")
    p.add_argument("--basis", required=True)
    p.add_argument("--semantics-dir", required=True, help="directory holding nouns.tsv")
    p.add_argument("--out", help="output tensor file (default <dir>/verbs/<verb>.tsv)")
    p.set_defaults(func=cmd_build_verb)

    p = sub.add_parser("build-adj", help="sum argument vectors into an adjective tensor")
    p.add_argument("adjective")
    p.add_argument("--triples", required=True, help="TSV adjective/argument pairs")
    p.add_argument("--basis", required=True)
    p.add_argument("--semantics-dir", required=True)
    p.add_argument("--out", help="output tensor file (default <dir>/adjectives/<adj>.tsv)")
    p.set_defaults(func=cmd_build_adj)

    p = sub.add_parser("sim", help="similarity of two sentences under one model")
    p.add_argument("sentence1")
    p.add_argument("sentence2")
    p.add_argument("--lexicon", required=True, help="TSV word/pregroup-type file")
    p.add_argument("--basis", required=True)
    p.add_argument("--semantics-dir", required=True)
    p.add_argument("--model", choices=_ALL_MODELS, default="categorical")
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("eval", help="run a disambiguation experiment over a dataset")
    p.add_argument("--dataset", required=True, help="TSV id/sentence1/sentence2/rating/tag")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--basis", required=True)
    p.add_argument("--semantics-dir", required=True)
    p.add_argument("--model", action="append", choices=_ALL_MODELS,
                   help="repeatable; default: all models")
    p.add_argument("--out", help="also write the report as TSV")
    p.set_defaults(func=cmd_eval)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GramsemError, OSError, ValueError) as exc:
        print(f"gramsem: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
