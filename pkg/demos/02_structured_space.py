#!/usr/bin/env python3
"""Composing sentence meanings over a structured property space.

The basis records dependency properties (argument of "fluffy", object of
"buys", ...), noun vectors count how often a word fills each property, and
a transitive verb is a matrix over property pairs: C[i][j] is the extent to
which things with property i do the verb to things with property j.  A
sentence meaning is the verb matrix filtered pointwise by subject (x)
object, and adjectives act as diagonal property filters.
"""

from gramsem import (
    BasisRegistry,
    LexicalSemantics,
    SemTensor,
    WeightedVector,
    compose_adjective,
    compose_sentence,
    compose_transitive,
    cosine,
    standard_lexicon,
)
from gramsem.vectorspace import STRUCTURED

LABELS = ("arg-fluffy", "arg-ferocious", "obj-buys", "arg-shrewd", "arg-valuable")
SPACE = BasisRegistry("toy", LABELS, STRUCTURED)

NOUNS = {
    "bankers": (0, 4, 0, 6, 0),
    "cats": (7, 1, 4, 3, 1),
    "dogs": (3, 6, 2, 1, 2),
    "stock": (0, 0, 7, 0, 8),
    "kittens": (2, 0, 0, 1, 0),
}
CHASE = (
    (1, 0, 0, 0, 0),
    (7, 1, 2, 3, 1),
    (0, 0, 0, 0, 0),
    (2, 0, 1, 0, 1),
    (1, 0, 0, 0, 0),
)
FLUFFY = (9, 3, 4, 2, 2)

vectors = {
    word: WeightedVector(SPACE, {i: float(w) for i, w in enumerate(row)})
    for word, row in NOUNS.items()
}
chase = SemTensor(SPACE, 2, {(i, j): float(w) for i, r in enumerate(CHASE) for j, w in enumerate(r)})
fluffy = SemTensor(SPACE, 1, {(i,): float(w) for i, w in enumerate(FLUFFY)})

print("=" * 60)
print("NOUN VECTORS OVER PROPERTY BASES")
print("=" * 60)
for word in NOUNS:
    print(f"  {word:8s} {vectors[word].labelled()}")
print()

print("=" * 60)
print("TRANSITIVE COMPOSITION: dogs chase cats")
print("=" * 60)
meaning = compose_transitive(vectors["dogs"], chase, vectors["cats"])
print("  entry at (arg-ferocious, arg-fluffy):"
      f" {meaning.value.get((1, 0))}  (= 7 * 6 * 7)")
print(f"  nonzero cells: {len(meaning.value.entries)} of 25")
print()

print("=" * 60)
print("ADJECTIVES AS DIAGONAL FILTERS")
print("=" * 60)
fluffy_dogs = compose_adjective(fluffy, vectors["dogs"])
print(f"  fluffy dogs = {[fluffy_dogs.get(i) for i in range(5)]}")
print()

print("=" * 60)
print("WHOLE SENTENCES THROUGH THE GRAMMAR")
print("=" * 60)
grammar = standard_lexicon(nouns=list(NOUNS), transitive=["chase"], adjectives=["fluffy"])
lex = LexicalSemantics(SPACE, vectors, {"chase": chase, "fluffy": fluffy})
m1 = compose_sentence(["dogs", "chase", "cats"], lex, grammar)
m2 = compose_sentence(["fluffy", "dogs", "chase", "fluffy", "kittens"], lex, grammar)
m3 = compose_sentence(["dogs", "chase", "stock"], lex, grammar)
print(f"  cos(dogs chase cats, fluffy dogs chase fluffy kittens) = {cosine(m1.value, m2.value):.3f}")
print(f"  cos(dogs chase cats, dogs chase stock)                 = {cosine(m1.value, m3.value):.3f}")
print("  chasing kittens stays close to chasing cats; chasing stock does not.")
