#!/usr/bin/env python3
"""Typing words with a pregroup grammar and reducing sentences.

Every word gets a type built from base symbols (n for noun phrases, s for
statements) and their adjoints: n^r expects a noun to the left, n^l one to
the right.  Scanning left to right, adjacent atoms x^z x^(z+1) cancel; a
string is a sentence when everything cancels down to a single s.
"""

from gramsem import is_sentence, reduce, standard_lexicon
from gramsem.pregroup import AtomicType, left_adjoint, parse_type, right_adjoint


def show_reduction(words, grammar):
    types = grammar.type_sequence(words)
    result = reduce(types)
    print(f"  {' '.join(words)}")
    print(f"    types:    {'  '.join(str(t) for t in types)}")
    print(f"    links:    {list(result.links)}")
    print(f"    residual: {result.residual}")
    print(f"    sentence? {is_sentence(result)}")
    print()


print("=" * 60)
print("ADJOINTS")
print("=" * 60)
n = AtomicType("n")
print(f"  right adjoint of {n}: {right_adjoint(n)}")
print(f"  left adjoint of {n}:  {left_adjoint(n)}")
print(f"  iterating left twice: {left_adjoint(left_adjoint(n))}")
print(f"  round trip: {right_adjoint(left_adjoint(n)) == n}")
print()

print("=" * 60)
print("REDUCING TYPED SENTENCES")
print("=" * 60)
grammar = standard_lexicon(
    nouns=["dogs", "cats", "kittens"],
    transitive=["chase"],
    intransitive=["sleep"],
    adjectives=["fluffy"],
    ditransitive=["bring"],
)
show_reduction(["dogs", "chase", "cats"], grammar)
show_reduction(["fluffy", "dogs", "chase", "fluffy", "cats"], grammar)
show_reduction(["dogs", "sleep"], grammar)
show_reduction(["dogs", "bring", "cats", "kittens"], grammar)

print("A scrambled string leaves leftovers instead of a lone s:")
show_reduction(["dogs", "cats", "chase"], grammar)

print("Types parse from compact strings too:")
verb = parse_type("n^r s n^l")
print(f"  'n^r s n^l' -> {verb.atoms}")
