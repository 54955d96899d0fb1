#!/usr/bin/env python3
"""Instantiating the sentence space as plain truth values.

When the basis vectors stand for individuals and the verb tensor is the
0/1 indicator of a relation over them, composing a sentence from basis
vectors leaves weight exactly on the related pairs: the sentence is true
when any weight survives.
"""

from gramsem import BasisRegistry, WeightedVector, compose_transitive
from gramsem.composition import truth_meaning, truth_theoretic_verb, truth_value

domain = BasisRegistry("individuals", ("rex", "felix", "whiskers"))
chases = truth_theoretic_verb({("rex", "felix"), ("rex", "whiskers")}, domain)

print("=" * 60)
print("A RELATIONAL VERB OVER THREE INDIVIDUALS")
print("=" * 60)
print(f"  relation entries: {sorted(chases.labelled())}")
print()

for subject, obj in [("rex", "felix"), ("felix", "rex"), ("rex", "whiskers")]:
    meaning = compose_transitive(
        WeightedVector.basis_vector(domain, subject),
        chases,
        WeightedVector.basis_vector(domain, obj),
    )
    verdict = truth_value(meaning)
    projected = truth_meaning(meaning).value.labelled()
    print(f"  '{subject} chases {obj}': {verdict}   (truth-space vector {projected})")

print()
print("Sums of basis vectors count how much of the relation they touch:")
everyone = WeightedVector(domain, {i: 1.0 for i in range(3)})
meaning = compose_transitive(everyone, chases, everyone)
print(f"  'everyone chases everyone' carries total mass "
      f"{sum(meaning.value.entries.values()):.0f} (one per related pair)")
