#!/usr/bin/env python3
"""Building verb matrices over a plain co-occurrence space.

On large corpora the structured property space gets expensive, so the basis
is simplified to bare context words.  A transitive verb's matrix is then
the sum, over its corpus occurrences, of the Kronecker product of the
subject and object vectors of that occurrence.
"""

from gramsem import BasisRegistry, WeightedVector, build_verb_tensor, compose_transitive, cosine

SPACE = BasisRegistry("N", ("far", "room", "scientific", "elect"))

NOUNS = {
    "table": (6.6, 27.0, 0.0, 0.0),
    "map": (5.6, 7.4, 5.4, 0.0),
    "result": (7.0, 0.99, 13.0, 4.2),
    "location": (5.9, 7.3, 6.1, 0.0),
}
vectors = {w: WeightedVector(SPACE, dict(enumerate(row))) for w, row in NOUNS.items()}

print("=" * 60)
print("TF/IDF NOUN VECTORS")
print("=" * 60)
for word, vector in vectors.items():
    print(f"  {word:9s} {vector.labelled()}")
print()

print("=" * 60)
print("THE VERB MATRIX AS A KRONECKER SUM")
print("=" * 60)
print("Suppose 'show' occurs in exactly two sentences:")
print("  the map showed the location   ->  (map, location)")
print("  the table showed the result   ->  (table, result)")
show = build_verb_tensor([(vectors["map"], vectors["location"]),
                          (vectors["table"], vectors["result"])])
print()
print("Cell (far, far) multiplies the subject and object weights on 'far'")
print("for each occurrence and adds them up:")
print(f"  map*location: 5.6 * 5.9 = {5.6 * 5.9:.2f}")
print(f"  table*result: 6.6 * 7   = {6.6 * 7:.2f}")
print(f"  built matrix value:       {show.get((0, 0)):.2f}")
print()
header = "".join(f"{label:>12s}" for label in SPACE.labels)
print("Full matrix (rows = subject context, columns = object context):")
print(" " * 12 + header)
for i, row_label in enumerate(SPACE.labels):
    cells = "".join(f"{show.get((i, j)):12.2f}" for j in range(4))
    print(f"{row_label:>12s}{cells}")
print()

print("=" * 60)
print("COMPARING COMPOSED SENTENCES")
print("=" * 60)
m1 = compose_transitive(vectors["map"], show, vectors["location"])
m2 = compose_transitive(vectors["table"], show, vectors["result"])
m3 = compose_transitive(vectors["map"], show, vectors["result"])
print(f"  cos(map show location, table show result) = {cosine(m1.value, m2.value):.3f}")
print(f"  cos(map show location, map show result)   = {cosine(m1.value, m3.value):.3f}")
