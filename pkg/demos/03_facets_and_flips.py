"""Walk the subword complex of A2: facets, root function, flips."""

from clusterbrick import (build_complex, cartan_of_type, enumerate_facets,
                          flip, greedy_facet, root_table)

cartan = cartan_of_type("A", 2)
cx = build_complex(cartan, (1, 2))
print(f"search word: {cx.word}")
print(f"position roots: {cx.pos_root}")
print(f"facets: {enumerate_facets(cx)}")
print()

facet = greedy_facet(cx)
start = facet
print(f"starting from the greedy facet {facet}")
fresh = facet[1]
for _ in range(5):
    table = root_table(cx, facet)
    print(f"facet {facet}")
    print(f"  roots   {table.roots}")
    print(f"  weights {table.weights}")
    # flip the position that has been around longer, so the walk
    # never immediately undoes itself and traces the whole pentagon
    i = facet[0] if facet[1] == fresh else facet[1]
    facet, fresh = flip(cx, facet, i)
    print(f"  flip at position {i} lands at position {fresh}")
assert facet == start
print(f"back at {facet} after a pentagon of flips")
