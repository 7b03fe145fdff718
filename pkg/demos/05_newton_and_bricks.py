"""Newton polytopes of F-polynomials and the brick polytope they assemble.

The Newton polytope of each cluster variable's F-polynomial is computed in
simple-root coordinates, mapped to weight coordinates, and the Minkowski sum
of all of them is compared against the convex hull of the brick vectors.
"""

from clusterbrick import (LatticePolytope, antigreedy_facet, brick_vector,
                          build_complex, cartan_of_type, enumerate_facets,
                          equal_up_to_translation, f_polynomial,
                          minkowski_sum, positive_roots,
                          root_to_weight_coords, variables_by_root)

cartan = cartan_of_type("A", 2)
c = (1, 2)
cx = build_complex(cartan, c)

parts = []
for beta in positive_roots(cartan):
    F = f_polynomial(variables_by_root(cartan, c)[beta], cartan.n)
    newton = LatticePolytope(F.support())
    print(f"root {beta}: Newton polytope vertices {newton.vertices}")
    parts.append(LatticePolytope(
        [root_to_weight_coords(cartan, e) for e in newton.vertices]))

total = minkowski_sum(parts)
print(f"Minkowski sum vertices (weight coordinates): {total.vertices}")

bricks = [brick_vector(cx, f) for f in enumerate_facets(cx)]
print(f"brick vectors: {tuple(bricks)}")
hull = LatticePolytope(bricks)
shift = equal_up_to_translation(total, hull)
print(f"the two polytopes agree up to the translation {shift}")
print(f"which is the antigreedy brick vector "
      f"{brick_vector(cx, antigreedy_facet(cx))}")
