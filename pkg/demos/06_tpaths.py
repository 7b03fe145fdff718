"""The polygon model in type A: snake triangulation and T-paths."""

from clusterbrick import (cartan_of_type, coxeter_words, diagonal_of_root,
                          enumerate_tpaths, f_poly_via_prefixes,
                          f_poly_via_tpaths, format_fpoly, monomial_of_tpath,
                          triangulation_of_coxeter)

c = (3, 2, 1, 4)
tri = triangulation_of_coxeter(c)
print(f"c = {c}")
print(f"snake diagonals: {tri.diagonals}")
print(f"triangle strip:  {tri.strip}")
print()

gamma = diagonal_of_root(tri, 2, 4)
print(f"root a2+a3+a4 -> diagonal {gamma.source}-{gamma.target}, "
      f"crossing labels {gamma.crossed}")
for path in enumerate_tpaths(tri, gamma):
    signs = "".join("+" if s > 0 else "-" for s in path.signs)
    print(f"  signs {signs}  y-monomial {monomial_of_tpath(path, 4)}")
F = f_poly_via_tpaths(tri, 2, 4)
print(f"F-polynomial from T-paths:  {format_fpoly(F)}")
print(f"F-polynomial from prefixes: {format_fpoly(f_poly_via_prefixes(c, 2, 4))}")
print()

print("both models agree on every interval and every Coxeter word of A4:")
agree = 0
for word in coxeter_words(cartan_of_type("A", 4)):
    t = triangulation_of_coxeter(word)
    for i in range(1, 5):
        for j in range(i, 5):
            assert f_poly_via_tpaths(t, i, j) == f_poly_via_prefixes(word, i, j)
            agree += 1
print(f"  {agree} comparisons, all equal")
