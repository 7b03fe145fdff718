"""Print the basic root system data the rest of the package is built on."""

from clusterbrick import (cartan_of_type, coroot_of_root, positive_roots,
                          reflect_root, root_to_weight_coords, w_catalan)

for family, rank in [("A", 2), ("B", 2), ("G", 2), ("A", 3)]:
    cartan = cartan_of_type(family, rank)
    print(f"== {family}{rank} ==")
    for row in cartan.rows:
        print("   ", row)
    pos = positive_roots(cartan)
    print(f"{len(pos)} positive roots (simple-root coordinates):")
    print("   ", ", ".join(map(str, pos)))
    coroots = coroot_of_root(cartan)
    longest = pos[-1]
    print(f"highest root {longest}, its coroot {coroots[longest]}")
    print(f"weight coordinates of the highest root: "
          f"{root_to_weight_coords(cartan, longest)}")
    print(f"simple reflection 1 sends it to {reflect_root(cartan, 1, longest)}")
    print(f"number of clusters (type {family}{rank} Catalan): "
          f"{w_catalan(family, rank)}")
    print()
