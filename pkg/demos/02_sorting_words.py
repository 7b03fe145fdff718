"""Coxeter elements and the sorting word of the longest element.

The sorting word is read off greedily from repeated copies of the chosen
Coxeter word; it is the backbone of the subword complex construction.
"""

from clusterbrick import (c_sorting_word, cartan_of_type, coxeter_words,
                          element_of_word, is_reduced, length,
                          longest_element)

for family, rank in [("A", 3), ("B", 3)]:
    cartan = cartan_of_type(family, rank)
    w0 = longest_element(cartan)
    print(f"== {family}{rank}: longest element has length {length(cartan, w0)} ==")
    for c in coxeter_words(cartan):
        word = c_sorting_word(cartan, c, w0)
        assert is_reduced(cartan, word)
        assert element_of_word(cartan, word) == w0
        print(f"c = {c}  sorting word = {word}")
    print()
