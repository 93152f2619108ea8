#!/usr/bin/env python3
"""Print the three desk tables for eyeball checking:

  1. the six elements of the two-vertex Weyl group with their inversion sets,
  2. the images of the six A3 indecomposables under the reflection functor
     at the middle sink of 1 -> 2 <- 3,
  3. the sortable <-> torsion-free correspondence for 1 <- 2.
"""

from quivrep.linrep import F2, all_indecomposables, reflect_plus
from quivrep.quiver import Quiver
from quivrep.torsion import tfc_of_sortable
from quivrep.weyl import enumerate_c_sortable, inversion_set, weyl_element


def fmt_word(word):
    return "".join(f"s{l}" for l in word) or "e"


def fmt_roots(roots):
    return "{" + ", ".join(str(tuple(r)) for r in roots) + "}" if roots else "{}"


def main():
    a2 = Quiver(2, ((2, 1),))
    print("== inversion sets on the two-vertex path (c = s1 s2) ==")
    for word in [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]:
        inv = inversion_set(a2, word)
        print(f"  {fmt_word(word):10} {fmt_roots(inv.roots)}")

    a3 = Quiver(3, ((1, 2), (3, 2)))
    print("\n== reflection functor at the sink 2 of 1 -> 2 <- 3 ==")
    for root, rep in all_indecomposables(a3, F2).items():
        image = reflect_plus(a3, 2, rep)
        print(f"  {str(root):12} ->  {image.dims}")

    print("\n== sortable elements vs torsion-free classes on 1 <- 2 ==")
    for w in enumerate_c_sortable(a2):
        cls = tfc_of_sortable(a2, w, F2)
        print(f"  {fmt_word(w.word):10} {fmt_roots(cls.sorted_roots)}")


if __name__ == "__main__":
    main()
