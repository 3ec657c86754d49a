"""Distance matrices and derivative traces of the preset families."""

from shiftspace.space import build_ladder_examples, cb_ladder, distance_matrix, format_matrix

for name, (fam, expected) in build_ladder_examples().items():
    mat = distance_matrix(fam)
    print(f"== {name} (N={fam.resolution})")
    print(format_matrix(fam, mat))
    print("\n".join(cb_ladder(fam, mat).lines()))
    print(f"expected: {expected}\n")
