"""Root data of rank at most 3 used across the test suite."""

from langclass.root_datum import gln_datum, new_based_root_datum


def from_cartan(cartan):
    """Datum on the root lattice: simple roots are unit vectors, coroot j is column j of C."""
    l = len(cartan)
    roots = [[int(i == j) for j in range(l)] for i in range(l)]
    coroots = [[cartan[i][j] for i in range(l)] for j in range(l)]
    return new_based_root_datum(l, roots, coroots)


B2 = new_based_root_datum(2, [[1, -1], [0, 1]], [[1, -1], [0, 2]])
G2 = new_based_root_datum(2, [[1, 0], [0, 1]], [[2, -3], [-1, 2]])

# name -> (datum, Weyl group order)
CORPUS = {
    "gl1": (gln_datum(1), 1),
    "gl2": (gln_datum(2), 2),
    "gl3": (gln_datum(3), 6),
    "torus2": (new_based_root_datum(2, [], []), 1),
    "SL2": (new_based_root_datum(1, [[2]], [[1]]), 2),
    "PGL2": (new_based_root_datum(1, [[1]], [[2]]), 2),
    "A1xT": (new_based_root_datum(2, [[2, 0]], [[1, 0]]), 2),
    "A1_in_rank3": (new_based_root_datum(3, [[1, -1, 0]], [[1, -1, 0]]), 2),
    "A1xA1": (from_cartan([[2, 0], [0, 2]]), 4),
    "A2_adjoint": (from_cartan([[2, -1], [-1, 2]]), 6),
    "B2": (B2, 8),
    "C2": (from_cartan([[2, -1], [-2, 2]]), 8),
    "G2": (G2, 12),
    "A3": (from_cartan([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]), 24),
    "B3": (from_cartan([[2, -1, 0], [-1, 2, -2], [0, -1, 2]]), 48),
    "C3": (from_cartan([[2, -1, 0], [-1, 2, -1], [0, -2, 2]]), 48),
    "A1xA2": (from_cartan([[2, 0, 0], [0, 2, -1], [0, -1, 2]]), 12),
}
