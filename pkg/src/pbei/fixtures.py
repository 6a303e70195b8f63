"""Named example graphs."""

from .graph import Graph

EDGE = Graph(2, [(1, 2)])
PATH3 = Graph(3, [(1, 2), (2, 3)])
K3 = Graph(3, [(1, 2), (1, 3), (2, 3)])
P5 = Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5)])

# triangle 1-2-3 with pendant 4 at 3 and tail 3-6-5
TAILED_TRIANGLE = Graph(6, [(4, 3), (3, 1), (1, 2), (2, 3), (3, 6), (6, 5)])

# triangles {1,2,3} and {5,6,7} joined through 4
BRIDGED_TRIANGLES = Graph(7, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)])

# triangles {1,2,3}, {4,5,6}, {7,8,9}; square vertices 10, 11, 12 join them pairwise
THREE_TRIANGLES = Graph(
    12,
    [
        (1, 2), (2, 3), (1, 3),
        (4, 5), (5, 6), (4, 6),
        (7, 8), (8, 9), (7, 9),
        (3, 10), (10, 8),
        (4, 11), (11, 9),
        (3, 12), (12, 4),
    ],
)
THREE_TRIANGLES_SQUARES = frozenset({10, 11, 12})

NAMED = {"edge": EDGE, "path3": PATH3, "k3": K3, "p5": P5, "tailed_triangle": TAILED_TRIANGLE, "bridged_triangles": BRIDGED_TRIANGLES, "three_triangles": THREE_TRIANGLES}
