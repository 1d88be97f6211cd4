#!/usr/bin/env python3
"""Regenerates the LattE-format example files in this directory."""
import itertools
import os
from fractions import Fraction
from math import gcd, lcm

HERE = os.path.dirname(os.path.abspath(__file__))


def write(name, text):
    with open(os.path.join(HERE, name), "w") as f:
        f.write(text)


def latte(rows, lin=(), nonneg=()):
    # rows are (b, a) meaning a.x <= b, written as "b -a"
    d = len(rows[0][1])
    out = [f"{len(rows)} {d + 1}"]
    for b, a in rows:
        out.append(" ".join(str(v) for v in [b] + [-x for x in a]))
    if lin:
        out.append("linearity %d %s" % (len(lin), " ".join(str(i) for i in lin)))
    if nonneg:
        out.append("nonnegative %d %s" % (len(nonneg), " ".join(str(i) for i in nonneg)))
    return "\n".join(out) + "\n"


def equations(eqs, d, nonneg=True):
    rows = [(b, a) for b, a in eqs]
    return latte(rows, lin=range(1, len(rows) + 1), nonneg=range(1, d + 1) if nonneg else ())


def unit(d, i, v=1):
    a = [0] * d
    a[i] = v
    return a


# verbatim example files
write("magic4x4", """10 17
1 -1 -1 -1 -1  0  0  0  0  0  0  0  0  0  0  0  0
1  0  0  0  0 -1 -1 -1 -1  0  0  0  0  0  0  0  0
1  0  0  0  0  0  0  0  0 -1 -1 -1 -1  0  0  0  0
1  0  0  0  0  0  0  0  0  0  0  0  0 -1 -1 -1 -1
1 -1  0  0  0 -1  0  0  0 -1  0  0  0 -1  0  0  0
1  0 -1  0  0  0 -1  0  0  0 -1  0  0  0 -1  0  0
1  0  0 -1  0  0  0 -1  0  0  0 -1  0  0  0 -1  0
1  0  0  0 -1  0  0  0 -1  0  0  0 -1  0  0  0 -1
1 -1  0  0  0  0 -1  0  0  0  0 -1  0  0  0  0 -1
1  0  0  0 -1  0  0 -1  0  0 -1  0  0 -1  0  0  0
linearity 10 1 2 3 4 5 6 7 8 9 10
nonnegative 16 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16
""")

write("24_cell", """24 5
2 -1  1 -1 -1
1  0  0 -1  0
2 -1  1 -1  1
2 -1  1  1  1
1  0  0  0  1
1  0  1  0  0
2  1 -1  1 -1
2  1  1 -1  1
2  1  1  1  1
1  1  0  0  0
2  1  1  1 -1
2  1  1 -1 -1
2  1 -1  1  1
2  1 -1 -1  1
2  1 -1 -1 -1
1  0  0  1  0
2 -1  1  1 -1
1  0  0  0 -1
2 -1 -1  1 -1
1  0 -1  0  0
2 -1 -1  1  1
2 -1 -1 -1  1
2 -1 -1 -1 -1
1 -1  0  0  0
""")

write("square", "5 3\n1 -1 0\n1 0 -1\n1 -1 -1\n0 1 0\n0 0 1\n")
write("square_lin", "5 3\n1 -1 0\n1 0 -1\n1 -1 -1\n0 1 0\n0 0 1\nlinearity 1 3\n")
write("square_nonneg", "3 3\n1 -1 0\n1 0 -1\n1 -1 -1\nlinearity 1 3\nnonnegative 2 1 2\n")
write("simplex", "4 4\n1 -1 0 0\n1 0 -1 0\n1 0 0 -1\n1 -1 -1 -1\nlinearity 1 4\nnonnegative 3 1 2 3\n")
write("simplex.cost", "1 3\n2 4 7\n")
write("cdd_sample.ine", "H-representation\nbegin\n4 4 integer\n2 -2 4 -1\n3 -2 -2 3\n6 2 -4 -3\n1 2 2 1\nend\n")

# quadrilateral with vertices (0,0), (5,0), (4,2), (0,2)
write("quadrilateral", latte([(0, [-1, 0]), (0, [0, -1]), (2, [0, 1]), (10, [2, 1])]))
write("quadrilateral.cost", "1 2\n1 0\n")
# axis tetrahedron with legs 10^6
N = 10**6
write("tetrahedron", latte([(0, [-1, 0, 0]), (0, [0, -1, 0]), (0, [0, 0, -1]), (N, [1, 1, 1])]))
write("unit_tetrahedron", latte([(0, [-1, 0, 0]), (0, [0, -1, 0]), (0, [0, 0, -1]), (1, [1, 1, 1])]))


def table2(rows, cols):
    p, q = len(rows), len(cols)
    d = p * q
    eqs = [(r, [1 if k // q == i else 0 for k in range(d)]) for i, r in enumerate(rows)]
    eqs += [(c, [1 if k % q == j else 0 for k in range(d)]) for j, c in enumerate(cols)]
    return equations(eqs, d)


write("table_2x3", table2([6, 6], [4, 4, 4]))
write("transport_4x4", table2([220, 215, 93, 64], [108, 286, 71, 127]))

# 3x3x3 table, variable x_ijk at index 9i+3j+k
AB = [[164424, 324745, 127239], [262784, 601074, 9369116], [149654, 7618489, 1736281]]
AC = [[163445, 49395, 403568], [1151824, 767866, 8313284], [1609500, 6331023, 1563901]]
BC = [[184032, 123585, 269245], [886393, 6722333, 935582], [1854344, 302366, 9075926]]
eqs = []
for u, v in itertools.product(range(3), repeat=2):
    eqs.append((AB[u][v], [1 if (i, j) == (u, v) else 0 for i in range(3) for j in range(3) for k in range(3)]))
for u, v in itertools.product(range(3), repeat=2):
    eqs.append((AC[u][v], [1 if (i, k) == (u, v) else 0 for i in range(3) for j in range(3) for k in range(3)]))
for u, v in itertools.product(range(3), repeat=2):
    eqs.append((BC[u][v], [1 if (j, k) == (u, v) else 0 for i in range(3) for j in range(3) for k in range(3)]))
write("table_3x3x3", equations(eqs, 27))

# flow polytope of K4, arcs i -> j for i < j; inflow - outflow = w
def flow(weights):
    n = len(weights)
    arcs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    eqs = []
    for v, w in enumerate(weights):
        eqs.append((w, [(1 if h == v else 0) - (1 if t == v else 0) for t, h in arcs]))
    return equations(eqs, len(arcs))


write("flow_k4", flow([-6, -8, 5, 9]))

# knapsacks: a.x = b, x >= 0
KNAP = {
    "cuww1": ([12223, 12224, 36674, 61119, 85569], 89643482),
    "cuww2": ([12228, 36679, 36682, 48908, 61139, 73365], 89716839),
    "cuww3": ([12137, 24269, 36405, 36407, 48545, 60683], 58925135),
    "cuww4": ([13211, 13212, 39638, 52844, 66060, 79268, 92482], 104723596),
    "cuww5": ([13429, 26850, 26855, 40280, 40281, 53711, 53714, 67141], 45094584),
    "prob1": ([25067, 49300, 49717, 62124, 87608, 88025, 113673, 119169], 33367336),
    "prob2": ([11948, 23330, 30635, 44197, 92754, 123389, 136951, 140745], 14215207),
    "prob3": ([39559, 61679, 79625, 99658, 133404, 137071, 159757, 173977], 58424800),
    "prob4": ([48709, 55893, 62177, 65919, 86271, 87692, 102881, 109765], 60575666),
    "prob5": ([28637, 48198, 80330, 91980, 102221, 135518, 165564, 176049], 62442885),
    "prob6": ([20601, 40429, 40429, 45415, 53725, 61919, 64470, 69340, 78539, 95043], 22382775),
    "prob7": ([18902, 26720, 34538, 34868, 49201, 49531, 65167, 66800, 84069, 137179], 27267752),
    "prob8": ([17035, 45529, 48317, 48506, 86120, 100178, 112464, 115819, 125128, 129688], 21733991),
    "prob9": ([3719, 20289, 29067, 60517, 64354, 65633, 76969, 102024, 106036, 119930], 13385100),
    "prob10": ([45276, 70778, 86911, 92634, 97839, 125941, 134269, 141033, 147279, 153525], 106925262),
}
COST = [213, -1928, -11111, -2345, 9123, -12834, -123, 122331, 0, 0]


def knapsack(a, b):
    return equations([(b, a)], len(a))


for name, (a, b) in KNAP.items():
    write(name, knapsack(a, b))
    write(name + ".cost", "1 %d\n%s\n" % (len(a), " ".join(str(c) for c in COST[: len(a)])))
write("cuww1_frobenius", knapsack(KNAP["cuww1"][0], 89643481))
write("prob9_count", knapsack(KNAP["prob9"][0], 13385099))


def hypersimplex(n, k):
    rows = [(k, [1] * n)] + [(1, unit(n, i)) for i in range(n)]
    return latte(rows, lin=[1], nonneg=range(1, n + 1))


for n, k in [(4, 1), (4, 2), (5, 1), (5, 2), (6, 3)]:
    write(f"hypersimplex_{n}_{k}", hypersimplex(n, k))


def cut_corners(verts, facets, frac):
    """facets: (beta, a) with a.x <= beta; cut every vertex where the linear
    function equal to 1 at the vertex and 0 on the opposite facets exceeds frac."""
    rows = [(Fraction(b), list(map(Fraction, a))) for b, a in facets]
    for p in verts:
        # the facet not containing p (simplex) or the corner plane of the cube
        rows.append(corner_row(p, facets, verts, frac))
    out = []
    for b, a in rows:
        den = lcm(*[x.denominator for x in a + [b]])
        ai = [int(x * den) for x in a]
        bi = int(b * den)
        g = gcd(*ai, bi)
        out.append((bi // g, [x // g for x in ai]))
    return latte(out)


def corner_row(p, facets, verts, frac):
    # neighbours along edges: vertices sharing d-1 tight facets with p
    d = len(p)
    tight = lambda v: {i for i, (b, a) in enumerate(facets) if sum(x * y for x, y in zip(a, v)) == b}
    tp = tight(p)
    nbrs = [v for v in verts if v != p and len(tight(v) & tp) >= d - 1]
    assert len(nbrs) == d
    # hyperplane through p + frac*(q - p) for each neighbour q, cutting off p
    pts = [[Fraction(pi) + frac * (qi - pi) for pi, qi in zip(p, q)] for q in nbrs]
    # solve a.x = 1 style: find a, beta with a.pt = beta
    import sympy
    M = sympy.Matrix([[*pt, -1] for pt in pts])
    ns = M.nullspace()
    assert len(ns) == 1
    v = ns[0]
    a = [Fraction(str(x)) for x in v[:d]]
    beta = Fraction(str(v[d]))
    if sum(x * y for x, y in zip(a, p)) < beta:
        # p must be cut off, keep points with a.x >= beta
        return (-beta, [-x for x in a])
    return (beta, a)


cube_verts = [list(v) for v in itertools.product([0, 1], repeat=3)]
cube_facets = [(0, unit(3, i, -1)) for i in range(3)] + [(1, unit(3, i)) for i in range(3)]
write("cuboctahedron", cut_corners(cube_verts, cube_facets, Fraction(1, 2)))
write("truncated_cube", cut_corners(cube_verts, cube_facets, Fraction(1, 3)))
simp_verts = [[0, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1]]
simp_facets = [(2, [1, 1, 1]), (0, [1, -1, -1]), (0, [-1, 1, -1]), (0, [-1, -1, 1])]
write("truncated_simplex", cut_corners(simp_verts, simp_facets, Fraction(1, 3)))


def magic(n):
    d = n * n
    eqs = []
    for i in range(n):
        eqs.append((1, [1 if k // n == i else 0 for k in range(d)]))
    for j in range(n):
        eqs.append((1, [1 if k % n == j else 0 for k in range(d)]))
    eqs.append((1, [1 if k // n == k % n else 0 for k in range(d)]))
    eqs.append((1, [1 if k // n + k % n == n - 1 else 0 for k in range(d)]))
    return equations(eqs, d)


write("magic5x5", magic(5))
