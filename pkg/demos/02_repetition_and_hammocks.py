"""The repetition quiver and the hammock functions living on it.

Vertices of the repetition quiver are pairs (i, p) with p matching the
parity class of i.  Three shift operators act on them: the translate tau,
the suspension sigma, and their composite, the Serre shift.  A hammock
function h_x assigns an integer to every vertex, seeded at x, knitted
mesh by mesh to the right.

Run:  python3 demos/02_repetition_and_hammocks.py
"""

from qhammock import (
    QFun,
    ZVertex,
    arrows_out,
    build_quiver,
    coxeter_number,
    default_height,
    dim_hom,
    hammock_fun,
    qfun_equal,
    qfun_grid_tsv,
    serre,
    suspend,
    translate,
    zq_dot,
)

q = build_quiver("A", 4, [(1, 2), (2, 3), (4, 3)])
xi = default_height(q)
h = coxeter_number(q)

x = ZVertex(3, -1)
print("x        =", x)
print("tau x    =", translate(x, 1))
print("sigma x  =", suspend(q, x))
print("serre x  =", serre(q, x))
print("sigma^2 x=", suspend(q, suspend(q, x)), f"  (= tau^-{h} x, h = {h})")

# ------------------------------------------------------ the value grid

# h_x is 1 on the section through x, zero strictly to the left, and
# continues to the right with an alternating signed tail -- it is NOT
# finitely supported.  Dots mark slots of the wrong parity.
print()
print(f"hammock function at {x}:")
print(qfun_grid_tsv(q, hammock_fun(q, x), -3, 7))

# ------------------------------------------------------ the mesh identity

# Knitting is governed by one local rule:
#     h_x + h_{tau^-1 x} = delta_x + sum over arrows x -> y of h_y
lhs = hammock_fun(q, x) + hammock_fun(q, translate(x, -1))
rhs = QFun({}, {x: 1})
for y in arrows_out(q, x):
    rhs = rhs + hammock_fun(q, y)
print("mesh identity at x:", qfun_equal(q, lhs, rhs))

# ------------------------------------------------------ Hom dimensions

# On the module region the same knitting computes Hom dimensions;
# dim_hom is the everywhere-nonnegative sibling of the signed h_x.
y, z = ZVertex(2, 0), ZVertex(3, 1)
print(f"dim Hom({y} -> {z}) =", dim_hom(q, y, z))
print(f"self-Hom of {y}     =", dim_hom(q, y, y))
print(f"Serre symmetry: dim_hom(y,z) == dim_hom(z, serre(y)):",
      dim_hom(q, y, z) == dim_hom(q, z, serre(q, y)))

# ------------------------------------------------------ a picture

print()
print("dot source for slots [-1, 2] (pipe into `dot -Tpng`):")
print(zq_dot(q, -1, 2, highlight=[x]))
