# Symmetric squares, tensor products and a triple product.
import sympy

from eulerprod import ArithmeticObject, dirichlet_sym_power, dirichlet_tensor
from eulerprod.lprod import objects_from_bg, triple_product, triple_product_bad_factor

f = objects_from_bg("level11", 2000)
print("f:", dirichlet_tensor([f], 15).tolist()[1:])

# Sym^2 f: at good p the coefficient is a_p^2 - p
s2 = dirichlet_sym_power(f, 2, 15).tolist()
print("Sym^2 f:", s2[1:])
print("check at 2, 3:", f.aps[2] ** 2 - 2, f.aps[3] ** 2 - 3)

# f x f needs the local factor at 11, where both copies ramify
ff = dirichlet_tensor([f, f], 15, overrides={11: [1, -1]})
print("f x f:", ff.tolist()[1:])

# Tensoring with zeta changes nothing
print("f x zeta == f:", dirichlet_tensor([f, ArithmeticObject.zeta()], 200).tolist()
      == dirichlet_tensor([f], 200).tolist())

# Level 35: f rational, g over Z[y] with y^2 - y - 4, h its conjugate
F = objects_from_bg("level35f", 300)
G = objects_from_bg("level35g", 300)
H = G.conjugate()
print("triple product:", triple_product(F, G, H, 35, 13).tolist()[1:])

T = sympy.Symbol("T")
for p in (5, 7):
    alpha = F.aps[p] * int(G.ring.mul(G.aps[p], H.aps[p])[0])
    c = triple_product_bad_factor(alpha, 1, 1, p)
    print(f"local factor at {p}:", sympy.factor(sum(ci * T ** i for i, ci in enumerate(c))))
