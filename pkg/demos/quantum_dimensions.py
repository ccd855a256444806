"""Quantum dimensions at zeta = exp(2 pi i / 2(h^vee + 1)).

Most irreducible modules have quantum dimension 0, a few have +1 or -1, and
the l-fundamental modules, which split into several irreducibles, always add
up to exactly 1.
"""
from hilbqdim import build_root_system, quantum_dimension, weyl_dimension
from hilbqdim.repdata import l_fundamental_decomposition, l_fundamental_qdim

E8 = build_root_system("E8")
print(E8.label, "h^vee =", E8.h_dual, " zeta is a primitive", E8.m, "th root of unity")

# A few highest weights of E8, in fundamental-weight coordinates
for lam in [(0,) * 7 + (2,), (0,) * 6 + (1, 1), (0,) * 5 + (1, 0, 1), (1,) + (0,) * 7]:
    q = quantum_dimension(E8, lam)
    print(f"  V{lam}: dim = {weyl_dimension(E8, lam):>10}   dim_q = {q}")

# The 4th l-fundamental module of E8: only four constituents survive
print("\nE8 node 4:")
total = 0
for lam, c in sorted(l_fundamental_decomposition("E8", 4).items()):
    q = quantum_dimension(E8, lam).as_int
    total += c * q
    print(f"  {c:>3} x V{lam}  contributes {c * q:+d}")
print("  sum =", total)

# Every node of every type gives 1
for label in ["A5", "D7", "E6", "E7", "E8"]:
    rs = build_root_system(label)
    print(label, [l_fundamental_qdim(label, k) for k in range(1, rs.rank + 1)])
