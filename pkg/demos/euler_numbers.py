"""Euler numbers of Hilbert schemes of points on C^2/Gamma.

The generating series comes from the Fock-space character with every
e^-alpha_i replaced by zeta^2.  For cyclic Gamma it is compared with a
direct count of torus fixed points.
"""
import time

from hilbqdim import build_root_system, euler_series, euler_series_oracle, unspecialized_series

for label in ["A1", "A2", "D4", "E6", "E7", "E8"]:
    rs = build_root_system(label)
    t = time.perf_counter()
    coeffs = euler_series(rs, 10).tolist()
    print(f"{label:>3}: {coeffs}   ({time.perf_counter() - t:.2f} s)")

# Z/3 acting on C^2: invariant monomial ideals counted one by one
print("\nfixed points for Z/3:", euler_series_oracle(3, 8).tolist())
print("character for A2     :", euler_series(build_root_system("A2"), 8).tolist())

# Without the specialisation the same character counts far more fixed points
print("\nA2 before specialising:", unspecialized_series(build_root_system("A2"), 6).tolist())

# Splitting the enumeration over processes gives the same answer
rs = build_root_system("D6")
print("\nD6 with 1 and 2 workers agree:", euler_series(rs, 12) == euler_series(rs, 12, jobs=2))
