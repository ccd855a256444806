"""Strata of Hilb^2(C^2/Gamma) and their transversal slices.

Each stratum is labelled by a dimension vector v'.  The slice data (v^s, w^s)
describe a quiver variety transversal to it; point strata (dimension 0) are
the interesting ones.
"""
from hilbqdim import AffineDimVector, build_root_system, enumerate_strata, euler_series, strata_euler

rs = build_root_system("D4")
print("D4, n = 2")
for s in strata_euler(rs, 2):
    print(f"  v' = {s.v_prime.vertex_vector(rs)}  dim {s.dimension}  v^s = {s.v_slice}"
          f"  w^s = {s.w_slice}  chi = {s.chi_s}")
print("  total", sum(s.chi_s for s in strata_euler(rs, 2)), "= series coefficient", euler_series(rs, 2)[2])

# Number of point strata for each type
for label in ["A1", "A2", "A3", "A6", "D4", "D5", "D8", "E6", "E7", "E8"]:
    rs = build_root_system(label)
    points = [s for s in enumerate_strata(rs, AffineDimVector.n_delta(rs, 2)) if s.dimension == 0]
    print(f"{label}: {len(points)} point strata", [s.v_slice for s in points])
