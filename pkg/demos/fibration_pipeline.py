"""End to end: the Riemann-Roch number of the fibration built from three
SU(2) spheres, computed three independent ways.

The manifold is the product of three unit coadjoint orbits; its reduction
at zero is a single point (the equilateral triangle), so the base route
needs only the point intersection oracle.  The residue route assembles
one rational-exponential term per (fixed point, Weyl element) pair and
takes an iterated residue; its overall constant is calibrated once on the
k = 1 case and then frozen.  The tensor-product oracle is pure
representation-theoretic combinatorics and shares no code with either.

Run:  python demos/fibration_pipeline.py
"""

from orbitrr import (BaseIntersectionOracle, CalibrationRegistry, build_root_system,
                     fibration_rr_base, fibration_rr_residue, product_orbit_fixed_data,
                     tensor_multiplicity)

a1 = build_root_system("A", 1)
points = product_orbit_fixed_data(a1, [(1,), (1,), (1,)])
print("fixed points of the product of three spheres:")
for pt in points:
    print("  label %-10s moment %-6s tangent weights %s"
          % (pt.label, pt.moment, pt.tangent_weights))

registry = CalibrationRegistry()
oracle = BaseIntersectionOracle.point(a1)
print()
print(" k | residue route | base route | tensor oracle")
for k in range(1, 7):
    res = fibration_rr_residue(points, a1, (1,), k, registry=registry)
    base = fibration_rr_base(oracle, a1, (1,), k)
    tens = tensor_multiplicity(a1, [(k,)] * 3, (k,))
    print("%2d | %13s | %10s | %13s" % (k, res, base, tens))
print()
print("calibrated constants:", dict(registry.constants))
