"""Invariant fields and the scalar-flat profile on the full flag of SU(3).

For lambda = p*omega1 + q*omega2 the invariant-field space jumps from
one dimension to three exactly on the lines p = -2q, p = q, 2p = -q.
With lambda = -(omega1 + omega2) and kappa = omega1 + omega2 the profile
polynomial is Phi = (1 + tau)^4 - 2*tau - 1.
"""

from fractions import Fraction

from cscflag import (build_flag, build_profile_inputs, build_root_system,
                     classify_invariant_fields, metric_index, parse_lie_type,
                     solve_profile)

fv = build_flag(build_root_system(parse_lie_type("A2")), [])

print("invariant-field classification, lambda = p*omega1 + q*omega2:")
for p, q in [(-2, 1), (1, 1), (1, -2), (1, 2), (-1, -3)]:
    cls = classify_invariant_fields(fv, [p, q])
    root = None if cls.distinguished_root is None else list(cls.distinguished_root)
    print(f"  (p, q) = ({p:2d},{q:2d}): case {cls.case}, "
          f"dimension {cls.dimension}, root {root}")

lam, kappa = [-1, -1], [1, 1]
qtilde, p_poly, n = build_profile_inputs(fv, lam, kappa)
profile = solve_profile(qtilde, p_poly, 0)
print(f"\nQtilde = {qtilde}")
print(f"Phi    = {profile.phi_poly}")
print(f"phi(1) = {profile.phi(Fraction(1))}")
print(f"metric index = {metric_index(fv, lam)}")
