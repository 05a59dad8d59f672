"""The scalar-flat metric on O(-1) over the projective line.

The simplest instance of the whole pipeline: the profile is phi(tau) =
tau exactly, the momentum interval is [0, inf), and the metric is
asymptotically conical with metric index 1 (no cone angle at infinity).
"""

from cscflag import (asymptotics, build_flag, build_profile_inputs,
                     build_root_system, classify_behavior, metric_index,
                     parse_lie_type, solve_profile)

fv = build_flag(build_root_system(parse_lie_type("A1")), [])
lam, kappa = [-1], [1]

qtilde, p, n = build_profile_inputs(fv, lam, kappa)
print(f"n = {n}, Qtilde = {qtilde}, P = {p}")

profile = solve_profile(qtilde, p, 0)
print(f"Phi = {profile.phi_poly}")
print(f"phi(5) = {profile.phi(5)} (phi is the identity)")

print(f"metric index = {metric_index(fv, lam)}")

report = classify_behavior(profile)
print(f"case: {report.theorem_case} on the {report.domain}")

expansion = asymptotics(profile)
print(f"Laurent terms at infinity: {[(e, str(c)) for e, c in expansion.terms]}")
print(f"terminates: {expansion.terminates}, decay order {expansion.decay_order}")
