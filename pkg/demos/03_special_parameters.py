"""Locating the distinguished real parameters on the negative axis.

Three landmarks organize the parameter ray near the singular value a = 0:
the period-two cycle {q0, q_inf} of the unperturbed map on the positive
reals, the collision parameter a_q where the real critical value meets q0,
and a_star where the second iterate of the critical value lands exactly on
the origin (the pole), giving a Sierpinski carpet.
"""

from chdyn import (
    JuliaClass,
    build_ra,
    classify_ra,
    find_a_q,
    find_a_star,
    q0_cycle,
    real_critical_value,
)

q0, q_inf = q0_cycle(0.0)
print(f"2-cycle of the unperturbed map: q0 = {q0:.12f}, q_inf = {q_inf:.12f}")
r0 = build_ra(0.0)
print(f"  check: R(q0) = {r0(complex(q0)).real:.12f}, R(q_inf) = {r0(complex(q_inf)).real:.12f}")

aq = find_a_q()
print(f"\na_q    = {aq.value:.12f}   (residual {aq.residual:.2e}, {aq.iterations} iterations)")
print(f"  v(a_q) = {real_critical_value(aq.value):.12f} = q0(a_q) = {q0_cycle(aq.value)[0]:.12f}")

ast = find_a_star()
print(f"a_star = {ast.value:.12f}   (residual {ast.residual:.2e})")
ra = build_ra(ast.value)
v = real_critical_value(ast.value)
print(f"  second iterate of the critical value: {abs(ra(complex(ra(complex(v))))):.2e}")
cls = classify_ra(ast.value).julia_class
assert cls is JuliaClass.SIERPINSKI
print(f"  classify(a_star) = {cls.value}")
print(f"\nordering on the ray: -0.028 < a_q = {aq.value:.6f} < a_star = {ast.value:.6f} < 0")
