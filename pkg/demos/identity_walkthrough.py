#!/usr/bin/env python3
"""Walk through the finite identity: the Euler product over the first i
primes equals 1 plus the prime-indexed sum of products.

Small cases are exact fractions you can check by hand; after that we sweep
the residual across indices and across the complex plane to show the
identity holds everywhere off the singular lattice, not just where the
infinite objects converge.
"""

from fractions import Fraction

from zetasum import (
    euler_partial,
    identity_residual,
    in_exclusion_set,
    induction_step_check,
    reform_partial,
)

print("=" * 72)
print("Exact small cases at s = 3")
print("=" * 72)

# By hand: the one-prime product is 1/(1 - 1/8) = 8/7, and the one-prime
# sum is (1/8) * 8/7 = 1/7.  Two primes: (8/7)*(27/26) = 108/91 on the
# product side, 1/26 + (1/8)*(108/91) = 17/91 on the sum side.
for i, frac_z, frac_s in [(1, Fraction(8, 7), Fraction(1, 7)),
                          (2, Fraction(108, 91), Fraction(17, 91))]:
    z = euler_partial(i, 3)
    t = reform_partial(i, 3)
    print(f"i={i}:  product = {z.real:.16f}  (exact {frac_z})")
    print(f"       1 + sum = {1 + t.real:.16f}  (exact 1 + {frac_s} = {1 + frac_s})")
    print(f"       residual = {identity_residual(i, 3):.3e}")

print()
print("=" * 72)
print("The identity is purely algebraic: it holds for Re(s) < 1 too")
print("=" * 72)

for s in [2 + 5j, 0.5 + 14.1j, -1.5 + 7j, -3 + 0.25j]:
    w = in_exclusion_set(s, 100)
    assert w is None, "pick points off the singular lattice"
    line = f"s = {s!s:<14}"
    for i in (1, 10, 100):
        scale = max(1.0, abs(euler_partial(i, s)))
        line += f"  res(i={i:>3}) = {identity_residual(i, s) / scale:.1e}"
    print(line)

print()
print("=" * 72)
print("Inductive structure: each new prime extends the identity")
print("=" * 72)

# The step from i to i+1 factors through one intermediate equality; its
# residual is a useful regression surface of its own.
s = 4 + 1j
for i in (0, 1, 5, 20, 50):
    print(f"step i={i:>2} -> {i + 1:>2}:  residual = {induction_step_check(i, s):.3e}")

print()
print("All residuals above are pure floating-point noise; analytically each is 0.")
