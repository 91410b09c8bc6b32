"""How the binomial transform interacts with Lab(a, b).

Applying Lab(a, b) to the binomial transform of x gives, up to a simple
factor, Lab(a, 1+a-b) applied to x itself.  With b = (1+a)/2 both sides use
the same kernel, and at a = 2r+1 everything becomes integer binomials.
"""

import random

from hypinv.campaign import random_sequence
from hypinv.seqtransform import eq450_sides, eq470_sides, sun_chen_sides, theorem41_sides

rng = random.Random(7)
x = random_sequence(rng, 9)

print("Lab(a,b)(x_hat)_n against (-1)^n (1+a-b)_n/(b)_n Lab(a,1+a-b)(x)_n, a = 4/3, b = 2/5")
for n in range(5):
    lhs, rhs = theorem41_sides("4/3", "2/5", x, n)
    print(f"  n={n}: equal = {lhs == rhs}")

print()
print("b = (1+a)/2 with a = 7/2: the same kernel on both sides")
for n in range(5):
    lhs, rhs = eq450_sides("7/2", x, n)
    print(f"  n={n}: equal = {lhs == rhs}")

print()
print("integer form, r = 0, 1, 2")
for r in range(3):
    ok = all(eq470_sides(r, x, n)[0] == eq470_sides(r, x, n)[1] for n in range(9))
    print(f"  r={r}: holds for n <= 8: {ok}")

print()
print("r = 0 with the unsigned transform:", all(a == b for a, b in (sun_chen_sides(x, n) for n in range(9))))
