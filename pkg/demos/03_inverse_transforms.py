"""Triangular sequence transforms and their explicit inverses.

L(a) sends x to y_n = sum_k (-n)_k (n+a)_k x_k.  Its inverse has a closed
form, so a round trip through both returns the input exactly.  At a = 0 the
general formula breaks down and a separate limit formula takes over.
"""

import random

from hypinv.campaign import random_sequence
from hypinv.seqtransform import TransformSpec, apply, invert, kernel_for

rng = random.Random(2024)
x = random_sequence(rng, 8)
print("x =", [str(v) for v in x])

for spec in [
    TransformSpec("L", "3/2"),
    TransformSpec("L", 0),
    TransformSpec("Ltilde", -1),
    TransformSpec("Lab", "2/3", "5/4"),
]:
    y = apply(kernel_for(spec), x)
    back = apply(kernel_for(invert(spec)), y)
    print(f"{spec.kind:7} a={spec.a} b={spec.b}: round trip exact = {back == x}")

print()
print("First rows of the inverse of Ltilde at a = -1:")
kernel = kernel_for(TransformSpec("Ltilde-inv", -1))
for n in range(5):
    print("  ", [str(c) for c in kernel.row(n)])

# Flip one coefficient and the round trip breaks.
spec = TransformSpec("L", "3/2")
broken = kernel_for(spec).with_flipped_sign(2, 1)
print()
print("with coeff(2,1) sign flipped:", apply(kernel_for(invert(spec)), apply(broken, x)) == x)
