"""Exact arithmetic in the Gaussian rationals.

Every number in the package is a GaussianRational: a pair of exact rationals.
Nothing is rounded, so an identity either holds exactly or it does not.
"""

from hypinv.exactnum import I, GaussianRational, binomial, pochhammer

z = GaussianRational("1/2", "-3/4")
w = GaussianRational(2, 1)

print("z       =", z)
print("w       =", w)
print("z * w   =", z * w)
print("z / w   =", z / w)
print("(z/w)*w =", (z / w) * w, "(recovers z exactly)")
print("i^2     =", I * I)

# The rising factorial is the building block of every series here.
print()
print("(2)_3    =", pochhammer(2, 3))
print("(-3)_5   =", pochhammer(-3, 5), "(the factor -3+3 = 0 appears)")
print("(1/2)_4  =", pochhammer(GaussianRational("1/2"), 4))
print("(i)_3    =", pochhammer(I, 3))

# (-n)_k / k! is a signed binomial coefficient.
n, k = 7, 3
print()
print(f"(-{n})_{k}/{k}! =", pochhammer(-n, k) / pochhammer(1, k))
print(f"(-1)^{k} C({n},{k}) =", (-1) ** k * binomial(n, k))
