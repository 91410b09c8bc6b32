"""Terminating hypergeometric series and two classical closed forms.

A series pFq with a nonpositive integer -n among its numerator parameters
stops after n+1 terms, so it can be summed exactly.
"""

from hypinv.exactnum import GaussianRational
from hypinv.hyper import chu_vandermonde_rhs, classify, dixon_rhs, eval_terminating, hyp

# 2F1(-2, 1; 3; 1) = 1 - 2/3 + 1/6
spec = hyp([-2, 1], [3], 1)
print("2F1(-2, 1; 3; 1) =", eval_terminating(spec))
print(classify(spec))

# Dixon: a well-poised 3F2(1) with a product formula.
a, b = GaussianRational("5/3"), GaussianRational("-2/7")
print()
print("Dixon, a = 5/3, b = -2/7")
for n in range(6):
    lhs = eval_terminating(hyp([a, b, -n], [1 + a - b, 1 + a + n], 1))
    print(f"  n={n}: series {lhs}  closed form {dixon_rhs(a, b, n)}")

# Chu-Vandermonde with a complex parameter.
a, b = GaussianRational("1/2", 1), GaussianRational("7/4")
print()
print("Chu-Vandermonde, a = 1/2 + i, b = 7/4")
for n in range(5):
    lhs = eval_terminating(hyp([-n, a], [b], 1))
    print(f"  n={n}: {lhs} == {chu_vandermonde_rhs(a, b, n)}: {lhs == chu_vandermonde_rhs(a, b, n)}")
