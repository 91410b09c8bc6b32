"""Askey-scheme polynomials and sums of them with closed forms.

Each identity expresses a weighted sum of polynomials of degrees 0..n as a
simple product.  Wilson and continuous Hahn polynomials need complex
parameters a +- ix, so they are evaluated in the Gaussian rationals.
"""

from hypinv.orthopoly import FamilySpec, enumerate_538, eval_poly, verify_identity

legendre = FamilySpec("legendre")
print("Legendre P_n(1/3):", [str(eval_poly(legendre, n, "1/3")) for n in range(5)])

wilson = FamilySpec("wilson", {"a": "1/2", "b": "1/3", "c": "2/5", "d": "3/7"})
values = [eval_poly(wilson, n, "3/4") for n in range(4)]
print("Wilson W_n at x = 3/4 (real for real parameters):", all(v.is_real() for v in values))

ch = FamilySpec("continuous-hahn", {"a": "1/2", "b": 1, "c": "3/4", "d": "5/4"})
print("continuous Hahn p_2(1/3) =", eval_poly(ch, 2, "1/3"))

print()
for tag, params, x in [
    ("I510", {"a": "1/2", "b": "1/3", "c": "2/5", "d": "3/7"}, "1/2"),
    ("I537", {"a": "1/2", "b": 1, "c": "3/4", "d": "5/4"}, "1/3"),
    ("I550", {"alpha": "1/3", "beta": "2/5"}, "-3/4"),
    ("I5710", {}, "1/4"),
    ("I5910", {}, "1/3"),
]:
    report = verify_identity(tag, params, x, 6)
    print(f"{tag:6} n <= 6: {report.status}")

print("all eight continuous Hahn symmetries:", enumerate_538("1/3", "-2/5", "5/7", "7/4", "2/7", 5).status)
