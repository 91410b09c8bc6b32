"""Closed forms for sums of terminating 4F3(1) and 5F4(1) series.

Each formula is checked two ways: directly, and by re-deriving it from the
classical single-series transformation through an inverse transform.  One
right-hand factor is printed ambiguously in the source as (a/2); evaluating
both readings against the left side settles it.
"""

from hypinv.sums import rederive, resolve_s630_factor, rhs, verify_sum

params = {"a": "3", "b": "1/2", "c": "1/3", "d": "1/4"}
print("S640 closed form for n = 0..4:", [str(rhs("S640", params, n)) for n in range(5)])
print("S640 direct check:", verify_sum("S640", params, 5).status)
print("S640 re-derivation:", rederive("S640", params, 5).status)

params = {"a": "7/3", "b": "1/3", "c": "2/5", "d": "3/7"}
reading = resolve_s630_factor(params, 4)
print()
print("S630 factor reading selected by the oracle:", reading)
print("  (a/2)_n:", verify_sum("S630", params, 4, s630_reading="subscripted").status)
print("  a/2    :", verify_sum("S630", params, 4, s630_reading="bare").status)

params = {"a": "5/2", "b": "1/3", "c": "2/7", "d": "3/5", "e": "4/9"}
print()
print("S610:", verify_sum("S610", params, 5).status, "/ re-derived:", rederive("S610", params, 5).status)
