# Which reductions of the Fermat quartic are ordinary?
# Ordinary at p means the trace a_1 = -(#X(F_p) - 1 - p^2) is a unit mod p.

# %%
from k3ord import QuarticSurface, is_ordinary
from k3ord.scan import ScanConfig, run_scan

fermat = QuarticSurface.fermat()
for p in (2, 3, 5, 7, 13):
    print(p, is_ordinary(fermat, p))

# %%
report = run_scan(ScanConfig(fermat, 2, 150))
print(report.to_csv())
s = report.summary
print("ordinary fraction:", s["ordinary_fraction"], "=", s["ordinary_fraction_decimal"])
print("non-ordinary primes:", s["non_ordinary_primes"])

# %%
# The pattern is the classical one for the Fermat quartic: p = 1 mod 4 ordinary,
# p = 3 mod 4 supersingular, so the density tends to 1/2 over Q.
assert all(p % 4 == 3 for p in s["non_ordinary_primes"])
