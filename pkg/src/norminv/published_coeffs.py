"""Externally published coefficient constants used by the baseline evaluators.

These are dependencies of the accuracy comparisons, not fits of this library.
Kept in one annotated place so their provenance is unambiguous.

Sources:

* Abramowitz & Stegun (eds.), *Handbook of Mathematical Functions*,
  Eq. 26.2.23: x_p = t - (c0 + c1 t + c2 t^2) / (1 + d1 t + d2 t^2 + d3 t^3)
  with t = sqrt(ln(1/p^2)), quoted error |eps(p)| < 4.5e-4.

* Beasley & Springer, "Algorithm AS 111: The Percentage Points of the Normal
  Distribution", *Applied Statistics* 26 (1977) 118-121: a (3,4) rational in
  (p - 1/2)^2 for |p - 1/2| <= 0.42 and a (3,2) rational in
  sqrt(-ln(min(p, 1-p))) outside it.
"""

from __future__ import annotations

# ---- Abramowitz & Stegun 26.2.23 ------------------------------------------
AS_C0 = 2.515517
AS_C1 = 0.802853
AS_C2 = 0.010328
AS_D1 = 1.432788
AS_D2 = 0.189269
AS_D3 = 0.001308

# ---- Beasley & Springer AS 111 --------------------------------------------
# Central (3,4) in r = q^2, q = p - 1/2, for |q| <= 0.42:
#   x = q * (A0 + A1 r + A2 r^2 + A3 r^3) / (1 + B1 r + B2 r^2 + B3 r^3 + B4 r^4)
BS_A0 = 2.50662823884
BS_A1 = -18.61500062529
BS_A2 = 41.39119773534
BS_A3 = -25.44106049637
BS_B1 = -8.47351093090
BS_B2 = 23.08336743743
BS_B3 = -21.06224101826
BS_B4 = 3.13082909833

# Tail (3,2) in s = sqrt(-ln(r)), r = min(p, 1-p), for |q| > 0.42:
#   |x| = (C0 + C1 s + C2 s^2 + C3 s^3) / (1 + D1 s + D2 s^2)
BS_C0 = -2.78718931138
BS_C1 = -2.29796479134
BS_C2 = 4.85014127135
BS_C3 = 2.32121276858
BS_D1 = 3.54388924762
BS_D2 = 1.63706781897

#: The q-split of AS 111: |p - 1/2| <= 0.42 selects the central rational.
BS_CENTRAL_SPLIT = 0.42
