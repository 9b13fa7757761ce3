"""Frozen reference constants for the test suite.

Derived offline, one time, from an arbitrary-precision evaluation of the
standard normal CDF/quantile (mpmath, 60 significant digits) plus binary64
grid scans cross-checked against it. Regenerating them requires only a
normal-CDF oracle that is accurate to well below 1e-12 in x-units.
"""

# N^{-1}(p) at binary64-exact probe points, 21 significant digits.
NINV = {
    0.025: -1.95996398454005421178,
    0.05: -1.64485362695147268795,
    0.5: 0.0,
    0.95: 1.64485362695147228428,
    0.975: 1.9599639845400538556,
    1e-290: -36.4207316732079988272,
    0.0465: -1.67978065679812869213,
    0.9535: 1.67978065679812883474,
    0.001: -3.09023230616781353536,
    0.999: 3.09023230616781327776,
    1e-100: -21.2734535609653242942,
    0.25: -0.674489750196081743202,
    0.75: 0.674489750196081743202,
    0.01: -2.32634787404084109308,
    0.1: -1.28155156554460043533,
    0.9: 1.28155156554460059349,
    1e-10: -6.3613409024040561991,
}

# N(x) at binary64-exact probe points, 21 significant digits.
NCDF = {
    -1.959963984540054: 0.0250000000000000108762,
    -1.644853626951473: 0.0499999999999999623314,
    0.0: 0.5,
    -5.0: 2.86651571879193911674e-7,
    -8.0: 6.22096057427178412352e-16,
    -36.420731673207996: 1.00000000000010376993e-290,
    1.959963984540054: 0.974999999999999989124,
    -0.6744897501960817: 0.250000000000000011998,
    1.0: 0.841344746068542948585,
    -1.0: 0.158655253931457051415,
    2.0: 0.9772498680518207928,
    -2.0: 0.0227501319481792072003,
}

# (p, |err|, sign) local maxima of |central_2_2 - truth| on [0.0465, 0.9535].
NARROW_EXTREMA = [
    (0.04650000000452945, 2.4943271236687043e-05, 1),
    (0.05426322736472528, 2.4943313062812404e-05, -1),
    (0.0816203528591207, 2.4943275078686285e-05, 1),
    (0.1406931749451252, 2.4943234516061205e-05, -1),
    (0.24781903879279552, 2.4943273704598453e-05, 1),
    (0.40771148732563883, 2.4943256129359402e-05, -1),
    (0.5922885126743611, 2.4943256129359402e-05, 1),
    (0.7521809612072045, 2.4943273704598453e-05, -1),
    (0.8593068250548748, 2.4943234516061205e-05, 1),
    (0.9183796471408793, 2.4943275078686285e-05, -1),
    (0.9457367726352747, 2.4943313062812404e-05, 1),
    (0.9534999999954705, 2.4943271236687273e-05, -1),
]

# (p, |err|, sign) local maxima of |central_2_2_wide - truth| on [0.025, 0.975].
WIDE_EXTREMA_COUNT = 12
WIDE_EXTREMA = [
    (0.025000000004744193, 0.000115961925893926, 1),
    (0.03081645236508545, 0.00011596436955539688, -1),
    (0.05277596398523654, 0.00011596195633189591, 1),
    (0.10575839700380203, 0.00011596199442338332, -1),
    (0.21421858825439594, 0.0001159619707068677, 1),
    (0.3928285326386376, 0.00011596198512068512, -1),
    (0.6071714673613624, 0.00011596198512068512, 1),
    (0.7857814117456041, 0.0001159619707068677, -1),
    (0.8942416029961979, 0.00011596199442338332, 1),
    (0.9472240360147635, 0.00011596195633189591, -1),
    (0.9691835476349145, 0.00011596436955539688, 1),
    (0.9749999999952558, 0.00011596192589392382, -1),
]
WIDE_MAX = 0.00011596436955539688
WIDE_ARGMAX = 0.03081645236508545

# (r, |err|, sign) local maxima of |tail_3_2 - truth| in r = sqrt(-2 ln p)
# over [r(0.0465), 37]; the r-endpoint values are one-sided maxima.
TAIL_EXTREMA_R = [
    (2.477217377004235, 2.466085980754442e-05, -1),
    (2.9066962925014264, 2.4571559999340796e-05, 1),
    (4.5084347590412, 2.4565556918728574e-05, -1),
    (8.412451466304784, 2.4573962275865852e-05, 1),
    (16.69152155704759, 2.4549040473183607e-05, -1),
    (29.47153982656978, 2.4559399623930115e-05, 1),
    (36.9999999999689, 2.4564655393117056e-05, -1),
]
TAIL_SUPREMUM_AT_CUT = 2.466085981686079e-05  # one-sided |err| at p -> 0.0465-

# Max |tail_3_2 - oracle| over the 400-points-per-decade log grid on [1e-290, 0.0465).
TAIL_GRID_MAX = 2.457396226773767e-05
TAIL_GRID_ARGMAX = 4.289979731525328e-16
TAIL_GRID_LAST_P = 0.046233093482189326

ACCEPTANCE_GRID_SIZE = 218440
RAT22A_GLOBAL_MAX = 2.4943308175373602e-05
RAT22A_GLOBAL_ARGMAX = 0.05426
RAT22B_GLOBAL_MAX = 0.00011596432238092369
RAT22B_GLOBAL_ARGMAX = 0.030820000000000004
AS_ORIGINAL_GLOBAL_MAX = 0.0004442955943010918
AS_ORIGINAL_GLOBAL_ARGMAX = 0.6422500000000001
AS_IMPROVED_GLOBAL_MAX = 7.92473214825673e-05
AS_IMPROVED_GLOBAL_ARGMAX = 0.5

# Beasley-Springer central formula (|q| <= 0.42) on [0.08, 0.92], step 1e-5.
BS_CENTRAL_MAX = 3.0077829116237353e-09
BS_CENTRAL_ARGMAX = 0.08
BS_ERR_AT_HALF = 0.0
BS_AT_0975_ERR = 2.2516182252019235e-09

# |composed(cut - eps) - composed(cut + eps)| at eps = 1e-12.
JUMP_A_LOWER = 4.960415165999876e-05
JUMP_A_UPPER = 4.960415165999876e-05
JUMP_B_LOWER = 9.831859710396351e-05
JUMP_B_UPPER = 9.831859710307533e-05

AS_IMPROVED_AT_HALF = -7.92473214825673e-05
HARD_FLOOR = 5.314068364454539e-298
CUTS_SUM_EXACT_A = True
CUTS_SUM_EXACT_B = True

ORACLE_ROUNDTRIP_WORST_REL = 3.2709509279387684e-13
