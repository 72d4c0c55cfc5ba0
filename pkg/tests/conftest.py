"""Shared fixture profiles for the test suite."""

import kummerws as k

K1 = k.RamificationProfile(3, (1, 1, -2), 2)
K2 = k.RamificationProfile(5, (1, 1, 1, -3), 2)
K2_N3 = k.RamificationProfile(5, (1, 1, 1, -3), 3)
SEP42 = k.preset_separable(4, 2, 2).profile
X2213_13 = k.preset_xabns(2, 2, 1, 3, 13, 2).profile
Y233 = k.preset_yns(2, 3, 3, 2).profile
BM23 = k.preset_beelen_montanucci(2, 3, 2).profile

ALL_PROFILES = {
    "K1": K1,
    "K2": K2,
    "K2_n3": K2_N3,
    "separable_4_2": SEP42,
    "xabns": X2213_13,
    "yns": Y233,
    "bm": BM23,
}

# windows large enough to contain the interesting structure of each fixture
SCAN_WINDOWS = {
    "K1": ((-4, 7), (-4, 7)),
    "K2": ((-3, 12), (-3, 12)),
    "K2_n3": ((0, 7), (0, 7), (0, 7)),
    "separable_4_2": ((-3, 8), (-3, 8)),
    "xabns": ((-2, 10), (-2, 10)),
    "yns": ((-2, 10), (-2, 10)),
    "bm": ((0, 18), (0, 18)),
}
