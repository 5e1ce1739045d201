"""Hand-checked reference values for the two bundled scenarios.

Values are stored as printed strings; the matching tolerance is half a
unit of the last printed decimal (see ``tol`` / ``assert_printed``).

Cell order for match/contract tables: (C1-S1, C1-S2, C2-S1, C2-S2), three
DPs each.  Utility rows are (U_C1, U_C2, U_S1, U_S2, TMQ, TCQ, TU).
"""

PROFILES = [
    "NNNN", "ONNN", "NONN", "NNON", "NNNO",
    "OONN", "ONON", "ONNO", "NOON", "NONO", "NNOO",
    "OOON", "OONO", "ONOO", "NOOO", "OOOO",
]


def tol(printed: str) -> float:
    """Half a unit of the last printed decimal of a value string.

    A tiny epsilon is added so exact round-half cases (e.g. 85.3125 printed
    as 85.313) are not rejected by float noise.
    """
    if "." in printed:
        return 0.5 * 10 ** -len(printed.split(".")[1]) + 1e-9
    return 0.5 + 1e-9


def assert_printed(actual: float, printed: str, label: str = "") -> None:
    expected = float(printed)
    assert abs(actual - expected) <= tol(printed), (
        f"{label}: got {actual!r}, expected {printed} (+/- {tol(printed)})"
    )


def rows(text: str) -> dict[str, list[str]]:
    """Parse a whitespace table block into {profile: cells}."""
    out = {}
    for line in text.strip().splitlines():
        parts = line.split()
        out[parts[0]] = parts[1:]
    assert list(out) == PROFILES, "profile rows out of order"
    return out


# --- scenario 1 -----------------------------------------------------------

S1_BIDS_DEMAND = {
    "N": [[30, 0, 370], [40, 40, 120]],
    "O": [[30, 140, 400], [50, 40, 120]],
}
S1_BIDS_SUPPLY = {
    "N": [[121, 0, 79], [0, 250, 0]],
    "O": [[121, 79, 200], [121, 250, 129]],
}
# BP^S(2,3) follows the pricing formula (20.25); the one-off 20.15 in the
# scenario writeup is inconsistent with every downstream table.
S1_PRICES = [[14.6, 14.9, 14.65], [20.1, 19.15, 20.25]]

S1_DP_TOTALS = {
    "N": ([70, 40, 490], [121, 250, 79]),
    "O": ([80, 180, 520], [242, 329, 329]),
}

S1_MATCHES = rows("""
NNNN 30 0 59.653  0 0 0       40 0 19.347 0 40 0
ONNN 30 0 60.769  0 140 0     40 0 18.231 0 40 0
NONN 30 0 59.653  0 0 0       50 0 19.347 0 40 0
NNON 30 0 151.02  0 0 0       40 0 48.98  0 40 0
NNNO 30 0 59.653  0 0 97.408  40 0 19.347 0 40 31.592
OONN 30 0 60.769  0 140 0     50 0 18.231 0 40 0
ONON 30 0 153.846 0 140 0     40 0 46.154 0 40 0
ONNO 30 0 60.769  0 140 99.231 40 0 18.231 0 40 29.769
NOON 30 0 151.02  0 0 0       50 0 48.98  0 40 0
NONO 30 0 59.653  0 0 97.408  50 0 19.347 0 40 31.592
NNOO 30 0 151.02  0 0 97.408  40 0 48.98  0 40 31.592
OOON 30 0 153.846 0 140 0     50 0 46.154 0 40 0
OONO 30 0 60.769  0 140 99.231 50 0 18.231 0 40 29.769
ONOO 30 0 153.846 0 140 99.231 40 0 46.154 0 40 29.769
NOOO 30 0 151.02  0 0 97.408  50 0 48.98  0 40 31.592
OOOO 30 0 153.846 0 140 99.231 50 0 46.154 0 40 29.769
""")

S1_CONTRACTS = rows("""
NNNN 30 0 59.653 0 0 0        40 0 19.347 0 40 0
ONNN 30 0 60.769 0 140 0      40 0 18.231 0 40 0
NONN 30 0 59.653 0 0 0        50 0 19.347 0 40 0
NNON 30 0 98.163 0 0 0        40 0 31.837 0 40 0
NNNO 30 0 59.653 0 0 97.408   40 0 19.347 0 40 31.592
OONN 30 0 60.769 0 140 0      50 0 18.231 0 40 0
ONON 30 0 100    0 140 0      40 0 30     0 40 0
ONNO 30 0 60.769 0 140 53.846 40 0 18.231 0 40 16.154
NOON 30 0 90.612 0 0 0        50 0 29.388 0 40 0
NONO 30 0 59.653 0 0 97.408   50 0 19.347 0 40 31.592
NNOO 30 0 98.163 0 0 97.408   40 0 31.837 0 40 31.592
OOON 30 0 92.308 0 140 0      50 0 27.692 0 40 0
OONO 30 0 60.769 0 140 53.846 50 0 18.231 0 40 16.154
ONOO 30 0 100    0 116.923 53.846 40 0 30 0 40 16.154
NOOO 30 0 90.612 0 0 97.408   50 0 29.388 0 40 31.592
OOOO 30 0 92.308 0 116.923 53.846 50 0 27.692 0 40 16.154
""")

S1_UTILITIES = rows("""
NNNN 777.103 599.547 532.45 210 189 189 2119.1
ONNN 1143.423 590.227 532.45 945 329 329 3211.1
NONN 777.103 667.547 568.45 210 199 199 2223.1
NNON 1098.663 703.837 713.5 210 310 240 2726
NNNO 1044.976 686.424 532.45 745.35 318 318 3009.2
OONN 1143.423 658.227 568.45 945 339 339 3315.1
ONON 1471 688.5 713.5 945 450 380 3818
ONNO 1291.5 634.65 532.45 1235.5 458 399 3694.1
NOON 1035.612 751.388 714 210 320 240 2711
NONO 1044.976 754.424 568.45 745.35 328 328 3113.2
NNOO 1366.536 790.714 713.5 745.35 439 369 3616.1
OOON 1406.769 737.231 714 945 460 380 3803
OONO 1291.5 702.65 568.45 1235.5 468 409 3798.1
ONOO 1560.231 732.923 713.5 1114.346 579 426.923 4121
NOOO 1303.485 838.265 714 745.35 449 369 3601.1
OOOO 1496 781.654 714 1114.346 589 426.923 4106
""")

# --- scenario 2 -----------------------------------------------------------

S2_BIDS_DEMAND = {
    "N": [[0, 199, 121], [150, 0, 0]],
    "O": [[234, 257, 121], [150, 0, 150]],
}
S2_BIDS_SUPPLY = {
    "N": [[0, 125, 115], [140, 40, 0]],
    "O": [[171, 125, 184], [144, 40, 176]],
}
S2_PRICES = [[16.65, 15.7, 15.95], [20.4, 19.45, 20.6]]

S2_DP_TOTALS = {
    "N": ([150, 199, 121], [140, 165, 115]),
    "O": ([384, 257, 271], [315, 165, 360]),
}

S2_MATCHES = rows("""
NNNN 0 125 115     0 40 0          0 0 0          140 0 0
ONNN 0 125 115     85.313 40 0     0 0 0          54.688 0 0
NONN 0 125 51.347  0 40 0          0 0 63.653     140 0 0
NNON 0 125 121     0 40 0          150 0 0        0 0 0
NNNO 0 125 0       0 40 121        0 0 0          144 0 0
OONN 0 125 51.347  85.313 40 0     0 0 63.653     54.688 0 0
ONON 104.203 125 121 85.313 40 0   66.797 0 0     54.688 0 0
ONNO 0 125 0       87.75 40 121    0 0 0          56.25 0 0
NOON 0 125 82.155  0 40 0          150 0 101.845  0 0 0
NONO 0 125 42.417  0 40 78.583     0 0 52.583     144 0 97.417
NNOO 0 125 121     0 40 0          150 0 0        0 0 0
OOON 104.203 125 82.155 85.313 40 0 66.797 0 101.845 54.688 0 0
OONO 0 125 42.417  87.75 40 78.583 0 0 52.583     56.25 0 97.417
ONOO 104.203 125 121 87.75 40 0    66.797 0 0     56.25 0 0
NOOO 0 125 82.155  0 40 38.845     150 0 101.845  0 0 48.155
OOOO 104.203 125 82.155 87.75 40 38.845 66.797 0 101.845 56.25 0 48.155
""")

S2_CONTRACTS = rows("""
NNNN 0 125 115    0 40 0      0 0 0       140 0 0
ONNN 0 125 115    40 40 0     0 0 0       54.688 0 0
NONN 0 125 51.347 0 40 0      0 0 63.653  86.347 0 0
NNON 0 125 115    0 40 0      0 0 0       0 0 0
NNNO 0 125 0      0 40 0      0 0 0       140 0 0
OONN 0 125 51.347 85.313 40 0 0 0 63.653  54.688 0 0
ONON 0 125 115    0 0 0       0 0 0       54.688 0 0
ONNO 0 125 0      34 40 0     0 0 0       54.688 0 0
NOON 0 125 51.347 0 40 0      0 0 63.653  0 0 0
NONO 0 125 42.417 0 40 0      0 0 52.583  97.417 0 0
NNOO 0 125 115    0 40 0      0 0 0       0 0 0
OOON 0 125 51.347 0 8.642 0   0 0 63.653  0 0 0
OONO 0 125 42.417 34 40 0     0 0 52.583  54.688 0 0
ONOO 0 125 115    0 0 0       0 0 0       54.688 0 0
NOOO 0 125 51.347 0 40 38.845 0 0 63.653  0 0 0
OOOO 0 125 51.347 0 8.642 0   0 0 63.653  0 0 0
""")

S2_UTILITIES = rows("""
NNNN 2028.25 350 1075.25 830 420 420 4283.5
ONNN 2148.25 136.719 1075.25 630.625 420 374.688 3990.844
NONN 1534.938 620.065 1075.25 593.926 420 366.347 3824.179
NNON 2028.25 0 1075.25 214 436 280 3317.5
NNNO 1137 350 575 830 430 305 2892
OONN 1790.876 540.916 1075.25 830 420 420 4237.042
ONON 1866.25 136.719 1075.25 240.625 597 294.688 3318.844
ONNO 1239 136.719 575 604.225 430 253.688 2554.944
NOON 1534.938 404.197 1075.25 214 499 280 3228.386
NONO 1465.732 577.445 988.25 642.635 580 357.417 3674.061
NNOO 2028.25 0 1075.25 214 436 280 3317.5
OOON 1407.938 404.197 1075.25 46.234 660 248.642 2933.619
OONO 1567.732 470.621 988.25 604.225 580 348.688 3630.828
ONOO 1866.25 136.719 1075.25 240.625 601 294.688 3318.844
NOOO 1655.358 404.197 1075.25 377.149 586 318.845 3511.954
OOOO 1407.938 404.197 1075.25 46.234 751 248.642 2933.619
""")

# Drop-phase detail for scenario 2, all-overbid profile: per player, the
# matches in preference order with (matched, kept) quantities.
# Match key: (consumer, supplier, dp) with zero-based indices.
S2_OOOO_KEPT = {
    "C1": [
        ((0, 0, 1), "125", "125"),
        ((0, 0, 2), "82.155", "82.155"),
        ((0, 0, 0), "104.203", "104.203"),
        ((0, 1, 1), "40", "8.6419"),
        ((0, 1, 2), "38.845", "0"),
        ((0, 1, 0), "87.75", "0"),
    ],
    "C2": [
        ((1, 0, 2), "101.845", "101.845"),
        ((1, 0, 0), "66.797", "48.155"),
        ((1, 1, 0), "56.25", "0"),
        ((1, 1, 2), "48.155", "0"),
    ],
    "S1": [
        ((0, 0, 1), "125", "125"),
        ((0, 0, 2), "82.155", "51.347"),
        ((1, 0, 2), "101.845", "63.653"),
        ((0, 0, 0), "104.203", "0"),
        ((1, 0, 0), "66.797", "0"),
    ],
    "S2": [
        ((0, 1, 1), "40", "40"),
        ((0, 1, 0), "87.75", "85.313"),
        ((1, 1, 0), "56.25", "54.688"),
        ((0, 1, 2), "38.845", "0"),
        ((1, 1, 2), "48.155", "0"),
    ],
}
