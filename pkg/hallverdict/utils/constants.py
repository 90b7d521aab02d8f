# JSON output schema version; bump on any incompatible change of the reports
SCHEMA_VERSION = 1

# classify exit codes
EXIT_VERDICT_TRUE = 0
EXIT_VERDICT_FALSE = 1
EXIT_ERROR = 2

# permutation degree accepted from generator files
MAX_DEGREE = 128

# =============================================================================
# sporadic groups: order as {prime: exponent}

SPORADIC_ORDERS = {
    "M11": {2: 4, 3: 2, 5: 1, 11: 1},
    "M12": {2: 6, 3: 3, 5: 1, 11: 1},
    "M22": {2: 7, 3: 2, 5: 1, 7: 1, 11: 1},
    "M23": {2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1},
    "M24": {2: 10, 3: 3, 5: 1, 7: 1, 11: 1, 23: 1},
    "J1": {2: 3, 3: 1, 5: 1, 7: 1, 11: 1, 19: 1},
    "J2": {2: 7, 3: 3, 5: 2, 7: 1},
    "J3": {2: 7, 3: 5, 5: 1, 17: 1, 19: 1},
    "J4": {2: 21, 3: 3, 5: 1, 7: 1, 11: 3, 23: 1, 29: 1, 31: 1, 37: 1, 43: 1},
    "Co1": {2: 21, 3: 9, 5: 4, 7: 2, 11: 1, 13: 1, 23: 1},
    "Co2": {2: 18, 3: 6, 5: 3, 7: 1, 11: 1, 23: 1},
    "Co3": {2: 10, 3: 7, 5: 3, 7: 1, 11: 1, 23: 1},
    "Fi22": {2: 17, 3: 9, 5: 2, 7: 1, 11: 1, 13: 1},
    "Fi23": {2: 18, 3: 13, 5: 2, 7: 1, 11: 1, 13: 1, 17: 1, 23: 1},
    "Fi24'": {2: 21, 3: 16, 5: 2, 7: 3, 11: 1, 13: 1, 17: 1, 23: 1, 29: 1},
    "HS": {2: 9, 3: 2, 5: 3, 7: 1, 11: 1},
    "McL": {2: 7, 3: 6, 5: 3, 7: 1, 11: 1},
    "He": {2: 10, 3: 3, 5: 2, 7: 3, 17: 1},
    "Ru": {2: 14, 3: 3, 5: 3, 7: 1, 13: 1, 29: 1},
    "Suz": {2: 13, 3: 7, 5: 2, 7: 1, 11: 1, 13: 1},
    "ON": {2: 9, 3: 4, 5: 1, 7: 3, 11: 1, 19: 1, 31: 1},
    "HN": {2: 14, 3: 6, 5: 6, 7: 1, 11: 1, 19: 1},
    "Ly": {2: 8, 3: 7, 5: 6, 7: 1, 11: 1, 31: 1, 37: 1, 67: 1},
    "Th": {2: 15, 3: 10, 5: 3, 7: 2, 13: 1, 19: 1, 31: 1},
    "B": {
        2: 41,
        3: 13,
        5: 6,
        7: 2,
        11: 1,
        13: 1,
        17: 1,
        19: 1,
        23: 1,
        31: 1,
        47: 1,
    },
    "M": {
        2: 46,
        3: 20,
        5: 9,
        7: 6,
        11: 2,
        13: 3,
        17: 1,
        19: 1,
        23: 1,
        29: 1,
        31: 1,
        41: 1,
        47: 1,
        59: 1,
        71: 1,
    },
    "Tits": {2: 11, 3: 3, 5: 2, 13: 1},
}

SPORADIC_NAMES = tuple(SPORADIC_ORDERS)

# alternative spellings accepted by the descriptor parser
SPORADIC_ALIASES = {
    "M(23)": "Fi23",
    "M(24)'": "Fi24'",
    "M(24)": "Fi24'",
    "O'N": "ON",
    "F1": "M",
    "F2": "B",
    "2F4(2)'": "Tits",
}

# =============================================================================
# Condition II: (item number, group) -> the admissible values of pi & pi(S)

CONDITION_TWO_ITEMS = [
    (1, "M11", [{5, 11}]),
    (2, "M12", [{5, 11}]),
    (3, "M22", [{5, 11}]),
    (4, "M23", [{5, 11}, {11, 23}]),
    (5, "M24", [{5, 11}, {11, 23}]),
    (6, "J1", [{3, 5}, {3, 7}, {3, 19}, {5, 11}]),
    (7, "J4", [{5, 7}, {5, 11}, {5, 31}, {7, 29}, {7, 43}]),
    (8, "ON", [{5, 11}, {5, 31}]),
    (9, "Ly", [{11, 67}]),
    (10, "Ru", [{7, 29}]),
    (11, "Co1", [{11, 23}]),
    (12, "Co2", [{11, 23}]),
    (13, "Co3", [{11, 23}]),
    (14, "Fi23", [{11, 23}]),
    (15, "Fi24'", [{11, 23}]),
    (16, "B", [{11, 23}, {23, 47}]),
    (17, "M", [{23, 47}, {29, 59}]),
]

# =============================================================================
# Lie families

FAMILY_A = "A"
FAMILY_2A = "2A"
FAMILY_B = "B"
FAMILY_C = "C"
FAMILY_D = "D"
FAMILY_2D = "2D"
FAMILY_E6 = "E6"
FAMILY_2E6 = "2E6"
FAMILY_E7 = "E7"
FAMILY_E8 = "E8"
FAMILY_F4 = "F4"
FAMILY_G2 = "G2"
FAMILY_2G2 = "2G2"
FAMILY_3D4 = "3D4"
FAMILY_2B2 = "2B2"
FAMILY_2F4 = "2F4"

LIE_FAMILIES = (
    FAMILY_A,
    FAMILY_2A,
    FAMILY_B,
    FAMILY_C,
    FAMILY_D,
    FAMILY_2D,
    FAMILY_E6,
    FAMILY_2E6,
    FAMILY_E7,
    FAMILY_E8,
    FAMILY_F4,
    FAMILY_G2,
    FAMILY_2G2,
    FAMILY_3D4,
    FAMILY_2B2,
    FAMILY_2F4,
)

# smallest admissible rank of the classical families
MIN_RANK = {
    FAMILY_A: 1,
    FAMILY_2A: 2,
    FAMILY_B: 2,
    FAMILY_C: 2,
    FAMILY_D: 4,
    FAMILY_2D: 4,
}

# rank stored for the families of fixed rank; the Suzuki and Ree families
# carry their twisted rank
FIXED_RANK = {
    FAMILY_E6: 6,
    FAMILY_2E6: 6,
    FAMILY_E7: 7,
    FAMILY_E8: 8,
    FAMILY_F4: 4,
    FAMILY_G2: 2,
    FAMILY_3D4: 4,
    FAMILY_2B2: 1,
    FAMILY_2G2: 1,
    FAMILY_2F4: 2,
}

# subscript of the fixed-rank families, also accepted as rank on input
FIXED_SUBSCRIPT = {family: rank for family, rank in FIXED_RANK.items()}
FIXED_SUBSCRIPT.update({FAMILY_2B2: 2, FAMILY_2G2: 2, FAMILY_2F4: 4})

# (family, rank, q) triples that are not simple
NON_SIMPLE_LIE = {
    (FAMILY_A, 1, 2): "PSL(2,2) is solvable",
    (FAMILY_A, 1, 3): "PSL(2,3) is solvable",
    (FAMILY_2A, 2, 2): "PSU(3,2) is solvable",
    (FAMILY_B, 2, 2): "B2(2) is isomorphic to Sym(6)",
    (FAMILY_C, 2, 2): "C2(2) is isomorphic to Sym(6)",
    (FAMILY_G2, 2, 2): "G2(2) is not perfect",
    (FAMILY_2G2, 1, 3): "2G2(3) is not perfect",
    (FAMILY_2B2, 1, 2): "2B2(2) is solvable",
    (FAMILY_2F4, 2, 2): "2F4(2) is not perfect; use Spor(Tits) for its derived group",
}

# =============================================================================
# Weyl groups

# untwisted root system whose Weyl group is used for a twisted family
WEYL_AMBIENT = {
    FAMILY_2A: (FAMILY_A, None),
    FAMILY_2D: (FAMILY_D, None),
    FAMILY_2E6: (FAMILY_E6, 6),
    FAMILY_3D4: (FAMILY_D, 4),
    FAMILY_2B2: (FAMILY_B, 2),
    FAMILY_2G2: (FAMILY_G2, 2),
    FAMILY_2F4: (FAMILY_F4, 4),
}

# exceptional root systems: untwisted rank, divisor of the torus order,
# structure and order of W
EXCEPTIONAL_WEYL = {
    FAMILY_E6: {
        "rank": 6,
        "delta": "(3, q-eta)",
        "structure": "Sp4(3)",
        "order": 51840,
    },
    FAMILY_E7: {
        "rank": 7,
        "delta": "2",
        "structure": "2xPOmega7(2)",
        "order": 2903040,
    },
    FAMILY_E8: {
        "rank": 8,
        "delta": "1",
        "structure": "2.POmega8+(2).2",
        "order": 696729600,
    },
    FAMILY_F4: {"rank": 4, "delta": "1", "structure": "W(F4)", "order": 1152},
    FAMILY_G2: {"rank": 2, "delta": "1", "structure": "W(G2)", "order": 12},
}

# =============================================================================
# oracle: simple groups sharing an order, told apart by their largest element order

ORDER_COLLISIONS = {
    20160: {15: ("alternating", 8), 7: ("lie", (FAMILY_A, 2, 4))},
}

# trace flags
FLAG_WEYL_READING_DIFFERS = "weyl-reading-differs"
FLAG_TWISTED_WEYL_AMBIENT = "twisted-weyl-ambient"
FLAG_TITS_NOT_APPLIED = "tits-conditions-not-applied"
