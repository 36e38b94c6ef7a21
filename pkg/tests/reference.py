"""Reference values read off the published tables."""

# reference values: the table of H^p(p₊, V)
TABLE3 = {
    ("C", 0): {(0, 0)},
    ("sl3", 0): {(1, 1)},
    ("C", 1): {(-2, 1), (1, -2)},
    ("sl3", 1): {(-3, 3), (3, -3)},
    ("C", 2): {(0, -3), (-3, 0)},
    ("sl3", 2): {(1, -5), (-5, 1)},
}


# reference values: weights, total homogeneity, (E_L, E_R, F_L, F_R), cochain shape on the p₊ side
TABLE4 = [
    (((1, 1), (0, -3)), -1, (2, -3, 0, 1), ((("R", "1,0"), ("R", "2")), ("L", "2"))),
    (((1, 1), (-3, 0)), -1, (2, -3, 0, -1), ((("R", "0,1"), ("R", "2")), ("L", "2"))),
    (((-3, 3), (-2, 1)), -1, (0, -1, -2, -1), ((("L", "0,1"), ("R", "0,1")), ("L", "1,0"))),
    (((-3, 3), (1, -2)), -1, (0, -1, -2, 1), ((("L", "0,1"), ("R", "1,0")), ("L", "1,0"))),
    (((3, -3), (-2, 1)), -1, (0, -1, 2, -1), ((("L", "1,0"), ("R", "0,1")), ("L", "0,1"))),
    (((3, -3), (1, -2)), -1, (0, -1, 2, 1), ((("L", "1,0"), ("R", "1,0")), ("L", "0,1"))),
    (((1, -5), (0, 0)), -4, (-4, 2, 0, 0), ((("L", "1,0"), ("L", "2")), ("L", "-1,0"))),
    (((-5, 1), (0, 0)), -4, (-4, -2, 0, 0), ((("L", "0,1"), ("L", "2")), ("L", "0,-1"))),
]


# reference values: (homogeneity, domain, target, comment); domains as unordered pairs
TABLE1 = {
    (1, ("gR-2", "gR-1"), "gL-2", "real linear in both arguments"),
    (1, ("gL-2", "gL-1"), "gR-2", "real linear in both arguments"),
    (1, ("gL-1", "gR-1"), "gL-1", "antilinear in both arguments"),
    (1, ("gL-1", "gR-1"), "gR-1", "sesquilinear"),
    (1, ("gR-1", "gL-1"), "gR-1", "antilinear in both arguments"),
    (1, ("gR-1", "gL-1"), "gL-1", "sesquilinear"),
    (4, ("gL-2", "gL-1"), "gL1", "real and complex linear"),
    (4, ("gR-2", "gR-1"), "gR1", "real and complex linear"),
}
TABLE2 = {
    (1, ("g-2", "gL-1"), "g-2", "antilinear in both arguments"),
    (1, ("g-2", "gR-1"), "g-2", "antilinear in both arguments"),
    (1, ("gL-1", "gL-1"), "gR-1", "sesquilinear"),
    (1, ("gR-1", "gR-1"), "gL-1", "sesquilinear"),
    (1, ("gR-1", "gL-1"), "gL-1", "sesquilinear"),
    (1, ("gL-1", "gR-1"), "gR-1", "sesquilinear"),
    (4, ("g-2", "gL-1"), "gL1", "complex linear in both arguments"),
    (4, ("g-2", "gR-1"), "gR1", "complex linear in both arguments"),
}
