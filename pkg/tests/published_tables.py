"""Worked tables transcribed from the source article, rendered in package notation."""

PHI_18_FIXED = {
    "(1_x+17_x, ε)",
    "(3_x+15_x, ε)",
    "(5_x+13_x, ε)",
    "(7_x+11_x, ε)",
    "(1+3+5_x+9_x, ε)",
}

PHI_18_PAIRS = {
    ("(1, 17)", "(ε, 1+17)"),
    ("(1, 3+5+9)", "(ε, 1+3+5+9)"),
    ("(3, 15)", "(ε, 3+15)"),
    ("(3, 3+5+7)", "(1+5, 5+7)"),
    ("(5, 13)", "(ε, 5+13)"),
    ("(7, 11)", "(ε, 7+11)"),
    ("(9, 9)", "(7+11, ε)"),
    ("(11, 7)", "(5+13, ε)"),
    ("(13, 5)", "(3+15, ε)"),
    ("(15, 3)", "(1+17, ε)"),
    ("(1+3_x, 5+9)", "(1_x, 3+5+9)"),
    ("(1+5_x, 5+7)", "(3_x, 3+5+7)"),
    ("(1_x+5, 5+7)", "(1+3_x+7, 7)"),
    ("(1+3+5, 9)", "(1+3, 5+9)"),
    ("(1+3+7, 7)", "(1+3+5+9, ε)"),
    ("(1+3_x+7_x, 7)", "(1_x+5_x, 5+7)"),
    ("(1+17_x, ε)", "(15_x, 3)"),
    ("(1_x+17, ε)", "(1_x, 17)"),
    ("(3_x+15, ε)", "(3_x, 15)"),
    ("(3+15_x, ε)", "(13_x, 5)"),
    ("(5_x+13, ε)", "(5_x, 13)"),
    ("(5+13_x, ε)", "(11_x, 7)"),
    ("(7_x+11, ε)", "(7_x, 11)"),
    ("(7+11_x, ε)", "(9_x, 9)"),
    ("(1+3+5+9_x, ε)", "(1+3+7_x, 7)"),
    ("(1+3+5_x+9, ε)", "(1+3+5_x, 9)"),
}

IOTA_9_FIXED = {
    "(9_x, ε)",
    "(1_x+8_x, ε)",
    "(2_x+7_x, ε)",
    "(3_x+6_x, ε)",
    "(4_x+5_x, ε)",
    "(1_x+2_x+6_x, ε)",
    "(1_x+3_x+5_x, ε)",
    "(2_x+3_x+4_x, ε)",
}

IOTA_9_PAIRS = {
    ("(ε, 9)", "(9, ε)"),
    ("(ε, 1+2+6)", "(1, 2+6)"),
    ("(ε, 1+3+5)", "(1, 3+5)"),
    ("(ε, 2+3+4)", "(2, 3+4)"),
    ("(7, 2)", "(1+8, ε)"),
    ("(7_x, 2)", "(1+8_x, ε)"),
    ("(6, 3)", "(2+7, ε)"),
    ("(6_x, 3)", "(2+7_x, ε)"),
    ("(5, 4)", "(3+6, ε)"),
    ("(5_x, 4)", "(3+6_x, ε)"),
    ("(4, 5)", "(ε, 4+5)"),
    ("(4_x, 5)", "(4_x+5, ε)"),
    ("(3, 6)", "(ε, 3+6)"),
    ("(3_x, 6)", "(3_x+6, ε)"),
    ("(2, 7)", "(ε, 2+7)"),
    ("(2_x, 7)", "(2_x+7, ε)"),
    ("(1, 8)", "(ε, 1+8)"),
    ("(1_x, 8)", "(1_x+8, ε)"),
    ("(1+5, 3)", "(4, 2+3)"),
    ("(1_x+5, 3)", "(1_x+2+6, ε)"),
    ("(1+5_x, 3)", "(4_x, 2+3)"),
    ("(1_x+5_x, 3)", "(1_x+2+6_x, ε)"),
    ("(2+4, 3)", "(1+3+5, ε)"),
    ("(2_x+4, 3)", "(1+3_x+5, ε)"),
    ("(2+4_x, 3)", "(1+3+5_x, ε)"),
    ("(2_x+4_x, 3)", "(1+3_x+5_x, ε)"),
    ("(1+4, 4)", "(3, 2+4)"),
    ("(1_x+4, 4)", "(1_x+3+5, ε)"),
    ("(1+4_x, 4)", "(3_x, 2+4)"),
    ("(1_x+4_x, 4)", "(1_x+3+5_x, ε)"),
    ("(2_x+3, 4)", "(2_x, 3+4)"),
    ("(2_x+3_x, 4)", "(2_x+3_x+4, ε)"),
    ("(1+3, 5)", "(2, 2+5)"),
    ("(1_x+3, 5)", "(1_x, 3+5)"),
    ("(1+3_x, 5)", "(2_x, 2+5)"),
    ("(1_x+3_x, 5)", "(1_x+3_x+5, ε)"),
    ("(1_x+2, 6)", "(1_x, 2+6)"),
    ("(1_x+2_x, 6)", "(1_x+2_x+6, ε)"),
}
