"""Published closed forms and 30-digit reference values, as text in the expression grammar."""
from __future__ import annotations

# (sum, value of the closed form, value of the direct numerical sum), 30 digits each
TABLE_ONE: tuple[tuple[str, str, str], ...] = (
    ("S(2,2;3)", "1.35125578526281388688070479101", "1.35125578526281388688070478635"),
    ("S(2,3;2)", "2.04014406352629668230178759593", "2.04014406352629668230178759172"),
    ("S(1,2;5)", "1.07388087034296588059339568891", "1.07388087034296588059339568663"),
    ("S(1,3;4)", "1.15201859049597540982393939989", "1.15201859049597540982393939372"),
    ("S(1,4;3)", "1.37755320390542981268777869872", "1.37755320390542981268777869712"),
    ("S(1,5;2)", "2.45339834780017683307966649793", "2.45339834780017683307966649461"),
    ("S(2,2;4)", "1.13642391274089928376327915373", "1.13642391274089928376327915559"),
    ("S(2,4;2)", "1.95980117454124719492773304920", "1.95980117454124719492773304287"),
    ("S(2,2;5)", "1.05972458873705638208576920975", "1.05972458873705638208576920818"),
    ("S(2,5;2)", "1.92499254625584068819896689186", "1.92499254625584068819896688762"),
    ("S(3,4;2)", "1.80313006078587093607835773253", "1.80313006078587093607835772809"),
    ("S(1,2;7)", "1.01603499621822946463309621255", "1.01603499621822946463309621221"),
    ("S(1,3;6)", "1.03017876630576928913732006061", "1.03017876630576928913732005893"),
    ("S(1,4;5)", "1.06164990978502285301181351196", "1.06164990978502285301181351270"),
    ("S(1,5;4)", "1.13783419529420067466663388885", "1.13783419529420067466663388537"),
    ("S(1,6;3)", "1.35867450783449320806721637607", "1.35867450783449320806721637012"),
    ("S(1,7;2)", "2.41561649536052525591387317796", "2.41561649536052525591387317514"),
)

# quadratic sums in zeta values and the linear sums S(2;6), S(2;8)
QUADRATIC_CLOSED_FORMS: dict[str, str] = {
    "S(1,2;3)": "-101/48*z6 + 5/2*z3^2",
    "S(1,3;2)": "227/48*z6 - 3/2*z3^2",
    "S(1,2;5)": "-343/48*z8 + 12*z3*z5 - 5/2*z2*z3^2 - 3/4*S(2;6)",
    "S(1,3;4)": "-511/144*z8 + 7*z3*z5 + z2*z3^2 - 25/4*S(2;6)",
    "S(1,4;3)": "443/48*z8 - 21/2*z3*z5 - 1/2*z2*z3^2 + 25/4*S(2;6)",
    "S(1,5;2)": "1063/144*z8 - 13/2*z3*z5 + z2*z3^2 + 3/4*S(2;6)",
    "S(1,2;7)": "-1331/80*z10 + 43/4*z5^2 + 41/2*z3*z7 - 7*z2*z3*z5 - 2*z3^2*z4 - 5/4*S(2;8)",
    "S(1,3;6)": "-247/40*z10 - 5/4*z5^2 - 15/2*z3*z7 + 12*z2*z3*z5 - 21/4*S(2;8) - z2*S(2;6)",
    "S(1,4;5)": (
        "6033/160*z10 - 14*z5^2 - 4*z3*z7 - 15*z2*z3*z5 - 1/2*z3^2*z4"
        " + 21/2*S(2;8) + 5/2*z2*S(2;6)"
    ),
    "S(1,5;4)": "-6569/240*z10 + 16*z5^2 + 10*z3*z7 + 4*z2*z3*z5 + z3^2*z4 - 21/2*S(2;8)",
    "S(1,6;3)": (
        "1043/160*z10 - 17/4*z5^2 - 15/2*z3*z7 + 4*z2*z3*z5 - 1/2*z3^2*z4"
        " - 5/2*z2*S(2;6) + 21/4*S(2;8)"
    ),
    "S(1,7;2)": "242/15*z10 - 25/4*z5^2 - 19/2*z3*z7 + z3^2*z4 + z2*S(2;6) + 5/4*S(2;8)",
    "S(2,2;3)": "-155/8*z7 + 19/2*z3*z4 + 5*z2*z5",
    "S(2,3;2)": "131/16*z7 - 3/2*z3*z4 - 5/2*z2*z5",
    "S(2,2;4)": "11*S(2;6) + 457/18*z8 + 6*z2*z3^2 - 40*z3*z5",
    "S(2,4;2)": "-9/2*S(2;6) - 403/36*z8 - 3*z2*z3^2 + 20*z3*z5",
    "S(2,2;5)": "-1069/36*z9 + 4/3*z3^3 + 7*z2*z7 - 4/3*z3*z6 + 33/2*z4*z5",
    "S(2,5;2)": "2059/72*z9 - 2/3*z3^3 - 14*z2*z7 + 8/3*z3*z6 - 5*z4*z5",
    "S(3,4;2)": "-7/2*z9 + 7*z2*z7 - 31/6*z3*z6 - 1/2*z4*z5 + 1/3*z3^3",
    "S(2,3;4)": "937/36*z9 + 1/3*z3^3 - 7*z2*z7 + z3*z6 - 27/2*z4*z5",
    "S(2,4;3)": "-2197/36*z9 - 2/3*z3^3 + 21*z2*z7 + 95/12*z3*z6 + 17*z4*z5",
}

# the quadratic sums of weight 6 and 7 whose closed forms must come out of the solver exactly
EXACT_TARGETS: tuple[str, ...] = ("S(1,2;3)", "S(1,3;2)", "S(2,2;3)", "S(2,3;2)")

# combinations of quadratic sums with closed forms (lhs, rhs)
COMBINATIONS: tuple[tuple[str, str, str], ...] = (
    ("square_pair_w7_a", "2*S(2,3;2) + S(2,2;3)", "13/2*z3*z4 - 3*z7"),
    ("square_pair_w7_b", "S(2,3;2) + S(2,2;3)", "-179/16*z7 + 8*z3*z4 + 5/2*z2*z5"),
    ("square_pair_w8_a", "S(2,2;4) + 2*S(2,4;2)", "3*z8 + 2*S(2;6)"),
    ("square_pair_w8_b", "S(2,2;4) - S(2,4;2)", "1317/36*z8 - 60*z3*z5 + 9*z2*z3^2 + 31/2*S(2;6)"),
    ("square_pair_w9_a", "2*S(2,5;2) + S(2,2;5)", "55/2*z9 - 21*z2*z7 + 4*z3*z6 + 13/2*z4*z5"),
    ("square_pair_w9_b", "S(2,5;2) + S(2,2;5)", "-79/72*z9 - 7*z2*z7 + 4/3*z3*z6 + 23/2*z4*z5 + 2/3*z3^3"),
    ("square_pair_w9_c", "S(2,4;3) + S(2,3;4)", "-35*z9 + 14*z2*z7 + 107/12*z3*z6 + 7/2*z4*z5 - 1/3*z3^3"),
    ("square_triple_w9", "S(2,4;3) + S(2,3;4) + S(3,4;2)", "-77/2*z9 + 21*z2*z7 + 15/4*z3*z6 + 3*z4*z5"),
    ("cube_difference_w9", "S(3,4;2) - S(2,3;4)", "-1063/36*z9 + 14*z2*z7 - 37/6*z3*z6 + 13*z4*z5"),
)

# weight-six sums with alternating factors (lhs, rhs)
ALTERNATING_WEIGHT_SIX: tuple[tuple[str, str, str], ...] = (
    (
        "alternating_pair_w6",
        "S(b1,3;2) + S(b1,2;3)",
        "3/4*z3^2 + 7/4*z6 + 5/8*z2*z3*ln2 - 2*z2*Li4(1/2) + 5/4*z4*ln2^2 - 1/12*z2*ln2^4",
    ),
    (
        "alternating_outer_w6",
        "S(2,3;b1)",
        "-161/64*z6 + 31/16*z5*ln2 + 9/32*z3^2 + 3/8*z2*z3*ln2 + 2*z2*Li4(1/2)"
        " - 5/4*z4*ln2^2 + 1/12*z2*ln2^4 + S(2;b4) - S(b3;3)",
    ),
    (
        "alternating_b1_2_3",
        "S(b1,2;3)",
        "29/8*z2*z3*ln2 - 93/32*z5*ln2 - 1855/128*z6 + 17/16*z3^2"
        " - S(b1;b5) + S(b2;4) + 4*S(2;b4) + 8*S(1;b5)",
    ),
    (
        "alternating_b1_3_2",
        "S(b1,3;2)",
        "2079/128*z6 + 93/32*z5*ln2 - 5/16*z3^2 - 3*z2*z3*ln2 - 2*z2*Li4(1/2)"
        " + 5/4*z4*ln2^2 - 1/12*z2*ln2^4 + S(b1;b5) - S(b2;4) - 4*S(2;b4) - 8*S(1;b5)",
    ),
)
