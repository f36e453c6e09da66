"""Transcribed relation forms and identities.

Everything here is plain data in the expression syntax of :mod:`modring.expr`;
:mod:`modring.relations` turns it into checkable objects. Names ``O_*``
inside an identity stand for the relation form of that name, and
``O_*^(h)`` for its rescaling.
"""

# (name, level, weight, expression)
RELATIONS: list[tuple[str, int, int, str]] = [
    ("O_3", 3, 8, "alpha3^2 - C3*beta3"),
    ("O_6", 6, 4, "alpha6^2 - C3^(2)*beta6"),
    ("O_12b", 12, 4, "gamma12^2 - beta6*beta6^(2)"),
    ("O_12c", 12, 4, "C3^(2)*gamma12 - (beta6 + 2*gamma12 + 4*beta6^(2))*alpha6"),
    ("O_12d", 12, 4, "alpha6*gamma12 - (beta6 + 2*gamma12 + 4*beta6^(2))*beta6"),
    ("O_12e", 12, 4, "alpha6*beta6^(2) - (beta6 + 2*gamma12 + 4*beta6^(2))*gamma12"),
    ("O_12f", 12, 4,
     "C3^(2)*beta6^(2) - beta6^2 - 4*alpha6*beta6^(2) - 4*gamma12^2 - 16*beta6^(2)^2"),
    ("O_5", 5, 8, "alpha5^2 - (C5^2 + 4*alpha5 - 8*beta5)*beta5"),
    ("O_7a", 7, 8, "beta7^2 - C7*delta7"),
    ("O_7b", 7, 8, "C7*gamma7 - alpha7*beta7"),
    ("O_7c", 7, 10, "beta7*gamma7 - alpha7*delta7"),
    ("O_7d", 7, 8, "alpha7^2 - (C7^2 + 7*alpha7 - 19*beta7)*beta7"),
    ("O_7e", 7, 10, "alpha7*gamma7 - (C7*beta7 + 7*gamma7 - 19*delta7)*beta7"),
    ("O_7f", 7, 12, "gamma7^2 - (C7*beta7 + 7*gamma7 - 19*delta7)*delta7"),
    ("O_8", 8, 4, "alpha4^2 - C4^(2)*alpha4^(2)"),
    ("O_9", 9, 4, "alpha9^2 - C3*beta9"),
    ("O_10a", 10, 4, "alpha10^2 - u10*beta10"),
    ("O_10b", 10, 6, "alpha10*eps10 - u10*zeta10"),
    ("O_10c", 10, 6, "beta10*eps10 - alpha10*zeta10"),
    ("O_10d", 10, 6, "alpha10*beta10^2 - (u10 + 8*alpha10 + 20*beta10)*eps10"),
    ("O_10e", 10, 6, "beta10^3 - (alpha10*eps10 + 8*beta10*eps10 + 20*beta10*zeta10)"),
    ("O_10f", 10, 8, "beta10^2*zeta10 - (eps10^2 + 8*eps10*zeta10 + 20*zeta10^2)"),
    ("O_10e'", 10, 6, "beta10^3 - (u10 + 8*alpha10 + 20*beta10)*zeta10"),
    ("O_16b", 16, 4, "gamma16^2 - alpha4^(2)*alpha4^(4)"),
    ("O_16c", 16, 4, "C4^(2)*gamma16 - (alpha4^(2) + 4*alpha4^(4))*alpha4"),
    ("O_16d", 16, 4, "alpha4*gamma16 - (alpha4^(2) + 4*alpha4^(4))*alpha4^(2)"),
    ("O_16e", 16, 4, "alpha4*alpha4^(4) - (alpha4^(2) + 4*alpha4^(4))*gamma16"),
    ("O_16f", 16, 4, "C4^(2)*alpha4^(4) - (alpha4^(2) + 4*alpha4^(4))^2"),
    ("O_18a", 18, 4, "u18*gamma18 - alpha18*beta6"),
    ("O_18b", 18, 4, "u18*eps18 - alpha18*delta18"),
    ("O_18c", 18, 4, "gamma18^2 - u18*beta6^(3)"),
    ("O_18d", 18, 4, "beta6*eps18 - gamma18*delta18"),
    ("O_18e", 18, 4, "delta18^2 - beta6*beta6^(3)"),
    ("O_18f", 18, 4, "delta18*eps18 - gamma18*beta6^(3)"),
    ("O_18A", 18, 4, "(u18 + 3*beta6)*delta18 - beta6*(beta6 + 3*gamma18)"),
    ("O_18B", 18, 4, "(alpha18 + 3*gamma18)*delta18 - gamma18*(beta6 + 3*gamma18)"),
    ("O_18C", 18, 4, "(alpha18 + 3*gamma18)*eps18 - beta6^(3)*(u18 + 3*alpha18)"),
    ("O_18D", 18, 4, "alpha18*gamma18 - u18*(delta18 + 3*eps18 - 3*beta6^(3))"),
    ("O_18E", 18, 4, "gamma18^2 - beta6*(delta18 + 3*eps18 - 3*beta6^(3))"),
    ("O_18F", 18, 4, "alpha18*beta6^(3) - gamma18*(delta18 + 3*eps18 - 3*beta6^(3))"),
    ("O_18G", 18, 4, "gamma18*eps18 - delta18*(delta18 + 3*eps18 - 3*beta6^(3))"),
    ("O_18H", 18, 4, "eps18^2 - beta6^(3)*(delta18 + 3*eps18 - 3*beta6^(3))"),
    ("O_18I", 18, 4,
     "alpha18^2 - u18*beta6 - 3*alpha18*gamma18 - 6*alpha18*beta6 + 9*gamma18^2"),
    ("O_18B'", 18, 4, "(u18 + 3*beta6)*eps18 - gamma18*(beta6 + 3*gamma18)"),
    ("O_18X", 18, 4,
     "alpha18*gamma18 - beta6^2 - 3*gamma18^2 - 6*beta6*gamma18 + 9*beta6*beta6^(3)"),
    ("O_25a", 25, 4, "alpha25^2 - u25*E_i5"),
    ("O_25b", 25, 4, "alpha25*E_i5 - u25*gamma25"),
    ("O_25c", 25, 4, "E_i5^2 - alpha25*gamma25"),
    ("O_25d", 25, 4, "E_i5^2 - u25*delta25"),
    ("O_25e", 25, 4, "E_i5*gamma25 - alpha25*delta25"),
    ("O_25f", 25, 4, "gamma25^2 - E_i5*delta25"),
    ("O_25A", 25, 6, "u25*iota25 - alpha25*(delta25^2 - 5*beta5^(5))"),
    ("O_25B", 25, 6, "alpha25*iota25 - E_i5*(delta25^2 - 5*beta5^(5))"),
    ("O_25C", 25, 6, "E_i5*iota25 - gamma25*(delta25^2 - 5*beta5^(5))"),
    ("O_25D", 25, 6, "gamma25*iota25 - delta25*(delta25^2 - 5*beta5^(5))"),
    ("O_25E", 25, 6, "u25*beta5^(5) - alpha25*(iota25 - 2*beta5^(5))"),
    ("O_25F", 25, 6, "alpha25*beta5^(5) - E_i5*(iota25 - 2*beta5^(5))"),
    ("O_25G", 25, 6, "E_i5*beta5^(5) - gamma25*(iota25 - 2*beta5^(5))"),
    ("O_25H", 25, 6, "gamma25*beta5^(5) - delta25*(iota25 - 2*beta5^(5))"),
    ("O_25I", 25, 8, "(delta25^2 - 5*beta5^(5))*beta5^(5) - iota25*(iota25 - 2*beta5^(5))"),
]

# Short identities: (name, [expr, expr, ...]); consecutive entries are equal.
IDENTITIES: list[tuple[str, list[str]]] = [
    ("E8 = E4^2", ["E8", "E4^2"]),
    ("E4 via C4*alpha4", ["E4", "C2^2 + 192*C4*alpha4"]),
    ("E4^(2) via C4*alpha4", ["E4^(2)", "C2^2 - 48*C4*alpha4"]),
    ("alpha2 = C4*alpha4", ["alpha2", "(E4 - E4^(2))/240", "C4*alpha4"]),
    ("E6 at level 2", ["E6", "C2*(4*C2^2 - 3*E4)"]),
    ("C2 via alpha4", ["C2", "C4 + 16*alpha4"]),
    ("C2^(2) via alpha4", ["C2^(2)", "C4 - 8*alpha4"]),
    ("beta6 = alpha6^2/C3^(2)", ["beta6", "alpha6^2/C3^(2)"]),
    ("C3 via alpha6", ["C3", "(C3^(2) + 6*alpha6)^2/C3^(2)"]),
    ("C2 in level 12", ["C2", "C3^(2) + 24*alpha6 + 36*beta6"]),
    ("C3 in level 12", ["C3", "C3^(2) + 12*alpha6 + 36*beta6"]),
    ("C4 in level 12", ["C4", "C3^(2) + 8*alpha6 + 20*beta6 + 16*gamma12 - 16*beta6^(2)"]),
    ("C6 in level 12", ["C6", "5*C3^(2) + 24*alpha6 + 36*beta6"]),
    ("C12 in level 12",
     ["C12", "11*C3^(2) + 24*alpha6 - 36*beta6 - 144*gamma12 - 144*beta6^(2)"]),
    ("O_6^(2) in level 12", [
        "-O_6^(2)",
        "-alpha6^(2)^2 + C3^(4)*beta6^(2)",
        "-(1/12*(1/2*(3*C4 - C2) - C3^(2)))^2 + 1/8*(-3*C4 + C12)*beta6^(2)",
        "C3^(2)*beta6^(2) - beta6^2 - 4*beta6*gamma12 - 8*beta6*beta6^(2) - 4*gamma12^2"
        " - 16*gamma12*beta6^(2) - 16*beta6^(2)^2",
        "8*O_12b + 4*O_12e + O_12f",
    ]),
    ("C4 via alpha4^(2)", ["C4", "C4^(2) + 8*alpha4 + 16*alpha4^(2)"]),
    ("O_8 from E4^(4)", [
        "(C2^(2)^2 - 48*C4^(2)*alpha4^(2)) - 1/4*(5*C2^(2)^2 - (C2^2 - 48*C4*alpha4))",
        "48*O_8",
    ]),
    ("O_16f rescaled", ["O_16f", "(C4*alpha4^(2) - (alpha4 + 4*alpha4^(2))^2)^(2)"]),
    ("gamma16 quotient", ["gamma16", "(alpha4^(2) + 4*alpha4^(4))*alpha4/C4^(2)"]),
    ("E4^(3) at level 3", ["E4^(3)", "1/9*(10*C3^2 - E4)"]),
    ("E6^(3) at level 3", ["E6^(3)", "1/27*(35*C3^3 - 7*C3*E4 - E6)"]),
    ("O_3 at level 3", ["O_3", "1/6^3*(27*C3^4 - 18*C3^2*E4 - E4^2 - 8*C3*E6)"]),
    ("E4 in level 9", ["E4", "C3^2 + 6^3*C9*alpha9"]),
    ("E4^(3) in level 9", ["E4^(3)", "C3^2 - 24*C9*alpha9"]),
    ("alpha3 in level 9", ["alpha3", "C9*alpha9"]),
    ("O_3 in level 9", [
        "O_3",
        "1/6^3*(27*C3^4 - 18*C3^2*E4 - E4^2 - 8*C3*E6)",
        "1/3^3*(C3^4 - 540*C3^2*C9*alpha9 - 5832*C9^2*alpha9^2 - C3*E6)",
    ]),
    ("O_3^(3) in level 9", [
        "O_3^(3)",
        "1/3^7*(C3^4 - 4*C3^3*C9 - 540*C3^2*C9*alpha9 - 864*C3*C9^3"
        " + 2160*C3*C9^2*alpha9 + 864*C9^4 + 7776*C9^3*alpha9 - 5832*C9^2*alpha9^2"
        " - C3*E6 + 4*C9*E6)",
    ]),
    ("E6 in level 9", [
        "27/4*(O_3 - 3^4*O_3^(3))/C9",
        "C3^3 + 216*C3*C9^2 - 540*C3*C9*alpha9 - 216*C9^3 - 1944*C9^2*alpha9 - E6",
    ]),
    ("O_9 via beta3", [
        "C3*beta9", "C3*beta3/C9^2", "alpha3^2/C9^2", "(C9*alpha9)^2/C9^2", "alpha9",
    ]),
    ("O_18c = O_6^(3)", ["O_18c", "O_6^(3)"]),
    ("E6 at level 5", ["E6", "1/8*C5*(2000*C5^2 - 117*E4 - 1875*E4^(5))"]),
    ("E6^(5) at level 5", ["E6^(5)", "1/40*C5*(-80*C5^2 + 3*E4 + 117*E4^(5))"]),
    ("O_5 at level 5", [
        "O_5",
        "1/(12^4*5)*(3520*C5^4 + E4^2 + 625*E4^(5)^2 - 160*C5^2*E4 - 4000*C5^2*E4^(5)"
        " + 14*E4*E4^(5))",
    ]),
    ("E4^(25) closed form", [
        "E4^(25)",
        "1/625*(52*(C5 - 3*C25)^2 + 432*C25^2 - 60*E_rho5^2 + 600*E_r5^2 + 600*E_i5^2"
        " - E4 - 14*E4^(5))",
    ]),
]

# Identities between relation forms that hold as polynomials in the
# generators once each O_* is replaced by its definition.
POLYNOMIAL_IDENTITIES: list[tuple[str, str, str]] = [
    ("O_18B' combination", "O_18B'", "O_18B + O_18b + 3*O_18d"),
    ("O_18X combination", "O_18X", "3*O_18c + O_18A + 3*O_18B' + O_18D + 3*O_18E"),
    ("O_10e' combination", "O_10e'", "O_10e + O_10b + 8*O_10c"),
]

# Long derivations transcribed link by link; consecutive entries are equal
# as q-series.
CHAINS: list[tuple[str, list[str]]] = [
    ('E4 in level 12', [
        'E4',
        'C2^2 + 12*C2*C4 - 12*C4^2',
        (
            'C3^(2)^2 + 240*C3^(2)*alpha6 + 264*C3^(2)*beta6 - 192*C3^(2)*gamma12'
            ' + 192*C3^(2)*beta6^(2) + 2112*alpha6^2 + 7104*alpha6*beta6'
            ' + 1536*alpha6*gamma12 - 1536*alpha6*beta6^(2) + 5136*beta6^2'
            ' - 768*beta6*gamma12 + 768*beta6*beta6^(2) - 3072*gamma12^2'
            ' + 6144*gamma12*beta6^(2) - 3072*beta6^(2)^2'
        ),
        (
            'C3^(2)^2 + 240*C3^(2)*alpha6 + 792*C3^(2)*beta6 + 1584*alpha6^2'
            ' + 6912*alpha6*beta6 + 6480*beta6^2 + 48*(11*O_6 - 112*O_12b - 4*O_12c'
            ' + 24*O_12d - 32*O_12e + 4*O_12f)'
        ),
        'C2^2 + C2*C3 - C3^2 + 5*C3*C6 - C6^2',
    ]),
    ('E4^(2) in level 12', [
        'E4^(2)',
        '(C2^2 + C2*C3 - C3^2 + 5*C3*C6 - C6^2)^(2)',
        (
            'C3^(2)^2 + 216*C3^(2)*beta6 + 432*C3^(2)*gamma12 + 288*C3^(2)*beta6^(2)'
            ' - 1152*beta6^2 - 4608*beta6*gamma12 - 5760*beta6*beta6^(2) - 4608*gamma12^2'
            ' - 11520*gamma12*beta6^(2) - 4608*beta6^(2)^2'
        ),
        (
            'C3^(2)^2 - 108*C3^(2)*beta6 + 324*alpha6^2 + 432*alpha6*beta6 + 36*(-9*O_6'
            ' + 64*O_12b + 12*O_12c + 24*O_12d + 80*O_12e + 8*O_12f)'
        ),
        '1/4*(5*C2^2 - (C2^2 + C2*C3 - C3^2 + 5*C3*C6 - C6^2))',
        '1/4*(5*C2^2 - E4)',
    ]),
    ('E6^(2) at level 4', [
        'E6^(2)',
        'C2^(2)*(4*C2^(2)^2 - 3*(C2^2 - 48*C4*alpha4))',
        '(C4 - 8*alpha4)*(C4 + 16*alpha4)*(C4 - 32*alpha4)',
        '(C4 + 16*alpha4)*(C2^2 - 72*alpha2)',
        '1/8*C2*(11*C2^2 - 3*E4)',
    ]),
    ('E4^(3) in level 12', [
        'E4^(3)',
        '(C2^2 + 12*C2*C4 - 12*C4^2)^(3)',
        (
            'C3^(2)^2 - 24*C3^(2)*beta6 + 192*C3^(2)*gamma12 + 192*C3^(2)*beta6^(2)'
            ' + 144*beta6^2 - 2304*beta6*gamma12 - 2304*beta6*beta6^(2) - 3072*gamma12^2'
            ' - 6144*gamma12*beta6^(2) - 3072*beta6^(2)^2'
        ),
        (
            'C3^(2)^2 - 8*C3^(2)*beta6 - 16*alpha6^2 + 192*alpha6*beta6 + 720*beta6^2'
            ' + 16*(O_6 + 48*O_12b + 12*O_12c + 24*O_12d + 96*O_12e + 12*O_12f)'
        ),
        '1/9*(10*C3^2 - (C2^2 + C2*C3 - C3^2 + 5*C3*C6 - C6^2))',
        '1/9*(10*C3^2 - E4)',
    ]),
    ('E6^(3) in level 12', [
        'E6^(3)',
        '(C2*(4*C2^2 - 3*E4))^(3)',
        (
            '4*C2^(3)^3 - 3*C2^(3)*(C3^(2)^2 - 8*C2^(3)*beta6 - 16*alpha6^2'
            ' + 192*alpha6*beta6 + 720*beta6^2)'
        ),
        (
            'C3^(2)^3 - 84*C3^(2)^2*beta6 + 48*C3^(2)*alpha6^2 - 576*C3^(2)*alpha6*beta6'
            ' - 720*C3^(2)*beta6^2 - 576*alpha6^2*beta6 + 6912*alpha6*beta6^2 + 19008*beta6^3'
        ),
        (
            'C3^(2)^3 + 4/3*C3^(2)^2*beta6 - 112/3*C3^(2)*alpha6^2 - 64*C3^(2)*alpha6*beta6'
            ' - 720*C3^(2)*beta6^2 - 512*alpha6^3 - 576*alpha6^2*beta6 + 6912*alpha6*beta6^2'
            ' + 19008*beta6^3 + 256/3*(C3^(2) + 6*alpha6)*O_6'
        ),
        '1/27*(35*C3^3 - 7*C3*E4 - C2*(4*C2^2 - 3*E4))',
        '1/27*(35*C3^3 - 7*C3*E4 - E6)',
    ]),
    ('alpha3 in level 6', [
        'alpha3',
        '1/240*(E4 - 1/9*(10*C3^2 - E4))',
        '1/6^3*(E4 - C3^2)',
        'C3^(2)*alpha6 + 10*alpha6^2 + 28*alpha6*beta6 + 24*beta6^2',
        '(C3^(2) + 2*alpha6)^2*(C3^(2) + 6*alpha6)*alpha6/C3^(2)^2',
    ]),
    ('beta3 in level 6', [
        'beta3',
        '1/12*(1/504*(1/27*(35*C3^3 - 7*C3*E4 - E6) - E6) - C3*1/6^3*(E4 - C3^2))',
        '1/108^2*(7*C3^3 - 5*C3*E4 - 2*E6)',
        'C3^(2)*alpha6^2 + 8*alpha6^3 + 24*alpha6^2*beta6 + 32*alpha6*beta6^2 + 16*beta6^3',
        '(C3^(2) + 2*alpha6)^4*alpha6^2/C3^(2)^3',
    ]),
    ('C4*alpha4^(2) at level 8', [
        'C4*alpha4^(2)',
        '(C4^(2) + 4*alpha4)^2/C4^(2)*alpha4^2/C4^(2)',
        '((C4^(2) + 4*alpha4)*alpha4/C4^(2))^2',
        '(alpha4 + 4*alpha4^(2))^2',
    ]),
    ('beta3 in level 9', [
        'beta3',
        '1/108^2*(7*C3^3 - 5*C3*E4 - 2*E6)',
        '1/27*C9^2*(-C3 + C9 + 9*alpha9)',
        'C9^2*beta9',
    ]),
    ('O_6 in level 18', [
        'O_6',
        (
            '-u18*beta6 + alpha18^2 - 6*alpha18*beta6 - 3*beta6^2 - 18*beta6*gamma18'
            ' + 27*beta6*beta6^(3)'
        ),
        'O_18I + 3*O_18X',
    ]),
    ('E4^(3) in level 18', [
        '(C2^2 + C2*C3 - C3^2 + 5*C3*C6 - C6^2)^(3) - (C3^2 - 24*C9*alpha9)',
        (
            '16*(-u18*beta6 + 12*u18*gamma18 + 9*u18*beta6^(3) + alpha18^2 - 18*alpha18*beta6'
            ' - 3*beta6^2 - 18*beta6*gamma18 + 27*beta6*beta6^(3) - 9*gamma18^2)'
        ),
        '16*(12*O_18a - 9*O_18c + O_18I + 3*O_18X)',
    ]),
    ('E4 in level 18', [
        '(C2^2 + C2*C3 - C3^2 + 5*C3*C6 - C6^2) - (C3^2 + 6^3*C9*alpha9)',
        (
            '72*(-11*u18*beta6 - 21*u18*gamma18 + 27*u18*delta18 + 9*u18*eps18 + 11*alpha18^2'
            ' - 45*alpha18*beta6 - 36*alpha18*gamma18 + 81*alpha18*delta18 + 27*alpha18*eps18'
            ' - 81*alpha18*beta6^(3) - 24*beta6^2 - 153*beta6*gamma18 + 81*beta6*delta18'
            ' + 27*beta6*eps18 - 27*beta6*beta6^(3) - 189*gamma18^2 + 243*gamma18*delta18'
            ' + 81*gamma18*eps18)'
        ),
        (
            '72*(-21*O_18a - 36*O_18c + 24*O_18A + 81*O_18B + 27*O_18C - 3*O_18D - 9*O_18E'
            ' + 11*O_18I)'
        ),
        '72*3*(8*O_18A + 27*O_18B + 9*O_18C - O_18D - 3*O_18E)',
        "72*3*3*(3*alpha18/u18 + 1)*(3*O_18A + O_18B')",
    ]),
    ('E4^(2) in level 18', [
        '1/4*(5*C2^2 - (C2^2 + C2*C3 - C3^2 + 5*C3*C6 - C6^2)) - (C3^2 + 6^3*C9*alpha9)^(2)',
        (
            '108*(-3*u18*beta6 - 4*u18*gamma18 - 6*u18*delta18 - 6*u18*eps18'
            ' + 18*u18*beta6^(3) + 3*alpha18^2 - 14*alpha18*beta6 - 3*beta6^2'
            ' - 30*beta6*gamma18 - 18*beta6*delta18 - 18*beta6*eps18 + 81*beta6*beta6^(3))'
        ),
        "18*(-4*O_18a + 9*O_18c + 3*O_18A + 21*O_18B' + 9*O_18D + 27*O_18E + 3*O_18I)",
        "18*3*(O_18A + 7*O_18B' + 3*O_18D + 9*O_18E)",
        "-18*3*2*(O_18A + O_18B')",
    ]),
    ('O_9^(2) in level 18', [
        'O_9^(2)',
        (
            '-u18*delta18 - u18*eps18 + 2*u18*beta6^(3) + beta6^2 + 4*beta6*gamma18'
            ' - 6*beta6*delta18 - 6*beta6*eps18 + 6*beta6*beta6^(3) + 4*gamma18^2'
            ' - 6*gamma18*delta18 - 6*gamma18*eps18 + 9*delta18^2 + 18*delta18*eps18'
            ' - 27*delta18*beta6^(3) + 9*eps18^2 - 27*eps18*beta6^(3) + 27*beta6^(3)^2'
        ),
        '-O_18b - 2*O_18c + 3*O_18d + 3*O_18e - O_18A - O_18B + 3*O_18E - 6*O_18G + 9*O_18H',
    ]),
    ('E6 in level 10', [
        'C2*(4*C2^2 - 3*E4) - 1/8*C5*(2000*C5^2 - 117*E4 - 1875*E4^(5))',
        (
            '12*(-1595*u10^2*beta10 + 1595*u10*alpha10^2 - 14406*u10*alpha10*beta10'
            ' - 50612*u10*beta10^2 + 14406*alpha10^3 + 50612*alpha10^2*beta10'
            ' - 216*alpha10*beta10^2 - 29520*beta10^3 + 216*u10*eps10 + 12240*u10*zeta10'
            ' + 19008*alpha10*eps10 + 177120*alpha10*zeta10 + 63360*beta10*eps10'
            ' + 590400*beta10*zeta10)'
        ),
        (
            '12*((1595*u10 + 14406*alpha10 + 50612*beta10)*O_10a - 72*(170*O_10b + 2460*O_10c'
            ' + 3*O_10d + 410*O_10e))'
        ),
        '12*72*((170 + 2460*alpha10/u10 - 8200*beta10/u10)*O_10b - (3 + 410*alpha10/u10)*O_10d)',
    ]),
    ('E6^(2) in level 10', [
        (
            '1/8*C2*(11*C2^2 - 3*E4) - 1/8*C5^(2)*(2000*C5^(2)^2 - 117/4*(5*C2^2 - E4)'
            ' - 1875/4*(5*C2^2 - E4)^(5))'
        ),
        (
            '3*(455*u10^2*beta10 - 455*u10*alpha10^2 + 5058*u10*alpha10*beta10'
            ' + 16736*u10*beta10^2 - 5058*alpha10^3 - 16736*alpha10^2*beta10'
            ' - 1152*alpha10*beta10^2 + 1080*beta10^3 + 1152*u10*eps10 - 9720*u10*zeta10'
            ' + 17856*alpha10*eps10 - 38160*alpha10*zeta10 + 52560*beta10*eps10'
            ' - 21600*beta10*zeta10)'
        ),
        (
            '3*(-(455*u10 + 5058*alpha10 + 16736*beta10)*O_10a + 72*(135*O_10b + 530*O_10c'
            ' - 16*O_10d + 15*O_10e))'
        ),
        '3*72*((135 + 530*alpha10/u10 - 300*beta10/u10)*O_10b - (16 - 15*alpha10/u10)*O_10d)',
    ]),
    ('E6^(5) in level 10', [
        'E6^(5)',
        '(C2*(4*C2^2 - 3*E4))^(5)',
        (
            '12*(13*u10^2*beta10 - 13*u10*alpha10^2 + 162*u10*alpha10*beta10'
            ' + 556*u10*beta10^2 - 162*alpha10^3 - 556*alpha10^2*beta10 + 72*alpha10*beta10^2'
            ' + 432*beta10^3 - 72*u10*eps10 - 432*u10*zeta10 - 576*alpha10*eps10'
            ' - 3744*alpha10*zeta10 - 1152*beta10*eps10 - 8640*beta10*zeta10)'
        ),
        (
            'u10^3 + 18*u10^2*alpha10 - 120*u10^2*beta10 + 240*u10*alpha10^2'
            ' - 1656*u10*alpha10*beta10 - 6528*u10*beta10^2 + 2016*alpha10^3'
            ' + 7008*alpha10^2*beta10 - 576*alpha10*beta10^2 - 5120*beta10^3 + 288*u10*eps10'
            ' + 2304*u10*zeta10 + 3456*alpha10*eps10 + 27648*alpha10*zeta10'
            ' + 11520*beta10*eps10 + 92160*beta10*zeta10 + 12*(-(162*alpha10 + 556*beta10'
            " + 13*u10)*O_10a + 72*(4*O_10c + O_10d + 6*O_10e'))"
        ),
        '1/40*C5*(-80*C5^2 + 3*E4 + 117*E4^(5))',
    ]),
    ('O_5 in level 10', [
        'O_5',
        (
            '4/81*(45*u10^3*beta10 - 45*u10^2*alpha10^2 + 1098*u10^2*alpha10*beta10'
            ' + 4157*u10^2*beta10^2 - 1098*u10*alpha10^3 + 1694*u10*alpha10^2*beta10'
            ' + 42480*u10*alpha10*beta10^2 + 74160*u10*beta10^3 - 5851*alpha10^4'
            ' - 42480*alpha10^3*beta10 - 73188*alpha10^2*beta10^2 + 12960*alpha10*beta10^3'
            ' + 42768*beta10^4 - 324*u10^2*zeta10 - 648*u10*alpha10*eps10'
            ' - 10368*u10*alpha10*zeta10 - 2880*u10*beta10*eps10 - 43200*u10*beta10*zeta10'
            ' - 7488*alpha10^2*eps10 - 68256*alpha10^2*zeta10 - 54432*alpha10*beta10*eps10'
            ' - 508032*alpha10*beta10*zeta10 - 93312*beta10^2*eps10 - 860544*beta10^2*zeta10'
            ' + 5184*eps10^2 + 41472*eps10*zeta10 + 103680*zeta10^2)'
        ),
        (
            '4/81*((-45*u10^2 - 1098*u10*alpha10 - 4157*u10*beta10 - 5851*alpha10^2'
            ' - 42480*alpha10*beta10 - 74160*beta10^2 + 2880*eps10 + 432*zeta10)*O_10a'
            ' + 324*((u10 - 8*alpha10)*O_10b - 36*(3*alpha10 + 8*beta10)*O_10c'
            " + 3*alpha10*O_10d + 4*(10*alpha10 + 33*beta10)*O_10e' - 16*O_10f))"
        ),
        '0',
    ]),
    ('8*E6^(5) at level 25', [
        '1/5*C5*(-80*C5^2 + 3*E4 + 117*E4^(5))',
        '8*E6^(5)',
        'C5^(5)*(2000*C5^(5)^2 - 117*E4^(5) - 1875*E4^(25))',
    ]),
    ('E4^(25) in level 25', [
        'E4^(25)',
        (
            '1/(1875*C5^(5))*(C5^(5)*(2000*C5^(5)^2 - 117*E4^(5)) - 1/5*C5*(-80*C5^2'
            ' + 3*E4 + 117*E4^(5)))'
        ),
        (
            '1/(625*C5^(5))*(625*u25^3 + 7500*u25^2*alpha25 + 18009*u25^2*E_i5'
            ' + 20410*u25^2*gamma25 + 10805*u25^2*delta25 + 28866*u25*alpha25^2'
            ' + 141044*u25*alpha25*E_i5 + 177680*u25*alpha25*gamma25'
            ' + 104440*u25*alpha25*delta25 + 165051*u25*E_i5^2 + 425488*u25*E_i5*gamma25'
            ' + 360000*u25*E_i5*delta25 + 212794*u25*gamma25^2 + 427972*u25*gamma25*delta25'
            ' + 198961*u25*delta25^2 + 32296*alpha25^3 + 227714*alpha25^2*E_i5'
            ' + 362740*alpha25^2*gamma25 + 223370*alpha25^2*delta25 + 419832*alpha25*E_i5^2'
            ' + 1571832*alpha25*E_i5*gamma25 + 1762060*alpha25*E_i5*delta25'
            ' + 1132456*alpha25*gamma25^2 + 3316528*alpha25*gamma25*delta25'
            ' + 1802164*alpha25*delta25^2 - 108621*E_i5^3 - 378738*E_i5^2*gamma25'
            ' + 1991655*E_i5^2*delta25 - 2675894*E_i5*gamma25^2'
            ' + 5762228*E_i5*gamma25*delta25 + 7828569*E_i5*delta25^2 - 5652860*gamma25^3'
            ' - 6961110*gamma25^2*delta25 + 317070*gamma25*delta25^2 + 121205*delta25^3'
            ' - 11532*u25*iota25 - 8616*u25*beta5^(5) - 61968*alpha25*iota25'
            ' - 24384*alpha25*beta5^(5) - 198828*E_i5*iota25 - 17064*E_i5*beta5^(5)'
            ' - 352920*gamma25*iota25 + 65040*gamma25*beta5^(5) - 374460*delta25*iota25'
            ' + 158520*delta25*beta5^(5))'
        ),
        (
            '1/(625*C5^(5))*(625*u25^3 + 7500*u25^2*alpha25 + 18585*u25^2*E_i5'
            ' + 22650*u25^2*gamma25 + 14325*u25^2*delta25 + 28290*u25*alpha25^2'
            ' + 137940*u25*alpha25*E_i5 + 217200*u25*alpha25*gamma25'
            ' + 151800*u25*alpha25*delta25 + 110715*u25*E_i5^2 + 325200*u25*E_i5*gamma25'
            ' + 489600*u25*E_i5*delta25 - 63750*u25*gamma25^2 + 226500*u25*gamma25*delta25'
            ' + 56625*u25*delta25^2 + 33160*alpha25^3 + 239010*alpha25^2*E_i5'
            ' + 489300*alpha25^2*gamma25 + 369450*alpha25^2*delta25 + 346200*alpha25*E_i5^2'
            ' + 1517400*alpha25*E_i5*gamma25 + 2239500*alpha25*E_i5*delta25'
            ' + 105000*alpha25*gamma25^2 + 1458000*alpha25*gamma25*delta25'
            ' + 412500*alpha25*delta25^2 - 53325*E_i5^3 + 372750*E_i5^2*gamma25'
            ' + 2886375*E_i5^2*delta25 - 1569750*E_i5*gamma25^2'
            ' + 3772500*E_i5*gamma25*delta25 + 1625625*E_i5*delta25^2 - 2277500*gamma25^3'
            ' - 813750*gamma25^2*delta25 + 168750*gamma25*delta25^2 + 3125*delta25^3'
            ' - 7500*u25*iota25 + 15000*u25*beta5^(5) - 30000*alpha25*iota25'
            ' + 60000*alpha25*beta5^(5) - 67500*E_i5*iota25 + 135000*E_i5*beta5^(5)'
            ' - 75000*gamma25*iota25 + 150000*gamma25*beta5^(5) - 37500*delta25*iota25'
            ' + 75000*delta25*beta5^(5) + 32*((18*u25 - 27*alpha25 - 1588*E_i5 - 3955*gamma25'
            ' - 4565*delta25)*O_25a + (70*u25 + 1235*alpha25 + 821*E_i5)*O_25b'
            ' - 1701*E_i5*O_25c + (110*u25 + 1480*alpha25 - 27*E_i5 - 6296*gamma25'
            ' - 4448*delta25)*O_25d - (17188*E_i5 + 58079*gamma25 + 43301*delta25)*O_25e'
            ' + (8642*u25 + 32108*alpha25 + 23512*E_i5 - 105480*gamma25'
            ' - 192105*delta25)*O_25f - 126*O_25A - 1737*O_25B - 4635*O_25C - 3690*O_25D'
            ' - 738*O_25E - 531*O_25F + 4995*O_25G + 10530*O_25H))'
        ),
        (
            '1/625*(52*(C5 - 3*C25)^2 + 432*C25^2 - 60*E_rho5^2 + 600*E_r5^2 + 600*E_i5^2'
            ' - E4 - 14*E4^(5))'
        ),
    ]),
]


_E6_5_MAIN = (
    "u10^3 + 18*u10^2*alpha10 - 120*u10^2*beta10 + 240*u10*alpha10^2"
    " - 1656*u10*alpha10*beta10 - 6528*u10*beta10^2 + 2016*alpha10^3"
    " + 7008*alpha10^2*beta10 - 576*alpha10*beta10^2 - 5120*beta10^3 + 288*u10*eps10"
    " + 2304*u10*zeta10 + 3456*alpha10*eps10 + 27648*alpha10*zeta10"
    " + 11520*beta10*eps10 + 92160*beta10*zeta10"
)

# Printed entries that do not hold as written. Each is
# (identity name, entry index, printed substring, replacement, explanation);
# the catalogue uses the corrected entry and the printed one is reported
# as a finding.
MISPRINTS: list[tuple[str, int, str, str, str]] = [
    ("E6^(3) in level 12", 2, "8*C2^(3)*beta6", "8*C3^(2)*beta6",
     "the inner factor is E4^(3) in level-12 generators, whose beta6 term is"
     " -8*C3^(2)*beta6"),
    ("E6^(5) in level 10", 2, "12*(13*u10^2*beta10", _E6_5_MAIN + " + 12*(13*u10^2*beta10",
     "the printed entry is only the relation part; the leading polynomial of"
     " the following entry is missing"),
    ("E4^(2) in level 18", 1, "108*(", "18*(",
     "the printed polynomial is 6 times the relation combination that follows;"
     " both vanish as forms, so only the polynomial comparison detects it"),
    ("O_9 via beta3", 4, "alpha9", "alpha9^2",
     "the chain computes C3*beta9 = alpha9^2, i.e. O_9 = 0; alpha9 alone has"
     " the wrong weight"),
]

# Consecutive entries (identity name, index i) for which entry i and entry
# i+1 agree exactly as polynomials after inlining the relation forms.
POLYNOMIAL_LINKS: list[tuple[str, int]] = [
    ("O_6^(2) in level 12", 3),
    ("E4 in level 12", 2),
    ("E4^(2) in level 12", 2),
    ("E4^(3) in level 12", 2),
    ("E6^(3) in level 12", 3),
    ("alpha3 in level 6", 1),
    ("beta3 in level 6", 1),
    ("O_6 in level 18", 1),
    ("E4^(3) in level 18", 1),
    ("E4 in level 18", 1),
    ("E4^(2) in level 18", 1),
    ("O_9^(2) in level 18", 1),
    ("E6 in level 10", 1),
    ("E6^(2) in level 10", 1),
    ("O_5 in level 10", 1),
]
