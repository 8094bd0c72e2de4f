"""Built-in fixtures, in the on-disk document format of ``fanolink.catalog``."""

from __future__ import annotations


def _cited(citation):
    return {"source": "paper", "citation": citation}


def _derived(citation=""):
    return {"source": "derived", "citation": citation}


def _inferred(citation):
    return {"source": "inferred", "citation": citation}


def _variety(name, weights, degrees, genus, kcube, basket, family_prov, numerics_prov):
    return [
        {
            "id": f"{name}/num",
            "kind": "numerics",
            "provenance": numerics_prov,
            "payload": {"genus": genus, "kcube": kcube, "basket": basket},
        },
        {
            "id": name,
            "kind": "family",
            "provenance": family_prov,
            "payload": {"weights": weights, "degrees": degrees, "numerics": f"{name}/num"},
        },
    ]


VARIETIES = [
    *_variety(
        "X4", [1, 1, 1, 1, 1], [4], 3, "4", [],
        _cited("quartic 3-fold with a cA2 point xy+z^3+t^3, F = x0^2 x1 x2 + x0 a3 + b4"),
        _cited("A^3 = 4; the cA2 point is Gorenstein and contributes nothing to the basket"),
    ),
    *_variety(
        "Z5", [1, 1, 1, 1, 2], [5], 2, "5/2", [[2, 1]],
        _cited("midpoint Z5 in P(1,1,1,1,2) of the X4 -> Y3,4 link"),
        _cited("one 1/2(1,1,1) point and genus 2; B^3 = 4 - 3/2 = 5/2"),
    ),
    *_variety(
        "Y34", [1, 1, 1, 1, 2, 2], [3, 4], 2, "3", [[2, 1], [2, 1]],
        _cited("Y3,4 in P(1^4,2^2), the far end of the link from X4"),
        _cited("genus 2 with 2 x 1/2(1,1,1); A'^3 = B'^3 + 4/8 = 3"),
    ),
    *_variety(
        "X7", [1, 1, 1, 2, 3], [7], 1, "7/6", [[2, 1], [3, 1]],
        _cited("X7 in P(1,1,1,2,3), left end of the X7 -> Y6,7 link"),
        _derived("basket and genus recovered from the Hilbert series of the family"),
    ),
    *_variety(
        "Z9", [1, 1, 2, 3, 3], [9], 0, "1/2", [[2, 1], [3, 1], [3, 1], [3, 1]],
        _cited("midpoint Z9 in P(1,1,2,3,3) of X7 -> Y6,7"),
        _derived("basket and genus recovered from the Hilbert series of the family"),
    ),
    *_variety(
        "Y67", [1, 1, 2, 3, 3, 4], [6, 7], 0, "7/12", [[2, 1], [3, 1], [3, 1], [4, 1]],
        _cited("Y6,7 in P(1,1,2,3,3,4), right end of the X7 -> Y6,7 link"),
        _derived("basket and genus recovered from the Hilbert series of the family"),
    ),
    *_variety(
        "X15", [1, 1, 2, 5, 7], [15], 0, "3/14", [[2, 1], [7, 3]],
        _cited("X15 in P(1,1,2,5,7), left end of the X15 -> Y14,15 link"),
        _derived("basket and genus recovered from the Hilbert series of the family"),
    ),
    *_variety(
        "Z20", [1, 2, 5, 6, 7], [20], -1, "1/21", [[2, 1], [2, 1], [2, 1], [6, 1], [7, 3]],
        _cited("midpoint Z20 in P(1,2,5,6,7) of X15 -> Y14,15"),
        _derived("basket and genus recovered from the Hilbert series of the family"),
    ),
    *_variety(
        "Y1415", [1, 2, 5, 6, 7, 9], [14, 15], -1, "1/18", [[2, 1], [2, 1], [6, 1], [9, 4]],
        _cited("Y14,15 in P(1,2,5,6,7,9), right end of the X15 -> Y14,15 link"),
        _derived("basket and genus recovered from the Hilbert series of the family"),
    ),
    *_variety(
        "Z10", [1, 1, 1, 3, 5], [10], 1, "2/3", [[3, 1]],
        _cited("midpoint Z10 in P(1,1,1,3,5) of the elliptic involution centred on a line"),
        _derived("basket and genus recovered from the Hilbert series of the family"),
    ),
    *_variety(
        "Z12", [1, 1, 1, 4, 6], [12], 1, "1/2", [[2, 1]],
        _cited("midpoint Z12 in P(1,1,1,4,6), one node on the line"),
        _derived("basket and genus recovered from the Hilbert series of the family"),
    ),
    *_variety(
        "Z8", [1, 1, 1, 2, 4], [8], 1, "1", [[2, 1], [2, 1]],
        _cited("midpoint Z8 in P(1,1,1,2,4), two nodes on the line"),
        _derived("basket and genus recovered from the Hilbert series of the family"),
    ),
]


def _extraction(eid, payload, prov):
    return {"id": eid, "kind": "extraction", "provenance": prov, "payload": payload}


EXTRACTIONS = [
    _extraction(
        "cA2-2111",
        {"label": "cA2 blowup 2,1,1,1", "discrepancy": "1", "exc_cube": "3/2", "weights": [2, 1, 1, 1]},
        _cited("weighted blowup (2,1,1,1) of xy+z^3+t^3: discrepancy 1, E^3 = 3/2"),
    ),
    _extraction(
        "cA2-1211",
        {"label": "cA2 blowup 1,2,1,1", "discrepancy": "1", "exc_cube": "3/2", "weights": [1, 2, 1, 1]},
        _cited("the second weighted blowup (1,2,1,1); both links reach the same Y3,4"),
    ),
    _extraction(
        "kawamata-2-1",
        {"label": "Kawamata blowup of 1/2(1,1,1)", "discrepancy": "1/2", "exc_cube": "4", "weights": [1, 1, 1]},
        _derived("weights (1,a,r-a)/r give a_E = 1/r and E^3 = r^2/(a(r-a)); (1/2)^3 * 4 = 4/8"),
    ),
    _extraction(
        "X7-drop",
        {"label": "extraction from the cA point of X7", "inferred_drop": "2/3"},
        _inferred("solved from 7/6 - 1/2; no weights or E^3 are given"),
    ),
    _extraction(
        "Y67-drop",
        {"label": "extraction to Y6,7", "inferred_drop": "1/12"},
        _inferred("solved from 7/12 - 1/2"),
    ),
    _extraction(
        "X15-drop",
        {"label": "extraction from the singular point of X15", "inferred_drop": "1/6"},
        _inferred("solved from 3/14 - 1/21"),
    ),
    _extraction(
        "Y1415-drop",
        {"label": "extraction to Y14,15", "inferred_drop": "1/126"},
        _inferred("solved from 1/18 - 1/21"),
    ),
    _extraction(
        "line-Z10",
        {"label": "blowup of a line through the cA2 point", "inferred_drop": "10/3"},
        _inferred("solved from 4 - 2/3; a curve blowup, so not of the form a^3 E^3"),
    ),
    _extraction(
        "line-Z12",
        {"label": "blowup of a line through one node", "inferred_drop": "7/2"},
        _inferred("solved from 4 - 1/2"),
    ),
    _extraction(
        "line-Z8",
        {"label": "blowup of a line through two nodes", "inferred_drop": "3"},
        _inferred("solved from 4 - 1"),
    ),
]


def _link(eid, label, left, right, midpoint, prov):
    def end(spec):
        numerics, extraction = spec
        return {"numerics": f"{numerics}/num", "extraction": extraction, "family": numerics}

    return {
        "id": eid,
        "kind": "link",
        "provenance": prov,
        "payload": {
            "label": label,
            "left": end(left),
            "right": end(right),
            "midpoint": f"{midpoint}/num",
            "midpoint_family": midpoint,
        },
    }


LINKS = [
    _link(
        "X4-Y34", "X4 -> Y3,4 via (2,1,1,1)", ("X4", "cA2-2111"), ("Y34", "kawamata-2-1"), "Z5",
        _cited("B^3 = A^3 - E^3 = 4 - 3/2 = 5/2 and A'^3 = B'^3 + 4/8 = 3"),
    ),
    _link(
        "X4-Y34-b", "X4 -> Y3,4 via (1,2,1,1)", ("X4", "cA2-1211"), ("Y34", "kawamata-2-1"), "Z5",
        _cited("the second of the two links X4 -> Y3,4"),
    ),
    _link(
        "X7-Y67", "X7 -> Y6,7 through Z9", ("X7", "X7-drop"), ("Y67", "Y67-drop"), "Z9",
        _inferred("link without stated extraction weights; drops solved from prod d / prod w of the three families"),
    ),
    _link(
        "X15-Y1415", "X15 -> Y14,15 through Z20", ("X15", "X15-drop"), ("Y1415", "Y1415-drop"), "Z20",
        _inferred("link without stated extraction weights; drops solved from prod d / prod w of the three families"),
    ),
    _link(
        "X4-X4-Z10", "elliptic involution through Z10", ("X4", "line-Z10"), ("X4", "line-Z10"), "Z10",
        _inferred("involution centred on a line; no extraction degrees are given"),
    ),
    _link(
        "X4-X4-Z12", "involution through Z12 (one node on the line)", ("X4", "line-Z12"), ("X4", "line-Z12"), "Z12",
        _inferred("quartic with one node on the line; no extraction degrees are given"),
    ),
    _link(
        "X4-X4-Z8", "involution through Z8 (two nodes on the line)", ("X4", "line-Z8"), ("X4", "line-Z8"), "Z8",
        _inferred("quartic with two nodes on the line; no extraction degrees are given"),
    ),
]


def _case(eid, test, params, expected, prov, label=None):
    return {
        "id": eid,
        "kind": "exclusion_case",
        "provenance": prov,
        "payload": {"label": label or eid, "test": test, "params": params, "expected": expected},
    }


X4_CASES = [
    _case(
        "X4-curve-degree", "degree_bound",
        {"A_cube": "4", "step": "1"},
        {"max_degree": "3", "verdict": "excluded"},
        _cited("4n^2 = H1.H2.S > m^2 deg C, so deg C <= 3"),
    ),
    _case(
        "X4-twisted-cubic-off-P", "fixed_curve",
        {"Asq": "8", "AdotC": "3", "pa": 0, "KS_dot_C": "3"},
        {"Csq": "-5", "l2": ["8", "-6", "-5"], "gamma_max": "4/5", "gamma_vs_1": "strict", "verdict": "excluded"},
        _cited("S = S_{2,4}, K_S = O(1): C^2 = -5 and 0 <= L^2 = 8 - 6g - 5g^2, g <= 4/5"),
    ),
    _case(
        "X4-twisted-cubic-A2", "fixed_curve",
        {"Asq": "8", "AdotC": "3", "pa": 0, "KS_dot_C": "3",
         "pullback": ["2/3", "1/3", "0", "0", "0"], "meets": 0},
        {"Csq": "-13/3", "l2": ["8", "-6", "-13/3"], "gamma_vs_1": "strict", "verdict": "excluded"},
        _cited("A2 point on S, pullback coefficients (2/3,1/3,0,0,0): C^2 = -5 + 2/3"),
    ),
    _case(
        "X4-twisted-cubic-A3", "fixed_curve",
        {"Asq": "8", "AdotC": "3", "pa": 0, "KS_dot_C": "3",
         "pullback": ["1/2", "1/2", "1", "0", "0"], "meets": 2},
        {"Csq": "-4", "l2": ["8", "-6", "-4"], "gamma_vs_1": "strict", "verdict": "excluded"},
        _cited("A3 point on S, pullback coefficients (1/2,1/2,1,0,0): C^2 = -5 + 1"),
    ),
    _case(
        "X4-twisted-cubic-through-P", "fixed_curve",
        {"Asq": "8", "AdotC": "3", "Csq": "-4"},
        {"l2": ["8", "-6", "-4"], "gamma_vs_1": "strict", "verdict": "excluded"},
        _cited("C^2 <= -4 in both subcases, 0 <= L^2 <= 8 - 6g - 4g^2"),
    ),
    _case(
        "X4-plane-line", "fixed_curve",
        {"Asq": "4", "AdotC": "1", "pa": 0, "KS_dot_C": "0"},
        {"Csq": "-2", "l2": ["4", "-2", "-2"], "gamma_max": "1", "gamma_vs_1": "boundary", "verdict": "excluded"},
        _cited("plane curve of degree d = 1 off P: L^2 = 4d - 2dg - d(d-1)g^2 - 2g^2"),
    ),
    _case(
        "X4-plane-conic", "fixed_curve",
        {"Asq": "8", "AdotC": "2", "pa": 0, "KS_dot_C": "2"},
        {"Csq": "-4", "l2": ["8", "-4", "-4"], "gamma_max": "1", "gamma_vs_1": "boundary", "verdict": "excluded"},
        _cited("plane curve of degree d = 2 off P: C^2 = -2 - d(d-1)"),
    ),
    _case(
        "X4-plane-cubic", "fixed_curve",
        {"Asq": "12", "AdotC": "3", "pa": 1, "KS_dot_C": "6"},
        {"Csq": "-6", "l2": ["12", "-6", "-6"], "gamma_max": "1", "gamma_vs_1": "boundary", "verdict": "excluded"},
        _cited("plane cubic off P: C^2 = -6 and L^2 = 12 - 6g - 6g^2"),
    ),
    _case(
        "X4-cubic-plus-line", "component",
        {"degO": "1", "pairing_lower": "1"},
        {"gamma_max": "1", "verdict": "excluded"},
        _cited("plane section cubic + line: (1 - g1) >= (g - g1) C.C1 with C.C1 >= 1"),
    ),
    _case(
        "X4-conic-plus-two-lines", "component",
        {"degO": "1", "pairing_lower": "1"},
        {"gamma_max": "1", "verdict": "excluded"},
        _cited("plane section conic + 2 lines, working on a line component"),
    ),
    _case(
        "X4-two-conics", "component",
        {"degO": "2", "pairing_lower": "2"},
        {"gamma_max": "1", "verdict": "excluded"},
        _cited("two conics meeting in at least 2 nonsingular points: 2(1 - g1) >= (g - g1) C.C1"),
    ),
]

_D_FIXED = [
    ["beta", {"A": "0", "beta": "-2", "alpha": "1"}],
    ["alpha", {"A": "1/2", "beta": "1", "alpha": "-7/4"}],
]

Y34_CASES = [
    _case(
        "Y34-curve-through-quotient-point", "quotient_center",
        {"center_kind": "curve", "through_quotient_point": True},
        {"verdict": "excluded"},
        _cited("a curve center of an extraction lies in the nonsingular locus"),
    ),
    _case(
        "Y34-curve-degree", "degree_bound",
        {"A_cube": "3", "step": "1"},
        {"max_degree": "2", "verdict": "excluded"},
        _cited("3n^2 = H1.H2.S >= m^2 d, so d <= 2; the curve avoids the 1/2 points so d is an integer"),
    ),
    _case(
        "Y34-curve-degree-half-steps", "degree_bound",
        {"A_cube": "3", "step": "1/2"},
        {"max_degree": "5/2", "verdict": "excluded"},
        _derived("same bound without integrality of d"),
    ),
    _case(
        "Y34-curve-d2", "fixed_curve",
        {"Asq": "12", "AdotC": "2", "Csq": "-8"},
        {"l2": ["12", "-4", "-8"], "gamma_max": "1", "gamma_vs_1": "boundary", "verdict": "excluded"},
        _cited("S in |I(4)|, C^2 = -8 and 0 <= L^2 = 12 - 4g - 8g^2"),
    ),
    *[
        _case(
            f"Y34-curve-d1-component-{deg.replace('/', '_')}", "component",
            {"degO": deg, "pairing_lower": deg},
            {"gamma_max": "1", "verdict": "excluded"},
            _cited("M.C1 = (1 - g1) deg O(1)|C1 >= (g - g1) C.C1 with C.C1 >= deg O(1)|C1"),
        )
        for deg in ("1/2", "1", "3/2", "2")
    ],
    _case(
        "Y34-point-general", "mobile_point",
        {"H2S_over_n2": "3", "a1": "1", "a2": "1"},
        {"threshold": "4", "verdict": "excluded"},
        _cited("base locus of |I_x(1)| is finite: H^2.S/n^2 = 3 < 4"),
    ),
    _case(
        "Y34-point-on-degree-1-curve", "fixed_curve_point",
        {"Asq": "3", "AdotB": "1", "Bsq": "-1"},
        {"certificate": ["1", "-2", "1"], "equality_locus": ["1"], "square": ["1", "1"], "verdict": "excluded"},
        _cited("B^2 = -1 on S: L^2 = 3 - c^2 - 2c <= 4(1 - c)"),
    ),
    _case(
        "Y34-point-on-half-curve", "discriminant",
        {
            "Asq": "6",
            "fixed": _D_FIXED,
            "threshold": [
                [[], "16"], [["beta"], "-8"], [["alpha"], "-8"], [["alpha", "beta"], "4"],
            ],
            "alpha_range": "[0,inf)",
        },
        {
            "l2": [[[], "6"], [["alpha"], "-1"], [["alpha", "alpha"], "-7/4"],
                   [["alpha", "beta"], "2"], [["beta", "beta"], "-2"]],
            "quadratic": [[[], "10"], [["alpha"], "-7"], [["beta"], "-8"],
                          [["alpha", "alpha"], "7/4"], [["alpha", "beta"], "2"], [["beta", "beta"], "2"]],
            "disc_over_4": ["-4", "6", "-5/2"],
            "alpha_star": "6/5",
            "infeasible": True,
            "verdict": "excluded",
        },
        _cited(
            "intersection matrix F^2 = -2, B'^2 = -7/4, F.B' = 1 on D'; (L/n)^2 = 6 - 2b^2 - 7/4 a^2 - a + 2ab "
            "against the bound 16 - 8b - 8a + 4ab; A.F = 0 and A.B' = 1/2 are derived by matching the expansion"
        ),
    ),
]

DOCUMENT = {
    "schema_version": 1,
    "entries": VARIETIES + EXTRACTIONS + LINKS + X4_CASES + Y34_CASES,
}
