"""Regenerate the instanton dataset files and their checksum manifest.

The polynomial texts below are transcriptions of the published displays;
run from the repository root:

    python scripts/build_data.py
"""

import hashlib
import json
from pathlib import Path

from frobverify.exact import W_TABLE, Z_TABLE, parse_poly
from frobverify.exact import sparse

DATA = Path(__file__).resolve().parents[1] / "src" / "frobverify" / "instanton" / "data"

Q = "(z1 - z2)^2 + (z2 - z3)^2 + (z3 - z1)^2 - 2*r^2"
QS = [
    "2*r*(2*z1 - z2 - z3) - 3*z1^2 - 6*z2*z3",
    "2*r*(2*z2 - z3 - z1) - 3*z2^2 - 6*z3*z1",
    "2*r*(2*z3 - z1 - z2) - 3*z3^2 - 6*z1*z2",
]

N0_B = [
    "36*(z3 - z1)*(z1 - z2)",
    "36*(z1 - z2)*(z2 - z3)",
    "36*(z2 - z3)*(z3 - z1)",
]
N0_U = [
    "(r - (z3 - z1) + (z1 - z2))^2",
    "(r - (z1 - z2) + (z2 - z3))^2",
    "(r - (z2 - z3) + (z3 - z1))^2",
]

N1_B1 = "216*r^2*(z2 - z3)^2*(z3 - z1)*(z1 - z2)"
N1_U1 = (
    "-3*r^6 + 14*r^5*z1 - 21*r^4*z1^2 + 4*r^3*z1^3 + 19*r^2*z1^4 - 18*r*z1^5 + 5*z1^6 - 7*r^5*z2"
    " + 21*r^4*z1*z2 - 6*r^3*z1^2*z2 - 38*r^2*z1^3*z2 + 45*r*z1^4*z2 - 15*z1^5*z2 + 39*r^4*z2^2"
    " + 108*r^3*z1*z2^2 + 240*r^2*z1^2*z2^2 + 66*r*z1^3*z2^2 + 33*z1^4*z2^2 - 53*r^3*z2^3"
    " - 221*r^2*z1*z2^3 - 144*r*z1^2*z2^3 - 41*z1^3*z2^3 + 22*r^2*z2^4 + 27*r*z1*z2^4 - 33*z1^2*z2^4"
    " + 12*r*z2^5 + 51*z1*z2^5 - 10*z2^6 - 7*r^5*z3 + 21*r^4*z1*z3 - 6*r^3*z1^2*z3 - 38*r^2*z1^3*z3"
    " + 45*r*z1^4*z3 - 15*z1^5*z3 - 99*r^4*z2*z3 - 204*r^3*z1*z2*z3 - 366*r^2*z1^2*z2*z3"
    " - 312*r*z1^3*z2*z3 + 9*z1^4*z2*z3 + 51*r^3*z2^2*z3 + 183*r^2*z1*z2^2*z3"
    " + 234*r*z1^2*z2^2*z3 - 9*z1^3*z2^2*z3 + 133*r^2*z2^3*z3 + 180*r*z1*z2^3*z3"
    " + 255*z1^2*z2^3*z3 - 87*r*z2^4*z3 - 189*z1*z2^4*z3 + 9*z2^5*z3 + 39*r^4*z3^2"
    " + 108*r^3*z1*z3^2 + 240*r^2*z1^2*z3^2 + 66*r*z1^3*z3^2 + 33*z1^4*z3^2 + 51*r^3*z2*z3^2"
    " + 183*r^2*z1*z2*z3^2 + 234*r*z1^2*z2*z3^2 - 9*z1^3*z2*z3^2 - 291*r^2*z2^2*z3^2"
    " - 504*r*z1*z2^2*z3^2 - 369*z1^2*z2^2*z3^2 + 84*r*z2^3*z3^2 + 123*z1*z2^3*z3^2"
    " + 72*z2^4*z3^2 - 53*r^3*z3^3 - 221*r^2*z1*z3^3 - 144*r*z1^2*z3^3 - 41*z1^3*z3^3"
    " + 133*r^2*z2*z3^3 + 180*r*z1*z2*z3^3 + 255*z1^2*z2*z3^3 + 84*r*z2^2*z3^3"
    " + 123*z1*z2^2*z3^3 - 137*z2^3*z3^3 + 22*r^2*z3^4 + 27*r*z1*z3^4 - 33*z1^2*z3^4"
    " - 87*r*z2*z3^4 - 189*z1*z2*z3^4 + 72*z2^2*z3^4 + 12*r*z3^5 + 51*z1*z3^5 + 9*z2*z3^5"
    " - 10*z3^6"
)

N2_B1 = (
    "36*(z2 - z3)^2*(z3 - z1)*(z1 - z2)*(52*r^3 + 2*z1^3 - 3*z1^2*z2 - 3*z1*z2^2 + 2*z2^3"
    " - 3*z1^2*z3 + 12*z1*z2*z3 - 3*z2^2*z3 - 3*z1*z3^2 - 3*z2*z3^2 + 2*z3^3)^2"
)
# only the leading terms are published
N2_U1_FRAGMENT = (
    "25*(174*r^10 - 764*r^9*z1 + 1122*r^8*z1^2 - 244*r^7*z1^3 - 998*r^6*z1^4 + 1008*r^5*z1^5"
    " - 274*r^4*z1^6 - 20*r^3*z1^7 - 24*r^2*z1^8 + 20*r*z1^9 + 382*r^9*z2 - 1122*r^8*z1*z2"
    " + 366*r^7*z1^2*z2 + 1996*r^6*z1^3*z2 - 2520*r^5*z1^4*z2 + 822*r^4*z1^5*z2)"
)

GCANON = {
    0: [
        ("-(w - 1)*(w + 1)", "4*(w - 3)*(w + 3)"),
        ("-(w - 1)", "4*w*(w + 3)"),
        ("w + 1", "4*w*(w - 3)"),
    ],
    1: [
        ("-9*(w - 1)^3*(w + 1)^3", "4*(w - 3)*(w + 3)*(w^2 + 3)^2"),
        ("-9*(w - 1)^3", "w*(w + 3)*(w^2 + 3)^2"),
        ("9*(w + 1)^3", "w*(w - 3)*(w^2 + 3)^2"),
    ],
    2: [
        (
            "-25*(w - 1)^5*(w + 1)^5*(w^2 + 5)^2",
            "4*(w - 3)*(w + 3)*(w^2 + 1)^2*(w^2 - 2*w + 5)^2*(w^2 + 2*w + 5)^2",
        ),
        (
            "-25*(w - 1)^5*(3*w^2 + 2*w + 7)^2",
            "w*(w + 3)*(w^2 + 1)^2*(w^2 - 2*w + 5)^2*(w^2 + 2*w + 5)^2",
        ),
        (
            "25*(w + 1)^5*(3*w^2 - 2*w + 7)^2",
            "w*(w - 3)*(w^2 + 1)^2*(w^2 - 2*w + 5)^2*(w^2 + 2*w + 5)^2",
        ),
    ],
}

# homogeneity +1 / -1 companions of the n = 0 metric; phi_i(w) multiplies (x1 - x2)^(+-1)
UPLUS1 = (
    "(r^2 + 4*r*z1 - 5*z1^2 - 2*r*z2 + 5*z1*z2 + z2^2 - 2*r*z3 + 5*z1*z3 - 7*z2*z3 + z3^2)^2"
)
GPLUS = [
    ("-4*(w + 1)", "(w - 3)*(w + 3)^4"),
    ("-(w + 1)^4", "4*w*(w + 3)^4"),
    ("(w - 1)^3*(w + 1)", "4*w*(w - 3)*(w + 3)^3"),
]
GMINUS = [
    ("-(w + 3)^2", "(w - 3)*(w + 1)"),
    ("-(w + 3)^2", "4*w"),
    ("(w - 1)*(w + 3)^3", "4*w*(w - 3)*(w + 1)"),
]


def zpoly(text):
    return parse_poly(text, Z_TABLE)


def write(path: Path, polys, comments, header):
    body = "\n".join(f"# {h}" for h in header) + "\n" + sparse.dumps(polys, comments)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(body)


def ratfun_blocks(pairs):
    polys, comments = [], []
    for i, (num, den) in enumerate(pairs, 1):
        polys += [parse_poly(num, W_TABLE), parse_poly(den, W_TABLE)]
        comments += [f"g{i}{i} numerator", f"g{i}{i} denominator"]
    return polys, comments


def main():
    ztab = "vars: z1 z2 z3 r"
    wtab = "vars: w"
    for n in (0, 1, 2):
        d = DATA / f"n{n}"
        write(d / "Q.poly", [zpoly(Q)], ["Q"], [ztab])
        for i, q in enumerate(QS, 1):
            write(d / f"q{i}.poly", [zpoly(q)], [f"q{i}"], [ztab])
        polys, comments = ratfun_blocks(GCANON[n])
        write(d / "gcanon.poly", polys, comments, [wtab, f"canonical metric components, n = {n}"])
    for i in range(3):
        write(DATA / "n0" / f"b{i + 1}.poly", [zpoly(N0_B[i])], [f"b{i + 1}"], [ztab])
        write(DATA / "n0" / f"u{i + 1}.poly", [zpoly(N0_U[i])], [f"u{i + 1}"], [ztab])
    write(DATA / "n1" / "b1.poly", [zpoly(N1_B1)], ["b1"], [ztab])
    write(DATA / "n1" / "u1.poly", [zpoly(N1_U1)], ["u1"], [ztab])
    write(DATA / "n2" / "b1.poly", [zpoly(N2_B1)], ["b1"], [ztab])
    write(
        DATA / "n2" / "u1.poly",
        [zpoly(N2_U1_FRAGMENT)],
        ["u1 leading fragment"],
        [ztab, "PARTIAL: leading terms only; the full polynomial has 283 terms"],
    )
    write(DATA / "n0" / "uplus1.poly", [zpoly(UPLUS1)], ["u1+"], [ztab])
    polys, comments = ratfun_blocks(GPLUS)
    write(DATA / "n0" / "gplus.poly", polys, comments, [wtab, "coefficient of (x1 - x2)"])
    polys, comments = ratfun_blocks(GMINUS)
    write(DATA / "n0" / "gminus.poly", polys, comments, [wtab, "coefficient of (x1 - x2)^-1"])

    manifest_path = DATA / "manifest.json"
    old = json.loads(manifest_path.read_text()) if manifest_path.exists() else {}
    files = {}
    for p in sorted(DATA.rglob("*.poly")):
        rel = p.relative_to(DATA).as_posix()
        files[rel] = hashlib.sha256(p.read_bytes()).hexdigest()
    manifest = {
        "version": 1,
        "files": files,
        "partial": ["n2/u1.poly"],
        "sign_triples": old.get("sign_triples", {}),
    }
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    print(f"wrote {len(files)} files")


if __name__ == "__main__":
    main()
