#!/usr/bin/env python3
"""Generate crates/core/data/catalog.json.

The catalog lists restricted root data of the non-compact simple real
forms up to a complex rank bound, the registry of symmetric pairs with
an involution recipe (classical families) or table flags (exceptional
forms), and the tables used by the decision engine.

Usage: python3 scripts/gen_catalog.py [--max-rank 6] [--output PATH]
"""

import argparse
import json
from pathlib import Path

VERSION = "1.0.0"

EXCEPTIONAL = [
    # label, complex type, restricted type, mult, dim m, hermitian
    ("e6(6)", "E6", "E6", {"long": 1}, 0, False),
    ("e6(2)", "E6", "F4", {"short": 2, "long": 1}, 2, False),
    ("e6(-14)", "E6", "BC2", {"short": 8, "middle": 6, "long": 1}, 16, True),
    ("e6(-26)", "E6", "A2", {"long": 8}, 28, False),
    ("e7(7)", "E7", "E7", {"long": 1}, 0, False),
    ("e7(-5)", "E7", "F4", {"short": 4, "long": 1}, 9, False),
    ("e7(-25)", "E7", "C3", {"short": 8, "long": 1}, 28, True),
    ("e8(8)", "E8", "E8", {"long": 1}, 0, False),
    ("e8(-24)", "E8", "F4", {"short": 8, "long": 1}, 28, False),
    ("f4(4)", "F4", "F4", {"short": 1, "long": 1}, 0, False),
    ("f4(-20)", "F4", "BC1", {"short": 8, "long": 7}, 21, False),
    ("g2(2)", "G2", "G2", {"short": 1, "long": 1}, 0, False),
]

EXC_COMPLEX = [("e6(C)", "E6"), ("e7(C)", "E7"), ("e8(C)", "E8"), ("f4(C)", "F4"), ("g2(C)", "G2")]

EXC_K = {
    "e6(6)": "sp(4)",
    "e6(2)": "su(6)+su(2)",
    "e6(-14)": "so(10)+T",
    "e6(-26)": "f4",
    "e7(7)": "su(8)",
    "e7(-5)": "so(12)+su(2)",
    "e7(-25)": "e6+T",
    "e8(8)": "so(16)",
    "e8(-24)": "e7+su(2)",
    "f4(4)": "sp(3)+su(2)",
    "f4(-20)": "so(9)",
    "g2(2)": "su(2)+su(2)",
    "e6(C)": "e6",
    "e7(C)": "e7",
    "e8(C)": "e8",
    "f4(C)": "f4",
    "g2(C)": "g2",
}

ALIASES = [
    ["su(2,2)", "so(4,2)"],
    ["sp(2,R)", "so(3,2)"],
    ["su*(4)", "so(5,1)"],
    ["sl(4,R)", "so(3,3)"],
    ["sl(2,R)", "su(1,1)", "so(2,1)", "sp(1,R)"],
    ["so*(6)", "su(3,1)"],
    ["so*(8)", "so(6,2)"],
    ["sp(1,1)", "so(4,1)"],
    ["sl(2,C)", "so(3,1)", "sp(1,C)"],
    ["so(5,C)", "sp(2,C)"],
    ["sl(4,C)", "so(6,C)"],
]

CITE = {
    "n": "complex invariant n(g_C) table",
    "m": "real invariant m(g) table for the exceptional families",
    "para": "para-Hermitian symmetric pairs with g simple",
    "remaining": "remaining symmetric pairs",
    "herm": "simple Lie algebras of Hermitian type",
    "bb": "complexified pairs with bounded multiplicity for tensor-type restriction",
    "five": "algebras with m(g) > n(g_C)",
    "mingk": "exclusion list for representations of minimal Gelfand-Kirillov dimension",
    "nonneg": "symmetric pairs with m = n where sigma(mu) != -mu",
    "okuda": "sigma(mu) = -mu for every symmetric pair of the five exceptional-m algebras",
    "rankeq": "sigma is -1 on a when rank G/G' = rank G",
    "theta": "Cartan involution acts by -1 on a",
    "f4orbits": "real nilpotent orbit dimensions of f4(-20) below the minimal complex orbit",
    "berger": "Berger classification of irreducible symmetric pairs",
}


def dg(*runs):
    """dg(+1x2,-1x1): runs of (entry, count); zero-length runs dropped."""
    items = [f"{e}x{c}" for e, c in runs if c > 0]
    return "dg(" + ",".join(items) + ")"


def signs(p, q, e="1"):
    return [("+" + e, p), ("-" + e, q)]


def so_type(n):
    if n == 3:
        return "A1"
    if n % 2:
        return f"B{(n - 1) // 2}"
    return f"D{n // 2}"


def classical_algebras(max_rank):
    out = []

    def add(label, ctype, rtype, mult, dim_m, hermitian=False, is_complex=False):
        out.append(
            {
                "label": label,
                "restricted_type": rtype,
                "rank": int(rtype.lstrip("ABCDEFGBC")),
                "mult": mult,
                "hermitian": hermitian,
                "dim_m": dim_m,
                "complex_type": ctype,
                "is_complex": is_complex,
                "matrix_model": True,
            }
        )

    for n in range(2, max_rank + 2):
        add(f"sl({n},R)", f"A{n-1}", f"A{n-1}", {"long": 1}, 0, hermitian=(n == 2))
        add(f"sl({n},C)", f"A{n-1}", f"A{n-1}", {"long": 2}, n - 1, is_complex=True)
    for n in range(2, 7):
        # su*(2n) beyond the rank bound so that its m-table row is covered
        add(f"su*({2*n})", f"A{2*n-1}", f"A{n-1}", {"long": 4}, 3 * n)
    for tot in range(2, max_rank + 2):
        for q in range(1, tot // 2 + 1):
            p = tot - q
            dm = (p - q) ** 2 + q - 1
            if p > q:
                if q == 1:
                    mult = {"short": 2 * (p - q), "long": 1}
                else:
                    mult = {"short": 2 * (p - q), "middle": 2, "long": 1}
                add(f"su({p},{q})", f"A{tot-1}", f"BC{q}", mult, dm, hermitian=True)
            elif q == 1:
                add(f"su(1,1)", "A1", "A1", {"long": 1}, 0, hermitian=True)
            else:
                add(f"su({p},{q})", f"A{tot-1}", f"C{q}", {"short": 2, "long": 1}, dm, hermitian=True)
    for tot in range(3, 2 * max_rank + 2):
        for q in range(1, tot // 2 + 1):
            p = tot - q
            if tot == 4 and p == 2:
                continue  # so(2,2) is not simple
            d = p - q
            dm = d * (d - 1) // 2
            herm = q == 2 or (q == 1 and p == 2)
            if tot == 4:
                add("so(3,1)", "A1", "A1", {"long": 2}, 1, is_complex=True)
            elif q == 1:
                add(f"so({p},1)", so_type(tot), "A1", {"long": p - 1}, dm, hermitian=herm)
            elif p > q:
                add(f"so({p},{q})", so_type(tot), f"B{q}", {"short": d, "long": 1}, dm, hermitian=herm)
            else:
                add(f"so({p},{q})", so_type(tot), f"D{q}", {"long": 1}, 0, hermitian=herm)
    for n in range(5, 2 * max_rank + 2):
        if n == 6:
            ctype = "A3"
        else:
            ctype = so_type(n)
        k = n // 2
        rt = f"B{k}" if n % 2 else f"D{k}"
        mult = {"short": 2, "long": 2} if n % 2 else {"long": 2}
        if n == 6:
            rt = "D3"
        add(f"so({n},C)", ctype, rt, mult, k, is_complex=True)
    for n in range(3, max_rank + 1):
        k = n // 2
        if n % 2 == 0:
            if k == 1:
                continue
            add(f"so*({2*n})", f"D{n}", f"C{k}", {"short": 4, "long": 1}, 3 * k, hermitian=True)
        else:
            if k == 1:
                mult = {"short": 4, "long": 1}
            else:
                mult = {"short": 4, "middle": 4, "long": 1}
            ctype = "A3" if n == 3 else f"D{n}"
            add(f"so*({2*n})", ctype, f"BC{k}", mult, 3 * k + 1, hermitian=True)
    for n in range(2, max_rank + 1):
        add(f"sp({n},R)", f"C{n}", f"C{n}", {"short": 1, "long": 1}, 0, hermitian=True)
        add(f"sp({n},C)", f"C{n}", f"C{n}", {"short": 2, "long": 2}, n, is_complex=True)
    for tot in range(2, max_rank + 1):
        for q in range(1, tot // 2 + 1):
            p = tot - q
            d = p - q
            dm = d * (2 * d + 1) + 3 * q
            if p > q:
                if q == 1:
                    mult = {"short": 4 * d, "long": 3}
                else:
                    mult = {"short": 4 * d, "middle": 4, "long": 3}
                add(f"sp({p},{q})", f"C{tot}", f"BC{q}", mult, dm)
            elif q == 1:
                add("sp(1,1)", "C2", "A1", {"long": 3}, 3)
            else:
                add(f"sp({p},{q})", f"C{tot}", f"C{q}", {"short": 4, "long": 3}, dm)
    return out


def exceptional_algebras():
    out = []
    for label, ctype, rtype, mult, dm, herm in EXCEPTIONAL:
        out.append(
            {
                "label": label,
                "restricted_type": rtype,
                "rank": int(rtype.lstrip("ABCDEFGBC")),
                "mult": mult,
                "hermitian": herm,
                "dim_m": dm,
                "complex_type": ctype,
                "is_complex": False,
                "matrix_model": False,
            }
        )
    for label, ctype in EXC_COMPLEX:
        classes = {"long": 2} if ctype in ("E6", "E7", "E8") else {"short": 2, "long": 2}
        out.append(
            {
                "label": label,
                "restricted_type": ctype,
                "rank": int(ctype[1:]),
                "mult": classes,
                "hermitian": False,
                "dim_m": int(ctype[1:]),
                "complex_type": ctype,
                "is_complex": True,
                "matrix_model": False,
            }
        )
    return out


def splits(p, q):
    """Unordered splittings (p1,q1)+(p2,q2) of a signature, both nonempty."""
    seen = set()
    for p1 in range(p + 1):
        for q1 in range(q + 1):
            a, b = (p1, q1), (p - p1, q - q1)
            if sum(a) == 0 or sum(b) == 0:
                continue
            key = tuple(sorted([a, b], reverse=True))
            if key in seen:
                continue
            seen.add(key)
            yield key[0], key[1]


def sig_label(name, a, b):
    p, q = max(a, b), min(a, b)
    if q == 0:
        return f"{name}({p})"
    return f"{name}({p},{q})"


TRIVIAL = {"sl(1,R)", "sl(1,C)", "so(1)", "so(1,C)"}
RENAME = {"so(1,1)": "R", "so(2,C)": "C", "so(2)": "T", "u(1)": "T"}


def dedupe_key(g, gp):
    """Cheap normal form that catches the rank-one coincidences."""
    if gp.startswith("s(") and gp.endswith(")"):
        gp = gp[2:-1]
    parts = [RENAME.get(x, x) for x in gp.split("+") if x not in TRIVIAL]
    return g, tuple(sorted(parts))


def classical_pairs(labels):
    pairs = []
    seen = set()

    def add(g, gp, recipe, tags=()):
        key = dedupe_key(g, gp)
        if g in labels and key not in seen:
            seen.add(key)
            pairs.append({"g": g, "gprime": gp, "sigma_recipe": recipe, "tags": list(tags)})

    for lab in labels:
        fam, _, args = lab.partition("(")
        args = args.rstrip(")").split(",")
        if fam == "sl" and args[1] == "R":
            n = int(args[0])
            for q in range(0, n // 2 + 1):
                p = n - q
                add(lab, sig_label("so", p, q), f"negT[{dg(*signs(p, q))}]")
                if q >= 1:
                    add(lab, f"sl({p},R)+sl({q},R)+R", f"id[{dg(*signs(p, q))}]", ["para"])
            if n % 2 == 0:
                m = n // 2
                if m >= 2:
                    add(lab, f"sl({m},C)+T", f"id[J({m})]")
                if m >= 2:
                    add(lab, f"sp({m},R)", f"negT[J({m})]", ["nonneg(1)"])
        elif fam == "sl" and args[1] == "C":
            n = int(args[0])
            add(lab, f"so({n},C)", f"negT[I({n})]")
            if n % 2 == 0 and n >= 4:
                add(lab, f"sp({n//2},C)", f"negT[J({n//2})]", ["nonneg(7)"])
            for q in range(1, n // 2 + 1):
                p = n - q
                add(lab, f"sl({p},C)+sl({q},C)+C", f"id[{dg(*signs(p, q))}]", ["para"])
            add(lab, f"sl({n},R)", "conj")
            for q in range(0, n // 2 + 1):
                p = n - q
                add(lab, sig_label("su", p, q), f"negH[{dg(*signs(p, q))}]")
            if n % 2 == 0 and n >= 4:
                add(lab, f"su*({n})", f"conj[J({n//2})]")
        elif fam == "su*":
            n = int(args[0]) // 2
            add(lab, f"so*({2*n})", f"negH[{dg(*signs(n, n))}]")
            for q in range(0, n // 2 + 1):
                p = n - q
                e = signs(p, q)
                add(lab, sig_label("sp", p, q), f"negH[{dg(*(e + e))}]")
                if q >= 1:
                    add(lab, f"su*({2*p})+su*({2*q})+R", f"id[{dg(*(e + e))}]", ["para"])
            add(lab, f"sl({n},C)+T", f"id[{dg(('+i', n), ('-i', n))}]")
        elif fam == "su":
            p, q = int(args[0]), int(args[1])
            n = p + q
            add(lab, sig_label("so", p, q), "conj", ["herm-anti"])
            for (p1, q1), (p2, q2) in splits(p, q):
                lbl = f"s({sig_label('u', p1, q1)}+{sig_label('u', p2, q2)})"
                add(lab, lbl, f"id[{dg(('+1', p1), ('-1', p2), ('+1', q1), ('-1', q2))}]")
            if p % 2 == 0 and q % 2 == 0:
                add(lab, sig_label("sp", p // 2, q // 2), f"conj[blk(J({p//2});J({q//2}))]", ["nonneg(2)"])
            if p == q and p >= 2:
                add(lab, f"sp({p},R)", f"negT[J({p})]", ["nonneg(2)"])
                add(lab, f"so*({2*p})", f"negT[S({p})]")
            if p == q:
                add(lab, f"sl({p},C)+R", f"id[S({p})]", ["para"])
        elif fam == "so" and len(args) == 2 and args[1] != "C":
            p, q = int(args[0]), int(args[1])
            if lab == "so(3,1)":
                continue  # handled as the complex algebra sl(2,C)
            for (p1, q1), (p2, q2) in splits(p, q):
                lbl = f"{sig_label('so', p1, q1)}+{sig_label('so', p2, q2)}"
                tags = []
                if (p2, q2) in ((1, 0), (0, 1)) and remark4(p, q):
                    tags.append("nonneg(4)")
                if (p2, q2) == (1, 1):
                    tags.append("para")
                add(lab, lbl, f"id[{dg(('+1', p1), ('-1', p2), ('+1', q1), ('-1', q2))}]", tags)
            if p % 2 == 0 and q % 2 == 0:
                add(lab, f"u({p//2},{q//2})", f"id[blk(J({p//2});J({q//2}))]")
            if p == q:
                add(lab, f"gl({p},R)", f"id[S({p})]", ["para"])
                add(lab, f"so({p},C)", f"id[J({p})]")
        elif fam == "so" and len(args) == 2:
            n = int(args[0])
            for q in range(1, n // 2 + 1):
                p = n - q
                tags = ["nonneg(7)"] if q == 1 and n >= 5 else []
                if q == 2:
                    tags.append("para")
                add(lab, f"so({p},C)+so({q},C)", f"id[{dg(*signs(p, q))}]", tags)
            if n % 2 == 0:
                add(lab, f"gl({n//2},C)", f"id[J({n//2})]", ["para"])
                add(lab, f"so*({n})", f"conj[J({n//2})]")
            for q in range(0, n // 2 + 1):
                p = n - q
                add(lab, sig_label("so", p, q), f"conj[{dg(*signs(p, q))}]")
        elif fam == "so*":
            n = int(args[0]) // 2
            for q in range(0, n // 2 + 1):
                p = n - q
                e = signs(p, q)
                add(lab, sig_label("u", p, q), f"conj[S({n}).{dg(*(e + e))}]")
                if q >= 1:
                    add(lab, f"so*({2*p})+so*({2*q})", f"id[{dg(*(e + e))}]")
            add(lab, f"so({n},C)", f"id[S({n})]")
            if n % 2 == 0:
                add(lab, f"su*({n})+R", f"conj[blk(J({n//2});J({n//2}))]", ["para"])
        elif fam == "sp" and args[1] == "R":
            n = int(args[0])
            for q in range(1, n // 2 + 1):
                p = n - q
                e = signs(p, q)
                add(lab, f"sp({p},R)+sp({q},R)", f"id[{dg(*(e + e))}]", ["nonneg(3)"])
            add(lab, f"gl({n},R)", f"id[{dg(*signs(n, n))}]", ["para"])
            for q in range(0, n // 2 + 1):
                p = n - q
                e = signs(p, q)
                add(lab, sig_label("u", p, q), f"id[J({n}).{dg(*(e + e))}]")
            if n % 2 == 0:
                # anti-symplectic complex structure diag(K, -K)
                add(lab, f"sp({n//2},C)", f"id[blk(J({n//2});J({n//2})).{dg(*signs(n, n))}]", ["nonneg(3)"])
        elif fam == "sp" and args[1] == "C":
            n = int(args[0])
            for q in range(1, n // 2 + 1):
                p = n - q
                e = signs(p, q)
                add(lab, f"sp({p},C)+sp({q},C)", f"id[{dg(*(e + e))}]", ["nonneg(7)"])
            add(lab, f"gl({n},C)", f"id[{dg(*signs(n, n))}]", ["para"])
            add(lab, f"sp({n},R)", "conj")
            for q in range(0, n // 2 + 1):
                p = n - q
                e = signs(p, q)
                add(lab, sig_label("sp", p, q), f"conj[J({n}).{dg(*(e + e))}]")
        elif fam == "sp":
            p, q = int(args[0]), int(args[1])
            n = p + q
            add(lab, f"u({p},{q})", f"id[{dg(('+i', n), ('-i', n))}]", ["remaining", "rank-equal"])
            for (p1, q1), (p2, q2) in splits(p, q):
                lbl = f"{sig_label('sp', p1, q1)}+{sig_label('sp', p2, q2)}"
                e = [("+1", p1), ("-1", p2), ("+1", q1), ("-1", q2)]
                add(lab, lbl, f"id[{dg(*(e + e))}]", ["remaining"])
            if p == q:
                add(lab, f"sp({p},C)", f"id[blk(J({p});J({p}))]")
                add(lab, f"su*({2*p})+R", f"id[blk(S({p});S({p}))]", ["para"])
    return pairs


def remark4(p, q):
    """p >= q with p = q mod 2 and q >= 4, or p >= 5 and q = 2, or p >= 4 and q = 3."""
    return (q >= 4 and (p - q) % 2 == 0) or (p >= 5 and q == 2) or (p >= 4 and q == 3)


def exceptional_pairs():
    rows = []

    def add(g, gp, sigma_mu, tags, holo=None, cite=()):
        flags = {"sigma_mu_minus": sigma_mu}
        if holo:
            flags["holo_type"] = holo
        rows.append({"g": g, "gprime": gp, "table_flags": flags, "tags": tags, "citations": list(cite)})

    herm = {e[0] for e in EXCEPTIONAL if e[5]}
    for g, k in EXC_K.items():
        add(g, k, "yes", ["riemannian"], "holomorphic" if g in herm else None, [CITE["theta"]])
    five = {"f4(-20)", "e6(-26)"}
    para = [
        ("e6(6)", "so(5,5)+R"),
        ("e6(-26)", "so(9,1)+R"),
        ("e6(C)", "so(10,C)+C"),
        ("e7(7)", "e6(6)+R"),
        ("e7(-25)", "e6(-26)+R"),
        ("e7(C)", "e6(C)+C"),
    ]
    for g, l in para:
        sm = "yes" if g in five else "unknown"
        add(g, l, sm, ["para"], "anti-holomorphic" if g in herm else None, [CITE["para"]] + ([CITE["okuda"]] if g in five else []))
    add("e6(-26)", "f4(-20)", "yes", [], None, [CITE["okuda"], CITE["berger"]])
    for gp in ["so(8,1)", "sp(2,1)+sp(1)"]:
        add("f4(-20)", gp, "yes", ["remaining", "rank-equal"], None, [CITE["remaining"], CITE["rankeq"], CITE["okuda"]])
    # the compact entry already exists; tag it as a remaining pair as well
    for r in rows:
        if r["g"] == "f4(-20)" and r["gprime"] == "so(9)":
            r["tags"].append("remaining")
            r["citations"].append(CITE["remaining"])
    add("f4(4)", "so(5,4)", "no", ["nonneg(5)"], None, [CITE["nonneg"]])
    add("e6(6)", "f4(4)", "no", ["nonneg(6)"], None, [CITE["nonneg"]])
    add("e6(2)", "f4(4)", "no", ["nonneg(6)"], None, [CITE["nonneg"]])
    add("e6(-14)", "f4(-20)", "no", ["nonneg(6)"], "anti-holomorphic", [CITE["nonneg"]])
    add("f4(C)", "so(9,C)", "no", ["nonneg(7)"], None, [CITE["nonneg"]])
    add("e6(C)", "f4(C)", "no", ["nonneg(7)"], None, [CITE["nonneg"]])
    return rows


def tables():
    return {
        "n": {
            "citation": CITE["n"],
            "rows": [
                {"type": "A", "formula": "n"},
                {"type": "B", "formula": "2n-2"},
                {"type": "C", "formula": "n"},
                {"type": "D", "formula": "2n-3"},
                {"type": "G2", "formula": "3"},
                {"type": "F4", "formula": "8"},
                {"type": "E6", "formula": "11"},
                {"type": "E7", "formula": "17"},
                {"type": "E8", "formula": "29"},
            ],
        },
        "m": {
            "citation": CITE["m"],
            "rows": [
                {"family": "su*(2n)", "formula": "4n-4"},
                {"family": "so(n-1,1)", "formula": "n-2"},
                {"family": "sp(m,n)", "formula": "2(m+n)-1"},
                {"family": "f4(-20)", "formula": "11"},
                {"family": "e6(-26)", "formula": "16"},
            ],
        },
        "para": {
            "citation": CITE["para"],
            "rows": [
                {"g": "sl(p+q,R)", "l": "sl(p,R)+sl(q,R)+R"},
                {"g": "su*(2p+2q)", "l": "su*(2p)+su*(2q)+R"},
                {"g": "sl(p+q,C)", "l": "sl(p,C)+sl(q,C)+C"},
                {"g": "su(n,n)", "l": "sl(n,C)+R"},
                {"g": "so(n,n)", "l": "sl(n,R)+R"},
                {"g": "so*(4n)", "l": "su*(2n)+R"},
                {"g": "so(2n,C)", "l": "sl(n,C)+C"},
                {"g": "so(p+1,q+1)", "l": "so(p,q)+R"},
                {"g": "so(n+2,C)", "l": "so(n,C)+C"},
                {"g": "sp(n,R)", "l": "sl(n,R)+R"},
                {"g": "sp(n,n)", "l": "su*(2n)+R"},
                {"g": "sp(n,C)", "l": "sl(n,C)+C"},
                {"g": "e6(6)", "l": "so(5,5)+R"},
                {"g": "e6(-26)", "l": "so(9,1)+R"},
                {"g": "e6(C)", "l": "so(10,C)+C"},
                {"g": "e7(7)", "l": "e6(6)+R"},
                {"g": "e7(-25)", "l": "e6(-26)+R"},
                {"g": "e7(C)", "l": "e6(C)+C"},
            ],
        },
        "remaining": {
            "citation": CITE["remaining"],
            "rows": [
                {"g": "sp(p,q)", "gprime": ["u(p,q)", "sp(p1,q1)+sp(p-p1,q-q1)"], "witness_gk": "2(p+q)-1"},
                {"g": "f4(-20)", "gprime": ["so(9)", "so(8,1)", "sp(2,1)+sp(1)"], "witness_gk": "11"},
            ],
        },
        "hermitian": {
            "citation": CITE["herm"],
            "rows": ["su(p,q)", "sp(n,R)", "so*(2m)", "so(m,2) (m != 2)", "e6(-14)", "e7(-25)"],
        },
        "bblist": {
            "citation": CITE["bb"],
            "rows": [
                {"g": "sl(n)", "gprime": "gl(n-1)"},
                {"g": "so(n)", "gprime": "so(n-1)"},
                {"g": "so(8)", "gprime": "spin(7)"},
            ],
        },
        "five": {
            "citation": CITE["five"],
            "rows": ["su*(2n)", "so(n-1,1) (n >= 5)", "sp(m,n)", "f4(-20)", "e6(-26)"],
        },
        "mingk_exclusions": {
            "citation": CITE["mingk"],
            "rows": [
                "so(n,1) (n >= 6)",
                "so(p,q) (p,q >= 4, p+q odd)",
                "su*(2n)",
                "sp(p,q) (p,q >= 1)",
                "e6(-26)",
                "f4(-20)",
            ],
        },
        "nonneg": {
            "citation": CITE["nonneg"],
            "rows": [
                {"item": 1, "pairs": ["(sl(2n,R), sp(n,R))"]},
                {"item": 2, "pairs": ["(su(2p,2q), sp(p,q))", "(su(n,n), sp(n,R))"]},
                {"item": 3, "pairs": ["(sp(p+q,R), sp(p,R)+sp(q,R))", "(sp(2n,R), sp(n,C))"]},
                {
                    "item": 4,
                    "pairs": ["(so(p,q), so(p-1,q))", "(so(p,q), so(p,q-1))"],
                    "condition": "p >= q >= 4 and p = q mod 2, or p >= 5 and q = 2, or p >= 4 and q = 3",
                },
                {"item": 5, "pairs": ["(f4(4), so(5,4))"]},
                {"item": 6, "pairs": ["(e6(6), f4(4))", "(e6(2), f4(4))", "(e6(-14), f4(-20))"]},
                {
                    "item": 7,
                    "pairs": [
                        "(sl(2n,C), sp(n,C))",
                        "(so(n,C), so(n-1,C)) (n >= 5)",
                        "(sp(m+n,C), sp(m,C)+sp(n,C))",
                        "(f4(C), so(9,C))",
                        "(e6(C), f4(C))",
                    ],
                },
            ],
        },
        "f4_orbits": {"citation": CITE["f4orbits"], "dims": [0, 22, 30]},
    }


def para_levis(label):
    """Expanded para-Hermitian Levi list of a catalog label."""
    fam, _, args = label.partition("(")
    a = args.rstrip(")").split(",")
    out = []
    if fam == "sl" and a[1] == "R":
        n = int(a[0])
        out += [f"sl({n-q},R)+sl({q},R)+R" for q in range(1, n // 2 + 1)]
    elif fam == "sl" and a[1] == "C":
        n = int(a[0])
        out += [f"sl({n-q},C)+sl({q},C)+C" for q in range(1, n // 2 + 1)]
    elif fam == "su*":
        n = int(a[0]) // 2
        out += [f"su*({2*(n-q)})+su*({2*q})+R" for q in range(1, n // 2 + 1)]
    elif fam == "su":
        p, q = int(a[0]), int(a[1])
        if p == q:
            out.append(f"sl({p},C)+R")
    elif fam == "so" and a[1] != "C":
        p, q = int(a[0]), int(a[1])
        if label == "so(3,1)":
            return out
        if p == q:
            out.append(f"sl({p},R)+R")
        out.append(f"so({p-1},{q-1})+R")
    elif fam == "so":
        n = int(a[0])
        if n % 2 == 0:
            out.append(f"sl({n//2},C)+C")
        out.append(f"so({n-2},C)+C")
    elif fam == "so*":
        n = int(a[0]) // 2
        if n % 2 == 0:
            out.append(f"su*({n})+R")
    elif fam == "sp" and a[1] in ("R", "C"):
        n = int(a[0])
        out.append(f"sl({n},{a[1]})+{a[1]}")
    elif fam == "sp":
        p, q = int(a[0]), int(a[1])
        if p == q:
            out.append(f"su*({2*p})+R")
    else:
        out += [r["l"] for r in tables()["para"]["rows"] if r["g"] == label]
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-rank", type=int, default=6)
    ap.add_argument("--output", default=str(Path(__file__).resolve().parent.parent / "crates/core/data/catalog.json"))
    args = ap.parse_args()
    algebras = classical_algebras(args.max_rank) + exceptional_algebras()
    alias_of = {}
    for group in ALIASES:
        for name in group:
            alias_of[name] = [x for x in group if x != name]
    for a in algebras:
        a["aliases"] = alias_of.get(a["label"], [])
        a["para_levis"] = para_levis(a["label"])
    labels = [a["label"] for a in algebras]
    pairs = classical_pairs(set(labels))
    for p in pairs:
        p["citations"] = [CITE["berger"]]
        if "remaining" in p["tags"]:
            p["citations"].append(CITE["remaining"])
        if any(t.startswith("nonneg") for t in p["tags"]):
            p["citations"].append(CITE["nonneg"])
    pairs += exceptional_pairs()
    pairs.sort(key=lambda p: (labels.index(p["g"]), p["gprime"]))
    doc = {"version": VERSION, "algebras": algebras, "pairs": pairs, "tables": tables()}
    Path(args.output).write_text(json.dumps(doc, indent=1) + "\n")
    print(f"{len(algebras)} algebras, {len(pairs)} pairs -> {args.output}")


if __name__ == "__main__":
    main()
