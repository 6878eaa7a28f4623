import json
import random

import pytest
import sympy

import pnideal


def test_formula_roundtrip():
    assert pnideal.parse_formula("~(A * B)") == "~B | ~A"
    assert pnideal.parse_formula("A * B | C") == "(A * B) | C"


def test_smallest_net():
    n = pnideal.smallest_net()
    assert n.validate() == (True, [])
    assert n.cut_count == 0
    assert n.ideal() == ["x0_0 - x2_0", "x1_0 - x0_0", "x2_1 - x1_0"]


def test_json_roundtrip():
    n = pnideal.detour_net()
    m = pnideal.Net.from_json(n.to_json())
    assert m.to_json() == n.to_json()
    assert len(n.ideal("gamma")) == 11


def test_normalize_detour():
    nf, t = pnideal.detour_net().normalize()
    assert nf.cut_count == 0
    assert nf.conclusions() == pnideal.detour_net().conclusions()
    assert set(t) == set(nf.variables())


def test_translate_from_json():
    proof = {"rule": "par", "occ": [0, 1], "children": [{"rule": "ax", "formula": "A"}]}
    n = pnideal.translate(json.dumps(proof))
    assert n.conclusions() == ["~A | A"]


def test_bad_input_raises():
    with pytest.raises(ValueError):
        pnideal.parse_formula("A *")
    with pytest.raises(ValueError):
        pnideal.detour_net().combine().order("nope")


def test_verify_small():
    reps = pnideal.verify("all", seed=1, count=5)
    assert reps and all(r["pass"] for r in reps)
    bad = pnideal.verify("goi", seed=1, count=10, sabotage=True)
    assert any(not r["pass"] and r["witness"] for r in bad)


def sympy_reduced(polys, order):
    syms = sympy.symbols(" ".join(reversed(order)))
    ns = {str(s): s for s in syms}
    F = [sympy.sympify(p, locals=ns) for p in polys]
    G = sympy.groebner(F, *syms, order="lex")
    return sorted(sympy.srepr(sympy.expand(g / sympy.Poly(g, *syms).LC())) for g in G.exprs)


def ours_as_sympy(polys, order):
    ns = {v: sympy.Symbol(v) for v in order}
    syms = [ns[v] for v in reversed(order)]
    out = []
    for p in polys:
        e = sympy.sympify(p, locals=ns)
        out.append(sympy.srepr(sympy.expand(e / sympy.Poly(e, *syms).LC())))
    return sorted(out)


@pytest.mark.parametrize("seed", range(8))
def test_reduced_basis_matches_sympy(seed):
    rng = random.Random(seed)
    order = [f"x{i}_0" for i in range(4)]
    polys = []
    for _ in range(3):
        text = ""
        for k in range(rng.randint(1, 3)):
            c = rng.choice([-3, -2, -1, 1, 2, 3])
            mono = "*".join(v for v in order if rng.random() < 0.4)
            body = f"{abs(c)}*{mono}" if mono else str(abs(c))
            text += ("-" if c < 0 else "") + body if k == 0 else (" - " if c < 0 else " + ") + body
        polys.append(text)
    ours = pnideal.reduced_groebner(polys, order)
    assert ours_as_sympy(ours, order) == sympy_reduced(polys, order)


def test_net_ideal_basis_matches_sympy():
    n = pnideal.detour_net()
    order = n.order("gamma")
    gens = n.ideal("gamma")
    ours = pnideal.reduced_groebner(gens, order)
    assert ours_as_sympy(ours, order) == sympy_reduced(gens, order)
    es = pnideal.groebner(gens, order, "es")
    std = pnideal.groebner(gens, order, "std")
    assert len(es) >= len(ours) and len(std) >= len(ours)
