import json

import pytest

import modp_satake as ms


def test_group_info():
    info = ms.group_info("GL3")
    assert info["name"] == "GL3"
    assert info["cochar_rank"] == 3
    assert info["weyl_order"] == 6
    assert info["simple_roots"] == [[1, -1, 0], [0, 1, -1]]
    assert info["simple_coroots"] == info["simple_roots"]
    assert len(info["positive_roots"]) == 3


def test_dominance_helpers():
    assert ms.is_dominant("GL2", [1, 0])
    assert not ms.is_dominant("GL2", [0, 1])
    assert ms.dominance_leq("GL2", [1, 1], [2, 0])
    assert not ms.dominance_leq("GL2", [2, 0], [1, 1])
    assert ms.dominant_interval("GL2", [2, 0]) == [[1, 1], [2, 0]]
    assert ms.translation_length("GL2", [1, 0]) == 1
    assert ms.translation_length("Sp4", [2, 1]) == 10


def test_component_group():
    assert ms.component_group("GL2") == (1, [])
    assert ms.component_group("PGL2") == (0, [2])
    assert ms.component_group("SL3") == (0, [])
    assert ms.component_group("GL3", levi=[1]) == (2, [])


def test_monoid():
    assert ms.antidominant_generators("SL3") == [[-2, -1], [-1, -2], [-1, -1]]
    rels = ms.monoid_relations("SL3", bound=4, dominant=True)
    assert [r["pretty"] for r in rels] == ["3*g1 = g2 + g3"]

    gens = ms.antidominant_generators("GL2")
    exps = ms.factor_over_generators("GL2", [-2, -2])
    total = [0, 0]
    for e, g in zip(exps, gens):
        assert e >= 0
        total = [t + e * gi for t, gi in zip(total, g)]
    assert total == [-2, -2]
    assert ms.factor_over_generators("GL2", [1, 0]) is None


def test_hecke_convolution_and_satake():
    f = ms.HeckeElement("GL2", [([1, 0], 1)], p=2, basis="ic")
    t = f.satake()  # default target: the torus
    assert t.levi == []
    assert t.terms == [([0, 1], 1)]

    g = f.to_basis("std")
    assert g.terms == [([1, 0], 1)]
    sq = g * g
    assert sq.terms == [([1, 1], 1), ([2, 0], 1)]

    back = ms.HeckeElement.from_json(sq.to_json())
    assert back == sq
    assert json.loads(sq.to_json())["basis"] == "std"

    h = ms.HeckeElement("GL3", [([2, 1, 0], 1)], p=3, basis="ic")
    l = h.satake(levi=[1], out_basis="ic")
    assert l.levi == [1]
    assert l.terms == [([1, 0, 2], 1)]


def test_classify_multiply_character():
    chi = ms.SatakeParameter(
        "GL2", 5, 1, [([-1, -1], [2]), ([0, 1], [2]), ([1, 1], [3])]
    )
    assert chi.stratum == []
    assert chi.rank == 2
    assert chi.is_unit and not chi.is_supersingular
    assert chi.evaluate([-1, -1]) == [2]

    one11 = ms.HeckeElement("GL2", [([1, 1], 1)], p=5)
    assert chi.character(one11) == [3]

    unit = ms.SatakeParameter.unit("GL2", 5)
    assert chi * chi.inverse() == unit
    assert ms.SatakeParameter.from_json(chi.to_json()) == chi

    ss = ms.SatakeParameter("GL2", 5, 1, [([-1, -1], [2]), ([0, 1], [0]), ([1, 1], [3])])
    assert ss.stratum == [1]
    assert (chi * ss).stratum == [1]


def test_error_mapping():
    with pytest.raises(ms.VerificationError):
        ms.SatakeParameter("GL2", 3, 1, [([-1, -1], [2]), ([0, 1], [1]), ([1, 1], [1])])
    with pytest.raises(ValueError):
        ms.HeckeElement("GL2", [([0, 1], 1)])  # support is not dominant
    with pytest.raises(ValueError):
        ms.group_info("E8")
    with pytest.raises(ValueError):
        ms.mv_count(2, 6, 1, [1, 0], [1, 0])  # q = 6 is not a prime power


def test_oracle_tables():
    assert ms.mv_count(2, 2, 1, [1, 0], [0, 1]) == 1
    assert ms.mv_count(2, 5, 1, [1, 0], [1, 0], closure=False, jobs=2) == 5

    table = ms.satake_table(2, 3, 1, [1, 0])
    nonzero = {tuple(r["nu"]): r["mod_p"] for r in table if r["mod_p"]}
    assert nonzero == {(0, 1): 1}

    conv = ms.convolution_table(2, 2, 1, [1, 0], [1, 0])
    assert [(tuple(r["lambda"]), r["raw"]) for r in conv] == [((1, 1), 3), ((2, 0), 1)]


def test_strata_and_cosets():
    st = ms.strata("GL3")
    assert st[0] == ([], 3)
    assert st[-1] == ([1, 2], 1)
    assert len(st) == 4

    classes = ms.coset_decomposition("GL2", 2)
    assert {tuple(c["representative"]) for c in classes} == {(0, 0), (0, 1), (0, 2)}
    for c in classes:
        assert c["members"][0] == c["representative"]
