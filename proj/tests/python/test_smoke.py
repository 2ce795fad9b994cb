import pytest

import susp


def test_threefold_report():
    rep = susp.suspension_report("QQ[x,y]", "(x-1)*x*y+1")
    assert rep["f_prime"] and rep["hypersurface_smooth"] and rep["suspension_smooth"]
    assert rep["factorial"]
    assert rep["class_group"]["group"] == "0"


def test_normal_form_and_multiply():
    assert susp.normal_form("QQ[x]", ["x"], "u*v") == "x"
    assert susp.normal_form("QQ[x,y]", [], "(x-1)*x*y + 1") == "x^2*y - x*y + 1"
    assert susp.multiply("QQ[x]", ["x"], "u^2", "v") == "x*u"


def test_factor():
    unit, factors = susp.factor("QQ[x]", "x^4-1")
    assert unit == "1"
    assert sorted(factors) == sorted([("x - 1", 1), ("x + 1", 1), ("x^2 + 1", 1)])
    assert susp.is_irreducible("QQ[x,y]", "(x-1)*x*y+1")


def test_factor_susp():
    r = susp.factor_susp("QQ[x]", "x", "x")
    assert r["ufd"] and r["factors"] == [("u", 1), ("v", 1)]
    r = susp.factor_susp("QQ[x,y]", "x*y", "u")
    assert not r["ufd"]
    assert susp.certify_prime("QQ[x]", "x", "v+1")
    assert not susp.certify_prime("QQ[x]", "x", "x+u")
    assert susp.is_prime_uvf("QQ[x]", ["x"])
    assert not susp.is_prime_uvf("QQ[x]", ["x^2"])


def test_divides_u():
    f = "(x-1)*x*y+1"
    assert susp.divides_u("QQ[x,y]", f, f"v*({f})") == "v^2"
    assert susp.divides_u("QQ[x,y]", f, "v") is None


@pytest.mark.parametrize(
    "ring,f,group",
    [("QQ[x]", "x", "0"), ("QQ[x]", "x^2", "Z/2"), ("QQ[x,y]", "x*y", "Z"),
     ("QQ[x,y]", "x^2*y^3", "Z"), ("QQ[x,y]", "x^2*y^2", "Z ⊕ Z/2")],
)
def test_class_group_table(ring, f, group):
    assert susp.class_group(ring, f)["group"] == group


def test_snf():
    m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    U, D, V = susp.smith_normal_form(m)
    mul = lambda a, b: [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
                        for i in range(len(a))]
    assert mul(mul(U, m), V) == D
    assert [D[i][i] for i in range(3)] == [2, 6, 12]
    assert susp.cokernel([[2]]) == "Z/2"
    big = 10**30
    assert susp.smith_normal_form([[big]])[1] == [[big]]


def test_groebner_and_smoothness():
    assert susp.groebner("QQ[x,y]", ["x*y-1", "x"]) == ["1"]
    r = susp.hypersurface_smooth("QQ[x,y]", "x*y")
    assert not r["smooth"] and r["singular_point"] == {"x": "0", "y": "0"}
    assert susp.hypersurface_smooth("QQ[x,y]", "(x-1)*x*y+1")["smooth"]


def test_fitting():
    assert susp.fitting_ideal("QQ[y1,y2]", 2, [["y1+1", "-y1"]], 1) == ["y1 + 1", "y1"]
    assert susp.can_be_generated_by("QQ[y1,y2]", 2, [["y1+1", "-y1"]], 1)
    assert not susp.can_be_generated_by("QQ[y1,y2]", 2, [["y1", "0"], ["0", "y2"]], 1)
    assert not susp.can_be_generated_by("QQ[y1,y2]", 2, [], 1)
    rep = susp.gm_example_report()
    assert rep["verdict"] == "inconclusive: presentation possibly incomplete"
    assert rep["known_relations"] == [["y1 + 1", "-y1"]]
    assert susp.gm_example_report([])["cyclic"] is False


def test_errors_carry_codes():
    with pytest.raises(susp.SuspError) as e:
        susp.normal_form("QQ[x]", [], "x^^2")
    assert e.value.code == "syntax_error"
    with pytest.raises(susp.SuspError) as e:
        susp.normal_form("QQ[x]", ["0"], "x")
    assert e.value.code == "zero_f"


def test_cli_and_verify_paper():
    code, out, err = susp.run(["--ring", "QQ[x]", "--f", "x^2", "class-group"])
    assert code == 0 and out.startswith("Cl(X) = Z/2")
    code, out = susp.verify_paper()
    assert code == 0 and "FAIL" not in out
