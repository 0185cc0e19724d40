import cmath
import math

import numpy as np
import pytest

from chm8.equivalence import perm_equivalent
from chm8.errors import DegenerateDenominator, OutOfDomain, UnknownFamily, UnknownSystem
from chm8.families import (
    INEQUIVALENCE_LIST,
    REGISTRY,
    FamilyId,
    branch_variants,
    eval_family,
    eval_symbols,
    eval_t8_raw,
    get_family,
    in_domain,
    residual_system,
    sample_in_domain,
    solve_symbols,
    reference_point,
    v8_sixteen_solutions,
)
from chm8.families import solutions as sol
from chm8.families.containment import t8raw_containment_probe
from chm8.families.systems import family_residual
from chm8.membership import member
from chm8.verify import dephase, gram_residual, is_butson, is_hadamard

PARAMETRIC = [s.name for s in REGISTRY.values() if s.parametric and s.name != "T8raw"]


def test_registry_shape():
    assert len(REGISTRY) == 19
    assert len(INEQUIVALENCE_LIST) == 12
    assert [get_family(f).name for f in INEQUIVALENCE_LIST] == [
        "F8", "D8A", "D8B", "S8A", "S8B", "T8B", "T8C", "T8D", "T8Dt", "T8E", "T8Et", "T8F",
    ]
    assert get_family("t8dT").id is FamilyId.T8D_T_3
    assert get_family(FamilyId.B1_BUTSON).name == "B1"
    with pytest.raises(UnknownFamily):
        get_family("T9Z")


def test_signatures():
    assert get_family("T8F").signature.kinds == ("real_interval",) * 3
    for name in PARAMETRIC:
        spec = get_family(name)
        if name != "T8F":
            assert set(spec.signature.kinds) == {"angle"}
    for name in ("A8A", "A8B", "V8A", "V8B", "B1", "B2"):
        assert get_family(name).signature.count == 0


@pytest.mark.parametrize(
    "name,count", [("T8C", 4), ("T8D", 2), ("T8Dt", 2), ("T8F", 128), ("T8E", 1), ("F8", 1), ("T8B", 1)]
)
def test_branch_variants(name, count):
    assert branch_variants(name) == count


def test_constants():
    assert get_family("F8").constants["omega"] == pytest.approx(cmath.exp(2j * math.pi / 8))
    assert get_family("T8raw").constants["zeta"] == pytest.approx(cmath.exp(2j * math.pi / 20))
    assert get_family("B1").constants["omega"] == pytest.approx(cmath.exp(2j * math.pi / 6))


def test_t8e_at_origin():
    values, _ = solve_symbols("T8E", (0, 0, 0))
    assert np.allclose(values, [1, 1, 1, -1, -1, -1])
    assert is_hadamard(eval_family("T8E", (0, 0, 0)))


def test_t8b_at_i():
    values, _ = solve_symbols("T8B", (math.pi / 2,) * 3)
    # (1 + 3 i^2) / (3 i + i^3) = -2 / 2i
    assert abs(values[3] - 1j) < 1e-15
    assert is_hadamard(eval_family("T8B", (math.pi / 2,) * 3))


def test_a8a():
    a = sol.A8A_VALUE
    assert abs(abs(a) - 1) < 1e-15
    assert abs(3 * a * a - 2 * a + 3) < 1e-14
    H = eval_family("A8A")
    assert is_hadamard(H) and np.array_equal(H, H.T)
    assert np.allclose(eval_family("A8B"), H.conj(), atol=1e-15)


def test_isolated_and_butson_matrices():
    for name in ("A8A", "A8B", "V8A", "V8B", "B1", "B2"):
        assert is_hadamard(eval_family(name))
    B1, B2 = eval_family("B1"), eval_family("B2")
    assert np.array_equal(B2, B1.T)
    assert is_butson(B1, 6).is_butson and is_butson(B2, 6).is_butson
    assert np.allclose(eval_family("V8A"), eval_family("V8B").conj().T, atol=1e-15)


def test_in_domain_examples(rng):
    assert in_domain("T8C", (2, 3, 4)).inside
    verdict = in_domain("T8B", (0, 1.3, -0.4))
    assert not verdict.inside and verdict.reasons[0].name.startswith("D0")
    for _ in range(100):
        assert in_domain("T8E", tuple(rng.uniform(-math.pi, math.pi, 3))).inside


def test_out_of_domain_reasons():
    with pytest.raises(DegenerateDenominator) as info:
        eval_family("T8B", (0, 1, 1))
    assert info.value.verdict.reasons
    with pytest.raises(OutOfDomain):
        eval_family("T8F", (0.99, -0.99, 0.1), branch=0)
    with pytest.raises(ValueError):
        eval_family("T8C", (1, 2))
    with pytest.raises(ValueError):
        eval_family("T8C", (1, 2, 3), branch=4)


def test_reference_points_in_domain():
    for fam in INEQUIVALENCE_LIST:
        params, branch = reference_point(fam)
        assert in_domain(fam, params, branch).inside
        assert is_hadamard(eval_family(fam, params, branch))


def test_t8f_reference_point_symbols():
    params, branch = reference_point("T8F")
    values, _ = solve_symbols("T8F", params, branch)
    assert np.allclose(values[:3], [cmath.exp(2j), cmath.exp(3j), cmath.exp(4j)], atol=1e-15)


def test_residual_system_examples():
    assert residual_system("p_E", [1, 1, 1, -1, -1, -1]) < 1e-12
    assert residual_system("p_V", sol.v8b_generator()) < 1e-12
    assert residual_system("p_B", [1j, 1j, 1j, -1j]) > 0.5
    with pytest.raises(UnknownSystem):
        residual_system("p_Q", [1])


def test_v8_solutions():
    sols = v8_sixteen_solutions()
    assert len(sols) == 16
    assert sols[0] == sol.v8b_generator()
    for triple in sols:
        assert residual_system("p_V", triple) < 1e-10
        assert residual_system("trig_V", triple) < 1e-10
        assert is_hadamard(eval_symbols("V8B", triple))


def test_t8_raw():
    rng = np.random.default_rng(1)
    x, y, z, u = np.exp(1j * rng.uniform(-np.pi, np.pi, 4))
    T = eval_t8_raw(x, y, z, u)
    assert np.allclose(np.abs(T), 1)
    assert np.array_equal(T[0], np.ones(8))
    assert gram_residual(T) > 1e-3


def test_t8raw_containment_probe():
    # the identity holds once the sixth listed argument is dropped
    assert t8raw_containment_probe(np.random.default_rng(3), trials=4) == [5]


@pytest.mark.parametrize("base,transposed", [("D8A", "D8B"), ("S8A", "S8B"), ("T8D", "T8Dt"), ("T8E", "T8Et")])
def test_transposed_families(base, transposed, rng):
    for _ in range(5):
        params, branch, _ = sample_in_domain(base, rng)
        assert np.array_equal(eval_family(transposed, params, branch), eval_family(base, params, branch).T)


@pytest.mark.parametrize("name", PARAMETRIC)
def test_samples_are_hadamard_with_unimodular_symbols(name, rng):
    for _ in range(100):
        params, branch, values = sample_in_domain(name, rng)
        assert np.max(np.abs(np.abs(values) - 1)) < 1e-10
        assert is_hadamard(eval_family(name, params, branch))


@pytest.mark.parametrize("name", ["T8B", "T8C", "T8D", "T8E", "T8F"])
def test_solutions_satisfy_orthogonality_systems(name, rng):
    fid = get_family(name).id.value
    for _ in range(200):
        _, _, values = sample_in_domain(name, rng)
        assert family_residual(fid, values) < 1e-9


def test_t8c_never_gives_the_real_matrix(rng):
    for _ in range(200):
        params, branch, _ = sample_in_domain("T8C", rng)
        D = dephase(eval_family("T8C", params, branch)).dephased
        assert np.max(np.abs(D.imag)) > 1e-6


def test_t8c_transposes_observed_in_family(rng):
    # an observation about sampled points, not a proven property
    hits = 0
    for _ in range(5):
        params, branch, _ = sample_in_domain("T8C", rng)
        report = member("T8C", eval_family("T8C", params, branch).T)
        if report.found:
            hits += 1
            assert report.residual < 1e-8
    print(f"T8C transposes found in T8C: {hits}/5")


def test_t8c_transpose_is_not_permutation_of_itself():
    H = eval_family("T8C", (2, 3, 4))
    assert perm_equivalent(H, H.T) is None


# -- batch solvers agree with the scalar ones ------------------------------

@pytest.mark.parametrize(
    "batch,scalar,branches",
    [
        (sol.batch_t8b, lambda a, b, c, br: sol.solve_t8b(a, b, c), 1),
        (sol.batch_t8c, sol.solve_t8c, 4),
        (sol.batch_t8d, sol.solve_t8d, 2),
        (sol.batch_t8e, lambda a, b, c, br: sol.solve_t8e(a, b, c), 1),
    ],
)
def test_batch_solvers_match_scalar(batch, scalar, branches, rng):
    a, b, c = np.exp(1j * rng.uniform(-np.pi, np.pi, (3, 300)))
    for br in range(branches):
        values, inside = batch(a, b, c, br)
        agree = 0
        for k in range(300):
            v, verdict = scalar(complex(a[k]), complex(b[k]), complex(c[k]), br)
            ok = v is not None and verdict.inside
            if ok != inside[k]:
                continue
            if ok and np.max(np.abs(np.array(v) - values[k])) > 1e-9:
                continue
            agree += 1
        # a point sitting on a domain boundary may be judged differently
        assert agree >= 299


def test_batch_t8f_matches_scalar(rng):
    ar, br, ci = rng.uniform(-1, 1, (3, 200))
    for branch in range(0, 128, 9):
        signs = [np.full(200, s) for s in sol.t8f_signs(branch)]
        values, inside = sol.batch_t8f(ar, br, ci, signs)
        for k in range(200):
            v, verdict = sol.solve_t8f(float(ar[k]), float(br[k]), float(ci[k]), branch)
            assert (v is not None and verdict.inside) == inside[k]
            if inside[k]:
                assert np.max(np.abs(np.array(v) - values[k])) < 1e-9


def test_t8f_branch_bits():
    assert sol.t8f_signs(0) == (1,) * 7
    assert sol.t8f_signs(64)[0] == -1
    assert sol.t8f_signs(1)[6] == -1
    for b in range(128):
        assert sol.t8f_branch(sol.t8f_signs(b)) == b
    with pytest.raises(ValueError):
        sol.t8f_signs(128)
