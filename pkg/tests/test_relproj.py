from collections import Counter

import numpy as np
import pytest

from kfour import linalg as la
from kfour.decomp import decompose, identify
from kfour.homspace import chi_transfer_image, hom_basis, is_rel_projective
from kfour.kgmod import (
    CHI,
    Q_SIGMA,
    Q_SIGMATAU,
    Q_TAU,
    Proj,
    Subgroup,
    VEven,
    VMinus,
    VPlus,
    build_indecomposable,
    catalogue,
    direct_sum,
    trivial,
)
from kfour.relproj import (
    Resolution,
    injective_hull,
    lift_through_covers,
    minimal_cover,
    minimal_resolution,
    omega_chi,
    omega_of_hom,
    standard_cover,
)

from oracles import gf2_rank, mat_mul

Q = Counter([Q_SIGMA, Q_TAU, Q_SIGMATAU])
TRIV = frozenset({Subgroup.TRIV})


def shape(cover):
    return Counter(cover.labels())


def assert_split_cover(cover):
    """Recheck the cover identities with the oracle product."""
    M, Qm, pi = cover.module, cover.total, cover.pi
    assert np.array_equal(mat_mul(pi, Qm.X), mat_mul(M.X, pi))
    assert np.array_equal(mat_mul(pi, Qm.Y), mat_mul(M.Y, pi))
    assert gf2_rank(pi) == M.dim
    for h in cover.chi:
        s = cover.splittings[h]
        assert np.array_equal(mat_mul(pi, s), np.eye(M.dim))
        t_q, t_m = Qm.nilpotent(h), M.nilpotent(h)
        assert np.array_equal(mat_mul(t_q, s), mat_mul(s, t_m))
    E = cover.embedding
    assert not mat_mul(pi, E).any()
    assert gf2_rank(E) == E.shape[1] == Qm.dim - M.dim


def test_standard_cover_of_trivial(F2):
    cover = standard_cover(trivial(F2), CHI)
    assert cover.total.dim == 6
    assert shape(cover) == Q
    assert decompose(cover.total).multiset() == Q
    assert_split_cover(cover)


def test_standard_cover_of_v3(F2):
    cover = standard_cover(build_indecomposable(VPlus(1), F2), CHI)
    assert_split_cover(cover)
    assert omega_chi(cover.kernel, CHI, 0) == build_indecomposable(VMinus(1), F2)


def test_generic_theta_cover(F2):
    cover = minimal_cover(build_indecomposable(VEven.of((1, 1, 1)), F2), CHI)
    assert shape(cover) == Counter({Proj(): 2})
    assert_split_cover(cover)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_negative_odd_cover(F2, n):
    cover = minimal_cover(build_indecomposable(VMinus(n), F2), CHI)
    assert shape(cover) == Q + Counter({Proj(): n})
    assert decompose(cover.total).multiset() == shape(cover)
    assert_split_cover(cover)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_infinite_even_cover(F2, n):
    cover = minimal_cover(build_indecomposable(VEven.inf(n), F2), CHI)
    assert shape(cover) == Counter({Q_TAU: 2, Proj(): n - 1})


def test_cover_of_relative_projective(F2):
    for lab in (Proj(), Q_SIGMA, Q_TAU, Q_SIGMATAU):
        m = build_indecomposable(lab, F2)
        cover = minimal_cover(m, CHI)
        assert cover.kernel.dim == 0
        assert decompose(cover.total).multiset() == Counter([lab])


def test_minimal_cover_kernels_have_no_relprojective_summands(F2):
    for lab in catalogue(9, F2):
        cover = minimal_cover(build_indecomposable(lab, F2), CHI)
        assert_split_cover(cover)
        for part in decompose(cover.kernel).labels:
            assert not is_rel_projective(build_indecomposable(part, F2), CHI), (lab, part)


def test_omega_examples(F2):
    assert omega_chi(trivial(F2), CHI, 1) == build_indecomposable(VMinus(2), F2)
    assert omega_chi(build_indecomposable(VMinus(1), F2), CHI, -1) == build_indecomposable(VPlus(1), F2)
    v4 = build_indecomposable(VEven.inf(2), F2)
    assert omega_chi(v4, CHI, 1) == v4
    assert omega_chi(build_indecomposable(Proj(), F2), CHI, 1).dim == 0


def test_ordinary_omega(F2):
    k = trivial(F2)
    assert identify(omega_chi(k, TRIV, 1)) == VPlus(1)
    assert identify(omega_chi(k, TRIV, -1)) == VMinus(1)
    assert identify(omega_chi(k, TRIV, 3)) == VPlus(3)


def test_omega_of_identity_and_zero(F2):
    k = trivial(F2)
    om = omega_of_hom(la.eye(1), k, k, CHI)
    K = om.source.kernel
    td = chi_transfer_image(K, K, CHI)
    assert td.is_zero_class(om.matrix ^ la.eye(K.dim))
    assert not td.is_zero_class(om.matrix)
    zero = omega_of_hom(la.zeros(1, 1), k, k, CHI)
    assert td.is_zero_class(zero.matrix)


def test_maps_from_vm5_to_k_are_stably_zero(F2):
    vm5 = build_indecomposable(VMinus(2), F2)
    k = trivial(F2)
    td = chi_transfer_image(vm5, k, CHI)
    assert hom_basis(vm5, k).dim == 2
    for f in hom_basis(vm5, k).basis:
        assert td.is_zero_class(f)


def test_lift_of_map_between_covers(F2):
    v5, v3 = build_indecomposable(VPlus(2), F2), build_indecomposable(VPlus(1), F2)
    cm, cn = minimal_cover(v5, CHI), minimal_cover(v3, CHI)
    for f in hom_basis(v5, v3).basis:
        lift = lift_through_covers(f, cm, cn)
        assert np.array_equal(mat_mul(cn.pi, lift), mat_mul(f, cm.pi))
        assert np.array_equal(mat_mul(lift, cm.total.X), mat_mul(cn.total.X, lift))


def test_injective_hull_of_trivial(F2):
    k = trivial(F2)
    I, iota = injective_hull(k, CHI)
    assert decompose(I).multiset() == Q
    assert gf2_rank(iota) == 1
    assert np.array_equal(mat_mul(I.X, iota), mat_mul(iota, k.X))


def test_resolution(F2):
    res = minimal_resolution(CHI, 2, F2)
    assert [res.module(i).dim for i in range(3)] == [6, 14, 22]
    assert identify(res.syzygy(2)) == VMinus(4)
    assert res.is_exact(2)
    d0, d1 = res.boundary(0), res.boundary(1)
    assert not mat_mul(res.augmentation(), d0).any()
    assert not mat_mul(d0, d1).any()
    assert minimal_resolution(CHI, 1, F2) is res


def test_ordinary_resolution(F2):
    res = Resolution(F2, TRIV)
    assert identify(res.syzygy(1)) == VPlus(1)
    assert [res.module(i).dim for i in range(3)] == [4, 8, 12]
    assert res.is_exact(2)


def test_resolution_needs_chi(F2):
    with pytest.raises(ValueError):
        Resolution(F2, [])


def test_covers_over_gf4(F4):
    w = F4.generator.value
    for lab in (VEven.of((w, 1), 2), VPlus(2), VMinus(1)):
        cover = minimal_cover(build_indecomposable(lab, F4), CHI)
        cover.check()
    assert shape(minimal_cover(build_indecomposable(VEven.of((w, 1), 2), F4), CHI)) == Counter({Proj(): 2})


def test_cover_of_sum_with_projective(F2):
    M = direct_sum(build_indecomposable(VPlus(1), F2), build_indecomposable(Proj(), F2))
    cover = minimal_cover(M, CHI)
    assert shape(cover) == Q + Counter({Proj(): 1})
    assert identify(omega_chi(M, CHI)) == VMinus(1)
