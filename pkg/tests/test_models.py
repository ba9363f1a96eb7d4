import pytest
from hypothesis import given
from hypothesis import strategies as st

from hicat.models import (
    BasisMorphism,
    almost_positive_model,
    basis_morphism,
    cluster_model,
    compose,
    compose_matrices,
    derived_model,
    identity_matrix,
    make_model,
    module_model,
    morphism_matrix,
    relative_f_model,
    zero_matrix,
)
from hicat.tuples import gen_derset_window, gen_modset, gen_nonconsec


def test_object_sets():
    assert module_model(2, 3).objects == gen_modset(7, 2)
    assert cluster_model(2, 3).objects == gen_nonconsec(8, 2)
    assert almost_positive_model(2, 3).objects == gen_nonconsec(8, 2)
    assert relative_f_model(2, 3).objects == gen_nonconsec(8, 2)
    assert derived_model(2, 3).objects == gen_derset_window(8, 2, 1, 8)
    assert derived_model(2, 3, (1, 3)).objects == gen_derset_window(8, 2, 1, 3)


def test_bad_params():
    with pytest.raises(ValueError):
        module_model(0, 3)
    with pytest.raises(ValueError):
        cluster_model(1, 0)
    with pytest.raises(ValueError):
        make_model("nonsense", 1, 1)
    with pytest.raises(ValueError):
        make_model("cluster", 1, 2, window=(1, 2))


def test_hom_examples():
    m = module_model(2, 3)
    assert m.hom_dim((1, 3, 5), (1, 3, 6)) == 1
    c = cluster_model(1, 6)
    assert c.hom_dim((1, 5), (2, 6)) == 1
    assert c.hom_dim((4, 8), (2, 6)) == 1
    # the two end labels overlap after the one-step shift, so this hom space
    # is zero: no simultaneous rotation interleaves {4,9} with {4,8}
    assert c.hom_dim((1, 5), (4, 8)) == 0
    ap = almost_positive_model(2, 3)
    assert ap.hom_dim((2, 4, 7), (2, 4, 8)) == 1
    assert ap.hom_dim((1, 3, 5), (4, 6, 8)) == 0


def test_hom_membership_errors():
    m = module_model(2, 3)
    with pytest.raises(ValueError):
        m.hom_dim((1, 3, 9), (1, 3, 5))
    with pytest.raises(ValueError):
        m.ext_dim((1, 3, 5), (0, 2, 4))


def test_ext_examples():
    m = module_model(2, 3)
    assert m.ext_dim((2, 4, 6), (1, 3, 5)) == 1
    c = cluster_model(2, 3)
    assert c.ext_dim((1, 3, 5), (2, 4, 6)) == 1
    assert c.ext_dim((2, 4, 6), (1, 3, 5)) == 1
    rf = relative_f_model(2, 3)
    assert rf.ext_dim((2, 4, 6), (1, 3, 5)) == 1
    assert rf.ext_dim((1, 3, 5), (2, 4, 6)) == 0


@pytest.mark.parametrize("model", [
    module_model(2, 3), cluster_model(1, 4), almost_positive_model(2, 3),
    relative_f_model(1, 4), derived_model(1, 3),
])
def test_ext_irreflexive_and_hom_reflexive(model):
    for a in model.objects:
        assert model.ext_dim(a, a) == 0
        assert model.hom_dim(a, a) == 1


def test_compose_examples():
    m = module_model(2, 3)
    f = basis_morphism(m, (1, 3, 5), (1, 3, 6))
    g = basis_morphism(m, (1, 3, 6), (1, 3, 7))
    assert compose(m, g, f) == 1
    g2 = basis_morphism(m, (1, 3, 6), (1, 4, 6))
    assert compose(m, g2, f) == 0
    with pytest.raises(ValueError):
        compose(m, f, g)  # middle objects do not match


def test_cluster_noncommuting_example():
    c = cluster_model(1, 6)
    # the hom space O_15 -> O_48 vanishes, so the leg cannot even be built
    # and every composite through O_48 is zero
    with pytest.raises(ValueError):
        basis_morphism(c, (1, 5), (4, 8))
    assert c.hom_dim((1, 5), (2, 6)) == 1
    # an honest witness: both legs nonzero, composite zero, target hom nonzero
    assert c.hom_dim((1, 5), (3, 7)) == 1
    assert c.hom_dim((3, 7), (1, 5)) == 1
    assert c.compose_scalar((1, 5), (3, 7), (1, 5)) == 0
    assert c.hom_dim((1, 5), (1, 5)) == 1


@pytest.mark.parametrize("model", [
    module_model(1, 4), cluster_model(1, 3), almost_positive_model(1, 4),
])
def test_compose_unit_law(model):
    for x in model.objects:
        for y in model.objects:
            if model.hom_dim(x, y):
                assert model.compose_scalar(x, x, y) == 1
                assert model.compose_scalar(x, y, y) == 1


def test_classify():
    m = module_model(1, 3)
    cls = m.classify((1, 5))
    assert cls.projective and cls.injective
    assert not m.classify((2, 4)).projective
    assert m.classify((1, 3)).projective and not m.classify((1, 3)).injective
    c = cluster_model(2, 3)
    assert c.classify((2, 4, 8)).shifted_projective
    assert c.classify((1, 3, 7)).projective_image
    assert not c.classify((2, 4, 6)).shifted_projective


def test_matrix_validation():
    m = module_model(2, 3)
    mat = morphism_matrix(m, ((1, 3, 5),), ((1, 3, 6),), ((1,),))
    assert mat.shape == (1, 1)
    with pytest.raises(ValueError):
        morphism_matrix(m, ((1, 3, 6),), ((1, 3, 5),), ((1,),))  # zero hom space
    with pytest.raises(ValueError):
        morphism_matrix(m, ((1, 3, 5),), ((1, 3, 6),), ((1, 2),))  # bad shape


def test_compose_matrices_identity_and_zero():
    m = module_model(2, 3)
    labels = ((1, 3, 5), (1, 3, 6))
    ident = identity_matrix(labels)
    assert compose_matrices(m, ident, ident).entries == ident.entries
    z = zero_matrix(labels, labels)
    assert compose_matrices(m, z, ident).is_zero()
    assert compose_matrices(m, ident, z).is_zero()
    with pytest.raises(ValueError):
        compose_matrices(m, ident, zero_matrix(labels, ((1, 3, 5),)))


@given(st.sampled_from(gen_nonconsec(9, 1)), st.sampled_from(gen_nonconsec(9, 1)))
def test_cluster_hom_is_shifted_crossing(src, tgt):
    # hom nonzero exactly when the shifted source cyclically interleaves the target
    from hicat.tuples import intertwines_cyclic, normalize_cyclic
    c = cluster_model(1, 6)
    shifted = normalize_cyclic(tuple(v - 1 for v in src), 9)
    overlap = set(shifted) & set(tgt)
    expected = not overlap and intertwines_cyclic(shifted, tgt, 9)
    assert c.hom_dim(src, tgt) == (1 if expected else 0)
