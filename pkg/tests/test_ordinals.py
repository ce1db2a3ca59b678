import pytest
from hypothesis import given

from src.errors import EmptySequence, EntryOutOfRange, MalformedCNF, NonLinearBase, NotDecreasing, SemanticError
from src.orders import antichain, chain
from src.ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Comparison,
    OmegaAlpha,
    OrdinalCNF,
    cnf_add,
    cnf_compare,
    decseq_to_cnf,
    head_remove,
    omega_alpha_compare,
    suborder_from_enumeration,
    suffix_ranking,
    to_text,
    two_bar_times_gamma,
)

from .strategies import cnfs, decseqs

W = OMEGA
W2 = OrdinalCNF.omega_power(2)
WW = OrdinalCNF.omega_power(OMEGA)


def test_finite_ordinals_compare_as_integers():
    assert cnf_compare(OrdinalCNF.of(2), OrdinalCNF.of(3)) is Comparison.LT
    assert cnf_compare(OrdinalCNF.of(3), OrdinalCNF.of(3)) is Comparison.EQ


def test_omega_exceeds_every_integer():
    assert cnf_compare(OrdinalCNF.of(1000), W) is Comparison.LT
    assert cnf_compare(W2, cnf_add(W, OrdinalCNF.of(5))) is Comparison.GT
    assert cnf_compare(WW, OrdinalCNF.omega_power(100)) is Comparison.GT


def test_addition_absorbs_smaller_left_terms():
    assert cnf_add(ONE, W) == W
    assert cnf_add(W, ONE) != W
    assert cnf_add(W, W) == OrdinalCNF.omega_power(1, 2)
    assert cnf_add(cnf_add(W2, W), W2) == OrdinalCNF.omega_power(2, 2)


def test_text_format():
    assert to_text(ZERO) == '0'
    assert to_text(cnf_add(OrdinalCNF.omega_power(WW, 2), cnf_add(W, OrdinalCNF.of(3)))) == 'w^(w^(w))*2 + w + 3'
    assert to_text(W2) == 'w^2'


def test_malformed_terms_are_rejected():
    with pytest.raises(MalformedCNF):
        cnf_compare(OrdinalCNF(((ZERO, 1), (ONE, 1))), ONE)
    with pytest.raises(MalformedCNF):
        OrdinalCNF.omega_power(1, 0)
    with pytest.raises(MalformedCNF):
        OrdinalCNF.of(-1)


@given(cnfs(), cnfs())
def test_compare_is_antisymmetric(a, b):
    assert cnf_compare(a, b) is cnf_compare(b, a).flip()


@given(cnfs(), cnfs(), cnfs())
def test_addition_is_associative(a, b, c):
    assert cnf_add(cnf_add(a, b), c) == cnf_add(a, cnf_add(b, c))


@given(cnfs(), cnfs())
def test_addition_is_monotone_on_the_right(a, b):
    assert cnf_compare(a, cnf_add(a, b)) is not Comparison.GT


@given(cnfs(max_depth=1), cnfs(max_depth=1), cnfs(max_depth=1))
def test_compare_is_transitive(a, b, c):
    if a <= b and b <= c:
        assert a <= c


def test_omega_alpha_prefix_is_smaller():
    alpha = chain(2)
    assert omega_alpha_compare((1,), (1, 0), alpha) is Comparison.LT
    assert omega_alpha_compare((1, 1), (1, 0), alpha) is Comparison.GT
    assert omega_alpha_compare((), (0,), alpha) is Comparison.LT


def test_omega_alpha_rejects_increasing_sequence():
    with pytest.raises(NotDecreasing) as e:
        omega_alpha_compare((0, 1), (1,), chain(2))
    assert e.value.witness == 1


def test_omega_alpha_needs_linear_base():
    with pytest.raises(NonLinearBase):
        omega_alpha_compare((0,), (1,), antichain(2))


@pytest.mark.parametrize('sigma', [(5,), (-1,), (1, -1), (True,)])
def test_omega_alpha_entries_must_be_elements(sigma):
    with pytest.raises(EntryOutOfRange) as e:
        OmegaAlpha(chain(2)).compare(sigma, (0,))
    assert e.value.witness in sigma


def test_ordinal_reading_rejects_foreign_entries():
    with pytest.raises(EntryOutOfRange):
        decseq_to_cnf((-1,), chain(2))
    with pytest.raises(EntryOutOfRange):
        decseq_to_cnf((2, 0), chain(2))


def test_omega_alpha_over_cnf_entries():
    assert omega_alpha_compare((W, ONE), (W,)) is Comparison.GT
    assert omega_alpha_compare((ONE, ONE, ONE), (W,)) is Comparison.LT


@given(decseqs(3), decseqs(3))
def test_omega_alpha_agrees_with_ordinal_reading(sigma, tau):
    alpha = chain(3)
    expected = cnf_compare(decseq_to_cnf(sigma, alpha), decseq_to_cnf(tau, alpha))
    assert omega_alpha_compare(sigma, tau, alpha) is expected


def test_suffix_ranking():
    assert suffix_ranking((0,), (1, 0))
    assert suffix_ranking((), (1,))
    assert suffix_ranking((1, 0), (1, 0))
    assert not suffix_ranking((1,), (1, 0))


@given(decseqs(3))
def test_head_removal_is_suffix_and_smaller(sigma):
    if not sigma:
        with pytest.raises(EmptySequence):
            head_remove(sigma)
        return
    rest = head_remove(sigma)
    assert suffix_ranking(rest, sigma)
    assert OmegaAlpha(chain(3)).lt(rest, sigma)


def test_layers_compare_by_level():
    order = two_bar_times_gamma(W)
    assert order.compare((ONE, 0), (OrdinalCNF.of(5), 1)) is Comparison.LT
    assert order.compare((2, 0), (2, 1)) is Comparison.INCOMPARABLE
    assert order.compare((W, 0), (3, 0)) is Comparison.GT


def test_layers_materialize():
    p = two_bar_times_gamma(2).materialize()
    assert p.labels == ('(0,0)', '(0,1)', '(1,0)', '(1,1)')
    assert p.lt(1, 2) and p.incomparable(0, 1)


def test_infinite_layers_do_not_materialize():
    with pytest.raises(SemanticError):
        two_bar_times_gamma(W).materialize()


def test_enumeration_keeps_first_occurrences():
    sub = suborder_from_enumeration(two_bar_times_gamma(3), [(0, 1), (2, 0), (0, 1), (0, 0)])
    assert sub.points == ((0, 1), (2, 0), (0, 0))
    assert sub.embedding.is_embedding
    assert sub.embedding.mapping == (1, 4, 0)


def test_enumeration_point_outside_order():
    with pytest.raises(SemanticError):
        suborder_from_enumeration(two_bar_times_gamma(2), [(2, 0)])
