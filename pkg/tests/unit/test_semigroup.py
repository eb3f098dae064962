"""
单元测试 - 有限逆半群
"""
import pytest
from hypothesis import given, settings, strategies as st

import sys
import os
project_root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
sys.path.insert(0, project_root)

from src.core import (
    MalformedTableError, NonAssociativeError, BadInverseError,
    NoncommutingIdempotentsError, SizeLimitExceededError, NotIdempotentError
)
from src.algebra.semigroup import (
    UNDEFINED, PartialBijection, SemigroupHom, check_axioms, validate, generate_from_partial_bijections,
    check_hom, closure, generating_set, enumerate_homs, subsemigroup, is_normal_subsemigroup,
    cyclic_group, two_element_semilattice, adjoin_zero, direct_product, symmetric_inverse_monoid
)

B2_TABLE = [
    [0, 0, 0, 0, 0],
    [0, 1, 2, 0, 0],
    [0, 0, 0, 1, 2],
    [0, 3, 4, 0, 0],
    [0, 0, 0, 3, 4],
]
B2_NAMES = ["0", "e11", "e12", "e21", "e22"]


@st.composite
def partial_bijections(draw, degree):
    """{0..degree-1} 上的随机部分双射"""
    images = draw(st.permutations(range(degree)))
    defined = draw(st.lists(st.booleans(), min_size=degree, max_size=degree))
    return PartialBijection(tuple(x if keep else UNDEFINED for x, keep in zip(images, defined)))


@st.composite
def generator_sets(draw, max_degree=4):
    degree = draw(st.integers(min_value=1, max_value=max_degree))
    return draw(st.lists(partial_bijections(degree), min_size=1, max_size=3))


class TestAxioms:
    """逆半群公理校验测试"""

    def test_valid_table(self):
        """测试合法乘法表通过校验"""
        assert check_axioms(B2_TABLE, [0, 1, 3, 2, 4]) is None

    def test_non_associative(self):
        """测试结合律不成立"""
        error = check_axioms([[1, 0], [0, 0]])
        assert isinstance(error, NonAssociativeError)
        assert error.error_code == "NON_ASSOCIATIVE"
        assert {"s", "t", "u"} <= set(error.details)

    def test_bad_inverse(self):
        """测试给出的逆元不满足 s s* s = s"""
        with pytest.raises(BadInverseError):
            validate([[0, 1], [1, 0]], inverse=[1, 0])

    def test_noncommuting_idempotents(self):
        """测试左零半群的幂等元不交换"""
        with pytest.raises(NoncommutingIdempotentsError):
            validate([[0, 0], [1, 1]])

    def test_out_of_range_entry(self):
        """测试乘法表取值越界"""
        with pytest.raises(MalformedTableError):
            validate([[0, 2], [2, 0]])

    def test_non_square(self):
        """测试非方阵"""
        with pytest.raises(MalformedTableError):
            validate([[0, 0, 0], [0, 0, 0]])

    def test_name_count_mismatch(self):
        """测试元素名个数与阶不一致"""
        with pytest.raises(MalformedTableError):
            validate([[0, 1], [1, 0]], element_names=["a"])

    def test_inverse_found_when_missing(self):
        """测试缺省逆元时自动求出"""
        S = validate(B2_TABLE, element_names=B2_NAMES, name="B2")
        assert S.inverse == (0, 1, 3, 2, 4)

    def test_validation_error_carries_semigroup_name(self):
        """测试校验失败时 details 中带有半群名"""
        with pytest.raises(NonAssociativeError) as info:
            validate([[1, 0], [0, 0]], name="broken")
        assert info.value.details["semigroup"] == "broken"


class TestFiniteInverseSemigroup:
    """乘法表表示测试"""

    def setup_method(self):
        """测试前置设置"""
        self.S = validate(B2_TABLE, [0, 1, 3, 2, 4], B2_NAMES, "B2")

    def test_basic_shape(self):
        """测试阶、零元与单位元"""
        assert self.S.order == 5
        assert len(self.S) == 5
        assert self.S.zero == 0
        assert self.S.one is None

    def test_idempotents(self):
        """测试幂等元"""
        assert self.S.idempotents() == (0, 1, 4)
        assert not self.S.is_idempotent(2)

    def test_source_and_range(self):
        """测试 s*s 与 ss*"""
        e12 = self.S.id_of("e12")
        assert self.S.name_of(self.S.source_idempotent(e12)) == "e22"
        assert self.S.name_of(self.S.range_idempotent(e12)) == "e11"

    def test_conjugate(self):
        """测试 s e s*"""
        e21, e11 = self.S.id_of("e21"), self.S.id_of("e11")
        assert self.S.name_of(self.S.conjugate(e21, e11)) == "e22"

    def test_natural_order(self):
        """测试幂等元上的自然序"""
        assert self.S.natural_order_leq(0, 1)
        assert not self.S.natural_order_leq(1, 4)
        assert self.S.up_set(0) == frozenset({0, 1, 4})
        assert self.S.minimum_idempotent == 0

    def test_natural_order_requires_idempotents(self):
        """测试非幂等元比较时报错"""
        with pytest.raises(NotIdempotentError):
            self.S.natural_order_leq(2, 1)

    def test_predicates(self):
        """测试 Clifford、交换、群、半格判定"""
        assert not self.S.is_clifford()
        assert not self.S.is_commutative()
        assert not self.S.is_group()
        assert not self.S.is_semilattice()

    def test_unknown_name(self):
        """测试按名字查找不存在的元素"""
        with pytest.raises(KeyError):
            self.S.id_of("e33")


class TestPartialBijections:
    """部分双射测试"""

    def test_compose_applies_right_factor_first(self):
        """测试 st = s∘t"""
        a = PartialBijection((1, -1))
        assert a.compose(a).images == (-1, -1)
        shift = PartialBijection((1, 2, 0))
        swap = PartialBijection((1, 0, 2))
        assert shift.compose(swap).images == (2, 1, 0)

    def test_inverse_and_label(self):
        """测试求逆与展示名"""
        a = PartialBijection((1, -1))
        assert a.inverse().images == (-1, 0)
        assert a.label() == "[1,-]"
        assert a.domain() == frozenset({0})

    def test_not_injective(self):
        """测试非单射被拒绝"""
        with pytest.raises(ValueError):
            PartialBijection((0, 0))

    def test_generate_s3(self):
        """测试对换与三轮换生成 S3"""
        S = generate_from_partial_bijections(
            [PartialBijection((1, 0, 2)), PartialBijection((1, 2, 0))], name="S3"
        )
        assert S.order == 6
        assert S.is_group()
        assert not S.is_commutative()
        assert S.one == S.id_of("[0,1,2]")

    def test_symmetric_inverse_monoid_orders(self):
        """测试 |I_2| = 7，|I_3| = 34"""
        assert symmetric_inverse_monoid(2).order == 7
        assert len(symmetric_inverse_monoid(2).idempotents()) == 4
        assert symmetric_inverse_monoid(3).order == 34

    def test_size_limit(self):
        """测试生成规模超过上限"""
        generators = [PartialBijection((1, 0, 2)), PartialBijection((1, 2, 0))]
        with pytest.raises(SizeLimitExceededError):
            generate_from_partial_bijections(generators, size_limit=5)

    def test_mixed_degrees(self):
        """测试生成元次数不一致"""
        with pytest.raises(MalformedTableError):
            generate_from_partial_bijections([PartialBijection((0,)), PartialBijection((0, 1))])


class TestBuilders:
    """构造器测试"""

    def test_cyclic_group(self):
        """测试循环群"""
        Z3 = cyclic_group(3)
        assert Z3.name == "Z3"
        assert Z3.is_group() and Z3.is_commutative()
        assert Z3.mul(2, 2) == 1

    def test_adjoin_zero(self):
        """测试添加零元，名字冲突时改用 θ"""
        S = adjoin_zero(cyclic_group(2))
        assert S.order == 3
        assert S.zero == 2
        assert S.name_of(2) == "θ"
        assert S.name == "Z2∪{0}"
        assert S.is_clifford()

    def test_direct_product(self):
        """测试直积"""
        two = two_element_semilattice()
        P = direct_product(two, two)
        assert P.order == 4
        assert P.is_semilattice()
        assert P.name_of(3) == "(1,1)"


class TestHomomorphisms:
    """同态与子半群测试"""

    def test_enumerate_homs_group_to_two(self):
        """测试 Z2 → {0,1} 的同态恰为两个常值映射"""
        homs = set(enumerate_homs(cyclic_group(2), two_element_semilattice()))
        assert homs == {(0, 0), (1, 1)}

    def test_enumerate_homs_are_homs(self):
        """测试枚举结果都满足乘法性"""
        source, target = cyclic_group(4), cyclic_group(2)
        homs = list(enumerate_homs(source, target))
        assert len(homs) == 2
        assert all(check_hom(SemigroupHom(source, target, h)) for h in homs)

    def test_check_hom_rejects(self):
        """测试非同态被拒绝"""
        Z2 = cyclic_group(2)
        assert not check_hom(SemigroupHom(Z2, Z2, (1, 1)))

    def test_closure_and_generating_set(self):
        """测试闭包与生成集"""
        Z4 = cyclic_group(4)
        assert closure(Z4, [2]) == frozenset({0, 2})
        assert closure(Z4, generating_set(Z4)) == frozenset(range(4))

    def test_subsemigroup(self):
        """测试取逆子半群"""
        S = validate(B2_TABLE, [0, 1, 3, 2, 4], B2_NAMES, "B2")
        sub, members = subsemigroup(S, [0, 1])
        assert members == (0, 1)
        assert sub.is_semilattice()

    def test_subsemigroup_not_closed(self):
        """测试不封闭的元素集合"""
        S = validate(B2_TABLE, [0, 1, 3, 2, 4], B2_NAMES, "B2")
        with pytest.raises(MalformedTableError):
            subsemigroup(S, [1, 2])

    def test_normal_subsemigroup(self):
        """测试 E(S) 是正规子半群"""
        S = validate(B2_TABLE, [0, 1, 3, 2, 4], B2_NAMES, "B2")
        assert is_normal_subsemigroup(S, S.idempotents())
        assert not is_normal_subsemigroup(S, [0, 1, 2, 4])


class TestRandomPartialBijections:
    """随机部分双射生成的逆半群"""

    @settings(max_examples=25, deadline=None)
    @given(generator_sets(max_degree=4))
    def test_generated_semigroup_passes_validation(self, generators):
        """测试生成结果总能通过公理校验"""
        S = generate_from_partial_bijections(generators)
        assert check_axioms(S.table.tolist(), list(S.inverse)) is None
        T = validate(S.table.tolist(), list(S.inverse), list(S.element_names))
        assert T.order == S.order
        assert all(S.source_idempotent(s) in S.idempotents() for s in S.elements())

    @settings(max_examples=25, deadline=None)
    @given(generator_sets(max_degree=4))
    def test_natural_order_is_partial_order(self, generators):
        """测试自然序在 E(S) 上自反、反对称、传递"""
        S = generate_from_partial_bijections(generators)
        E = S.idempotents()
        leq = S.natural_order_leq
        for e in E:
            assert leq(e, e)
            for f in E:
                if leq(e, f) and leq(f, e):
                    assert e == f
                for g in E:
                    if leq(e, f) and leq(f, g):
                        assert leq(e, g)

    def test_zero_size_limit_is_respected(self):
        """测试显式给出 0 作为上限时不回退到默认值"""
        with pytest.raises(SizeLimitExceededError):
            generate_from_partial_bijections([PartialBijection((0,))], size_limit=0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
