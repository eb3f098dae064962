"""
单元测试 - 同余、商与核
"""
import pytest
from hypothesis import given, settings, strategies as st

import sys
import os
project_root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
sys.path.insert(0, project_root)

from src.core import NotNormalError, NotIdempotentError
from src.algebra.union_find import UnionFind
from src.algebra.semigroup import (
    UNDEFINED, PartialBijection, SemigroupHom, cyclic_group, enumerate_homs, generate_from_partial_bijections
)
from src.algebra.congruence import (
    Congruence, IdempotentCongruence, close, join, nu_min, quotient, kernel,
    least_clifford, least_clifford_oracle, least_commutative, nu_ab_oracle,
    maximal_group_image, enumerate_congruences, enumerate_normal_congruences,
    is_normal_on_idempotents, factors_through,
    least_clifford_by_enumeration, least_commutative_by_enumeration
)
from src.services import collect_corpus


@st.composite
def random_semigroups(draw, max_degree=3):
    """随机部分双射生成的逆半群"""
    degree = draw(st.integers(min_value=1, max_value=max_degree))
    generators = []
    for _ in range(draw(st.integers(min_value=1, max_value=3))):
        images = draw(st.permutations(range(degree)))
        defined = draw(st.lists(st.booleans(), min_size=degree, max_size=degree))
        generators.append(PartialBijection(tuple(x if keep else UNDEFINED for x, keep in zip(images, defined))))
    return generate_from_partial_bijections(generators)


def pairs_of(nu):
    S = nu.semigroup
    return [(s, t) for s in S.elements() for t in S.elements() if s < t and nu.related(s, t)]


def finite_corpus(corpus_dir):
    return [entry.semigroup for entry in collect_corpus(corpus_dir) if entry.semigroup is not None]


class TestUnionFind:
    """并查集测试"""

    def test_union_and_labels(self):
        """测试合并与规范标签"""
        uf = UnionFind(5)
        assert uf.union(3, 1)
        assert uf.union(4, 3)
        assert not uf.union(1, 4)
        assert uf.connected(1, 4)
        assert not uf.connected(0, 1)
        assert uf.canonical_labels() == [0, 1, 2, 1, 1]


class TestClose:
    """生成对闭包测试"""

    def test_mod2_on_z4(self):
        """测试 Z4 中 0 ~ 2 生成模 2 同余"""
        Z4 = cyclic_group(4)
        nu = close(Z4, [(0, 2)])
        assert nu.class_of == (0, 1, 0, 1)
        assert nu.is_compatible()

    def test_diagonal_pair_collapses_b2(self, b2):
        """测试 B2 中 e11 ~ e22 生成全同余"""
        nu = close(b2, [(b2.id_of("e11"), b2.id_of("e22"))])
        assert nu.is_full()

    @settings(max_examples=30, deadline=None)
    @given(st.data())
    def test_close_is_idempotent_and_monotone(self, data):
        """测试 close(close(P)) = close(P)，且 P ⊆ Q 时 close(P) ⊆ close(Q)"""
        S = data.draw(random_semigroups())
        pair = st.tuples(st.integers(0, S.order - 1), st.integers(0, S.order - 1))
        P = data.draw(st.lists(pair, max_size=4))
        extra = data.draw(st.lists(pair, max_size=3))

        nu = close(S, P)
        assert nu.is_compatible()
        assert close(S, pairs_of(nu)) == nu
        assert nu.refines(close(S, P + extra))
        assert close(S, pairs_of(nu) + extra) == close(S, P + extra)

    def test_join(self):
        """测试同余的并"""
        Z4 = cyclic_group(4)
        nu = join(Congruence.identity(Z4), close(Z4, [(0, 2)]))
        assert nu.num_classes == 2

    def test_meet_and_refines(self):
        """测试交与加细"""
        Z4 = cyclic_group(4)
        mod2 = close(Z4, [(0, 2)])
        assert Congruence.identity(Z4).refines(mod2)
        assert not mod2.refines(Congruence.identity(Z4))
        assert mod2.meet(Congruence.full(Z4)) == mod2


class TestQuotient:
    """商半群与核测试"""

    def test_quotient_z4(self):
        """测试 Z4 / mod2 ≅ Z2"""
        Z4 = cyclic_group(4)
        Q, q = quotient(Z4, close(Z4, [(0, 2)]))
        assert Q.order == 2
        assert Q.is_group()
        assert q(1) == q(3)

    def test_kernel(self, b2):
        """测试 ker(恒等) = E(S)，ker(全) = S"""
        assert kernel(b2, Congruence.identity(b2)) == frozenset(b2.idempotents())
        assert kernel(b2, Congruence.full(b2)) == frozenset(b2.elements())

    def test_describe(self):
        """测试按元素名列出同余类"""
        Z4 = cyclic_group(4)
        assert close(Z4, [(0, 2)]).describe() == [["0", "2"], ["1", "3"]]


class TestIdempotentCongruence:
    """E(S) 上的正规同余测试"""

    def test_identity_and_full_are_normal(self, b2):
        """测试恒等与全同余是正规的"""
        assert is_normal_on_idempotents(b2, IdempotentCongruence.identity(b2))
        assert is_normal_on_idempotents(b2, IdempotentCongruence.full(b2))

    def test_not_normal(self, b2):
        """测试 {0, e11} {e22} 不是正规的"""
        rho = IdempotentCongruence.from_labels(b2, {0: "a", 1: "a", 4: "b"})
        assert rho.is_congruence()
        assert not is_normal_on_idempotents(b2, rho)
        with pytest.raises(NotNormalError):
            nu_min(b2, rho)

    def test_cls_requires_idempotent(self, b2):
        """测试非幂等元没有 ρ-类"""
        with pytest.raises(NotIdempotentError):
            IdempotentCongruence.identity(b2).cls(2)

    def test_enumerate_normal_congruences(self, b2):
        """测试 B2 恰有两个正规同余"""
        rhos = enumerate_normal_congruences(b2)
        assert len(rhos) == 2
        assert IdempotentCongruence.identity(b2) in rhos
        assert IdempotentCongruence.full(b2) in rhos


class TestNuMin:
    """ν_{ρ,min} 测试"""

    def test_restriction_equals_rho(self, sim2):
        """测试 ν_min 在 E(S) 上的限制等于 ρ"""
        for rho in enumerate_normal_congruences(sim2):
            assert nu_min(sim2, rho).restrict_to_idempotents() == rho

    def test_full_rho_gives_group_image(self, b2, s3):
        """测试 ρ 取全同余时商为群"""
        Q, _ = maximal_group_image(b2)
        assert Q.order == 1
        Q, _ = maximal_group_image(s3)
        assert Q.order == 6

    def test_identity_rho_on_clifford(self, z2_times_two):
        """测试 Clifford 半群上 ρ = 恒等时 ν_min 为恒等"""
        nu = nu_min(z2_times_two, IdempotentCongruence.identity(z2_times_two))
        assert nu.is_identity()

    def test_minimality(self, load):
        """测试 ν_min 包含于每个限制为 ρ 的同余"""
        S = load("b2_monoid.json").semigroup
        for nu in enumerate_congruences(S):
            rho = nu.restrict_to_idempotents()
            if is_normal_on_idempotents(S, rho):
                assert nu_min(S, rho).refines(nu)


class TestLeastCongruences:
    """最小 Clifford 与交换同余测试"""

    def test_least_clifford_b2(self, b2):
        """测试 B2 的最小 Clifford 同余为全同余"""
        assert least_clifford(b2).is_full()

    def test_least_clifford_of_clifford_is_identity(self, s3, z2_times_two):
        """测试 Clifford 半群上最小 Clifford 同余为恒等"""
        assert least_clifford(s3).is_identity()
        assert least_clifford(z2_times_two).is_identity()

    def test_least_clifford_matches_oracle(self, b2, sim2, load):
        """测试与生成对 (s*s, ss*) 的闭包一致"""
        for S in (b2, sim2, load("b2_monoid.json").semigroup):
            assert least_clifford(S) == least_clifford_oracle(S)

    def test_least_commutative_s3(self, s3):
        """测试 S3 的交换化为 Z2"""
        nu = least_commutative(s3)
        assert nu.num_classes == 2
        assert nu.related(s3.id_of("[0,1,2]"), s3.id_of("[1,2,0]"))
        assert not nu.related(s3.id_of("[0,1,2]"), s3.id_of("[1,0,2]"))

    def test_least_commutative_matches_oracle(self, s3, b2):
        """测试与到 Z_k ∪ {0} 的同态所给分类一致"""
        for S in (s3, b2):
            assert least_commutative(S) == nu_ab_oracle(S, S.order)

    def test_least_congruences_match_enumeration(self, corpus_dir):
        """测试 |S| ≤ 6 时与全部同余枚举的结果一致"""
        small = [S for S in finite_corpus(corpus_dir) if S.order <= 6]
        assert small
        for S in small:
            assert least_clifford(S) == least_clifford_by_enumeration(S)
            assert least_commutative(S) == least_commutative_by_enumeration(S)

    def test_least_clifford_refines_least_commutative(self, corpus_dir):
        """测试内置语料上最小 Clifford 同余包含于最小交换同余"""
        for S in finite_corpus(corpus_dir):
            assert least_clifford(S).refines(least_commutative(S))

    def test_sign_factors_through_abelianization(self, s3):
        """测试符号同态经交换化分解"""
        Z2 = cyclic_group(2)
        homs = [SemigroupHom(s3, Z2, h) for h in enumerate_homs(s3, Z2)]
        assert len(homs) == 2
        assert all(factors_through(least_commutative(s3), h) for h in homs)


class TestEnumeration:
    """同余枚举测试"""

    def test_z4_congruences(self):
        """测试 Z4 的同余对应三个子群"""
        congruences = enumerate_congruences(cyclic_group(4))
        assert sorted(c.num_classes for c in congruences) == [1, 2, 4]

    def test_all_compatible(self, b2):
        """测试枚举结果都是同余"""
        assert all(c.is_compatible() for c in enumerate_congruences(b2))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
