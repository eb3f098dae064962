"""
单元测试 - 特征谱与不变集
"""
import pytest

import sys
import os
project_root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
sys.path.insert(0, project_root)

from src.core import NotIdempotentError, OutsideDomainError, NotInvariantError, ConfigurationError
from src.algebra.semigroup import cyclic_group, symmetric_inverse_monoid
from src.algebra.congruence import Congruence, IdempotentCongruence, least_clifford
from src.algebra.spectrum import (
    Character, CharacterSet, evaluate, enumerate_characters, constant_one,
    bruteforce_character_supports, character_from_support, spectral_action, is_fixed,
    fixed_characters, extend_to_hom, homs_to_two, character_product, classify_set,
    rho_from_set, set_from_rho, pullback_characters, enumerate_invariant_sets, separates
)


class TestCharacters:
    """特征测试"""

    def test_b2_characters(self, b2):
        """测试 B2 有三个特征"""
        chars = enumerate_characters(b2)
        assert len(chars) == 3
        assert chars.names() == ["0", "e11", "e22"]

    def test_group_has_single_character(self, s3):
        """测试群只有常值 1 特征"""
        assert len(enumerate_characters(s3)) == 1
        assert constant_one(s3).base == s3.one

    def test_evaluate(self, b2):
        """测试 ξ_e(f) = [f ≥ e]"""
        xi = Character(b2, b2.id_of("e11"))
        assert evaluate(xi, b2.id_of("e11")) == 1
        assert evaluate(xi, b2.id_of("e22")) == 0
        assert xi(0) == 0
        assert constant_one(b2)(b2.id_of("e22")) == 1

    def test_evaluate_non_idempotent(self, b2):
        """测试特征只在幂等元上取值"""
        with pytest.raises(NotIdempotentError):
            evaluate(constant_one(b2), b2.id_of("e12"))

    def test_base_must_be_idempotent(self, b2):
        """测试基点必须是幂等元"""
        with pytest.raises(NotIdempotentError):
            Character(b2, b2.id_of("e12"))

    def test_bruteforce_agrees(self, b2, sim2):
        """测试暴力枚举的特征与 up(e) 表示一致"""
        for S in (b2, sim2):
            supports = sorted(sorted(x) for x in bruteforce_character_supports(S))
            expected = sorted(sorted(xi.support()) for xi in enumerate_characters(S))
            assert supports == expected

    def test_bruteforce_limit(self):
        """测试暴力枚举超过上限时报错"""
        with pytest.raises(ConfigurationError):
            bruteforce_character_supports(symmetric_inverse_monoid(3), limit=4)

    def test_character_product(self, b2):
        """测试逐点乘积"""
        xi11 = Character(b2, b2.id_of("e11"))
        xi22 = Character(b2, b2.id_of("e22"))
        assert character_product(xi11, xi22) is None
        assert character_product(constant_one(b2), xi11) == xi11

    def test_character_from_support(self, b2):
        """测试由主滤子恢复特征"""
        xi = character_from_support(b2, [b2.id_of("e22")])
        assert xi.name == "ξ_e22"


class TestSpectralAction:
    """谱作用测试"""

    def test_action_moves_base(self, b2):
        """测试 β_{e21}(ξ_e11) = ξ_e22"""
        e21 = b2.id_of("e21")
        moved = spectral_action(b2, e21, Character(b2, b2.id_of("e11")))
        assert moved.name == "ξ_e22"

    def test_outside_domain(self, b2):
        """测试 ξ(s*s) = 0 时不在定义域内"""
        with pytest.raises(OutsideDomainError):
            spectral_action(b2, b2.id_of("e21"), Character(b2, b2.id_of("e22")))

    def test_fixed_characters_b2(self, b2):
        """测试 B2 只有常值 1 特征是不动的"""
        fixed = fixed_characters(b2)
        assert fixed.names() == ["0"]
        assert not is_fixed(b2, Character(b2, b2.id_of("e11")))

    def test_clifford_all_fixed(self, z2_times_two):
        """测试 Clifford 半群的全部特征都不动"""
        assert fixed_characters(z2_times_two) == enumerate_characters(z2_times_two)

    def test_non_clifford_has_moved_character(self, sim2):
        """测试非 Clifford 半群存在被移动的特征"""
        assert fixed_characters(sim2) != enumerate_characters(sim2)
        assert len(fixed_characters(sim2)) == 2


class TestHomsToTwo:
    """到 {0,1} 的同态测试"""

    def test_count_equals_fixed(self, b2, sim2, z2_times_two):
        """测试非零同态个数等于不动特征个数"""
        for S in (b2, sim2, z2_times_two):
            assert len(homs_to_two(S)) == len(fixed_characters(S))

    def test_extension(self, z2_times_two):
        """测试不动特征延拓为 s ↦ ξ(s*s)"""
        xi = Character(z2_times_two, z2_times_two.id_of("(0,1)"))
        h = extend_to_hom(z2_times_two, xi)
        assert h.map == (0, 1, 0, 1)


class TestInvariantSets:
    """不变集与 ρ ↔ F 对应测试"""

    def test_classify(self, b2):
        """测试集合分类"""
        flags = classify_set(b2, CharacterSet(b2, frozenset({0, 1})))
        assert flags.unital and flags.multiplicative
        assert not flags.invariant
        assert not flags.admissible
        assert classify_set(b2, enumerate_characters(b2)).admissible

    def test_rho_from_set(self, b2):
        """测试 ρ_{fix} 为全同余"""
        assert rho_from_set(b2, fixed_characters(b2)) == IdempotentCongruence.full(b2)
        assert rho_from_set(b2, enumerate_characters(b2)) == IdempotentCongruence.identity(b2)

    def test_rho_from_non_invariant_set(self, b2):
        """测试非不变集被拒绝"""
        with pytest.raises(NotInvariantError):
            rho_from_set(b2, CharacterSet(b2, frozenset({0, 1})))

    def test_set_from_rho(self, b2):
        """测试 F_ρ"""
        assert set_from_rho(b2, IdempotentCongruence.identity(b2)) == enumerate_characters(b2)
        assert set_from_rho(b2, IdempotentCongruence.full(b2)).names() == ["0"]

    def test_pullback_matches(self, b2, s3):
        """测试 F_ν 与商上特征的拉回一致"""
        for S in (b2, s3):
            for nu in (Congruence.identity(S), Congruence.full(S), least_clifford(S)):
                assert set_from_rho(S, nu.restrict_to_idempotents()) == pullback_characters(S, nu)

    def test_enumerate_invariant_sets(self, b2):
        """测试 B2 恰有两个单位乘法不变集"""
        sets = enumerate_invariant_sets(b2)
        assert len(sets) == 2
        assert fixed_characters(b2) in sets
        assert enumerate_characters(b2) in sets

    def test_enumeration_limit(self):
        """测试子集枚举超过上限时报错"""
        with pytest.raises(ConfigurationError):
            enumerate_invariant_sets(symmetric_inverse_monoid(3), limit=4)

    def test_separates(self, b2):
        """测试只有全体特征区分 E(B2)"""
        assert separates(b2, enumerate_characters(b2))
        assert not separates(b2, fixed_characters(b2))

    def test_group_single_set(self):
        """测试群上唯一的不变集"""
        Z3 = cyclic_group(3)
        assert len(enumerate_invariant_sets(Z3)) == 1


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
