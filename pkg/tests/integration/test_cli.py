"""
集成测试 - 命令行接口
"""
import json

import pytest
import sys
import os

project_root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
sys.path.insert(0, project_root)

from src.cli import main, build_parser, EXIT_OK, EXIT_NOT_VERIFIED, EXIT_ERROR
from src.core import get_settings


class TestParser:
    """参数解析测试"""

    def test_subcommand_required(self):
        """测试缺少子命令时退出"""
        with pytest.raises(SystemExit):
            build_parser().parse_args([])

    def test_theorem_repeatable(self):
        """测试 --theorem 可重复"""
        args = build_parser().parse_args(["verify", "--theorem", "main", "--theorem", "cuntz"])
        assert args.theorem == ["main", "cuntz"]
        assert args.path is None

    def test_which_accepts_two_tokens(self):
        """测试 --which 可以写成 from-pairs <name>"""
        args = build_parser().parse_args(["congruence", "x.json", "--which", "from-pairs", "mod2"])
        assert args.which == ["from-pairs", "mod2"]


class TestInspect:
    """gf inspect 测试"""

    def test_json(self, capsys):
        """测试 JSON 输出"""
        assert main(["inspect", "data/corpus/b2.json", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["name"] == "B2"
        assert data["order"] == 5
        assert data["zero"] == "0"
        assert data["one"] is None
        assert data["fixed_characters"] == ["0"]

    def test_text(self, capsys):
        """测试文本输出"""
        assert main(["inspect", "data/corpus/z2_times_two.json"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("Z2×{0,1} (table)")
        assert "clifford: True" in out

    def test_cuntz(self, capsys):
        """测试 Cuntz 语料只给出同态个数"""
        assert main(["inspect", "data/corpus/cuntz2.json", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["hom_to_two_count"] == 1
        assert data["is_clifford"] is False

    def test_missing_file(self, capsys):
        """测试文件不存在时退出码为 2"""
        assert main(["inspect", "data/corpus/none.json"]) == EXIT_ERROR
        assert "PARSE_ERROR" in capsys.readouterr().err

    def test_error_as_json(self, capsys):
        """测试 JSON 模式下错误写到标准输出"""
        assert main(["inspect", "data/corpus/none.json", "--format", "json"]) == EXIT_ERROR
        data = json.loads(capsys.readouterr().out)
        assert data["success"] is False
        assert data["error_code"] == "PARSE_ERROR"


class TestCongruence:
    """gf congruence 测试"""

    def test_least_abelian(self, capsys):
        """测试 S3 的最小交换同余"""
        assert main(["congruence", "data/corpus/s3.json", "--which", "least-abelian", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert len(data["classes"]) == 2
        assert data["quotient"] is None

    def test_from_pairs_with_quotient(self, capsys):
        """测试命名生成对与商乘法表"""
        argv = ["congruence", "data/corpus/z4.json", "--which", "from-pairs:mod2", "--emit-quotient"]
        assert main(argv) == EXIT_OK
        out = capsys.readouterr().out
        assert "Z4 / from-pairs:mod2: 2 个类" in out
        assert "quotient order: 2" in out

    def test_from_pairs_as_two_tokens(self, capsys):
        """测试 --which from-pairs <name> 与冒号写法等价"""
        argv = ["congruence", "data/corpus/z4.json", "--which", "from-pairs", "mod2", "--format", "json"]
        assert main(argv) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["which"] == "from-pairs:mod2"
        assert len(data["classes"]) == 2

    def test_unknown_which(self, capsys):
        """测试未知的同余种类"""
        assert main(["congruence", "data/corpus/z4.json", "--which", "smallest"]) == EXIT_ERROR
        assert "UNKNOWN_CONGRUENCE" in capsys.readouterr().err

    def test_presented_not_supported(self, capsys):
        """测试范式表示语料不支持同余计算"""
        assert main(["congruence", "data/corpus/fcis_xy.json", "--which", "least-clifford"]) == EXIT_ERROR


class TestGroupoid:
    """gf groupoid 测试"""

    def test_summary(self, capsys):
        """测试泛群胚概要"""
        assert main(["groupoid", "data/corpus/b2.json", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["name"] == "G_u(B2)"
        assert data["summary"]["arrow_count"] == 5
        assert "arrows" not in data

    def test_restrict_fix(self, capsys):
        """测试限制到不动单位"""
        argv = ["groupoid", "data/corpus/b2.json", "--restrict", "fix", "--emit-groupoid", "--format", "json"]
        assert main(argv) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert len(data["arrows"]) == 1
        assert data["arrows"][0]["is_unit"] is True

    def test_quotient_by_kernel(self, capsys):
        """测试商去核芽子群胚"""
        argv = ["groupoid", "data/corpus/s3.json", "--quotient", "kernel:a3", "--format", "json"]
        assert main(argv) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["summary"]["arrow_count"] == 2

    def test_bad_restrict(self, capsys):
        """测试未知的限制方式"""
        assert main(["groupoid", "data/corpus/b2.json", "--restrict", "orbit"]) == EXIT_ERROR


class TestVerify:
    """gf verify 测试"""

    def test_single_file(self, capsys):
        """测试单个语料的全部定理"""
        assert main(["verify", "data/corpus/b2.json"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.rstrip().endswith("verified")
        assert "refuted" not in out

    def test_json_reports(self, capsys):
        """测试 JSON 报告"""
        argv = ["verify", "data/corpus/z4.json", "--theorem", "main", "--format", "json"]
        assert main(argv) == EXIT_OK
        reports = json.loads(capsys.readouterr().out)
        assert len(reports) == 5
        assert {r["verdict"] for r in reports} == {"verified"}

    def test_budget_exceeded_exit_code(self, capsys):
        """测试预算耗尽时退出码为 1"""
        argv = ["verify", "data/corpus/s3.json", "--theorem", "main", "--budget", "1"]
        assert main(argv) == EXIT_NOT_VERIFIED
        assert "budget_exceeded" in capsys.readouterr().out
        assert get_settings().budget == 1

    def test_builtin_corpus_presented(self, capsys):
        """测试默认内置语料上的 FCIS 与 Cuntz 校验"""
        argv = ["verify", "--theorem", "fcis", "--theorem", "cuntz", "--format", "json"]
        assert main(argv) == EXIT_OK
        reports = json.loads(capsys.readouterr().out)
        assert [r["theorem"] for r in reports] == ["fcis", "cuntz"]

    def test_builtin_corpus_all(self, capsys):
        """测试默认内置语料全部通过"""
        assert main(["verify"]) == EXIT_OK
        assert "refuted" not in capsys.readouterr().out


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
