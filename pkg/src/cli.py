"""
命令行入口
gf inspect | congruence | groupoid | verify
"""
import argparse
import json
import sys
from typing import Any, List, Optional, Sequence

from pydantic import BaseModel

from .core import get_logger, override_settings, set_log_level, GfBaseException
from .models import OutputFormat, TheoremReport, TheoremTag, Verdict, SemigroupSummary, CongruenceSummary, GroupoidDump
from .services import AlgebraService, CorpusReader, collect_corpus, load_corpus_path
from .services.algebra_service import CONGRUENCE_CHOICES

logger = get_logger()

EXIT_OK = 0
EXIT_NOT_VERIFIED = 1
EXIT_ERROR = 2

THEOREM_CHOICES = [tag.value for tag in TheoremTag] + ["all"]


def build_parser() -> argparse.ArgumentParser:
    """解析命令行参数"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, help="同构搜索节点上限 (默认: GF_BUDGET 或 10^7)")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value,
                        help="输出格式 (默认: text)")
    common.add_argument("--seed", type=int, help="随机词采样种子")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="日志级别")

    parser = argparse.ArgumentParser(
        prog="gf",
        description="有限逆半群、同余、特征谱与泛群胚的计算与定理校验",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
示例用法:
  gf inspect data/corpus/b2.json
  gf congruence data/corpus/s3.json --which least-abelian --emit-quotient
  gf congruence data/corpus/z4.json --which from-pairs mod2
  gf groupoid data/corpus/b2.json --restrict fix --emit-groupoid
  gf verify data/corpus --theorem main --format json
        """
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    inspect = subparsers.add_parser("inspect", parents=[common], help="半群概要")
    inspect.add_argument("file", help="语料文件")

    congruence = subparsers.add_parser("congruence", parents=[common], help="计算同余与商")
    congruence.add_argument("file", help="语料文件")
    congruence.add_argument("--which", required=True, nargs="+", help=" | ".join(CONGRUENCE_CHOICES))
    congruence.add_argument("--emit-quotient", action="store_true", help="输出商半群乘法表")

    groupoid = subparsers.add_parser("groupoid", parents=[common], help="构造泛群胚")
    groupoid.add_argument("file", help="语料文件")
    groupoid.add_argument("--restrict", dest="restrict_to", help="fix | rho:<name>")
    groupoid.add_argument("--quotient", dest="quotient_by", help="kernel:<name>")
    groupoid.add_argument("--emit-groupoid", action="store_true", help="输出完整的箭头与复合表")

    verify = subparsers.add_parser("verify", parents=[common], help="校验同构定理")
    verify.add_argument("path", nargs="?", help="语料文件或目录 (默认: 内置语料)")
    verify.add_argument("--theorem", action="append", choices=THEOREM_CHOICES,
                        help="要校验的定理，可重复 (默认: all)")

    return parser


def _selected_theorems(values: Optional[Sequence[str]]) -> Optional[List[TheoremTag]]:
    if not values or "all" in values:
        return None
    return [TheoremTag(v) for v in values]


def _dump(payload: Any) -> str:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    elif isinstance(payload, list):
        payload = [p.model_dump(mode="json") if isinstance(p, BaseModel) else p for p in payload]
    return json.dumps(payload, ensure_ascii=False, indent=2, default=str)


def format_summary(summary: SemigroupSummary) -> str:
    lines = [f"{summary.name} ({summary.kind.value})"]
    fields = [
        ("order", summary.order),
        ("idempotents", summary.idempotent_count),
        ("clifford", summary.is_clifford),
        ("zero", summary.zero),
        ("one", summary.one),
        ("characters", summary.character_count),
        ("fixed characters", summary.fixed_character_count),
        ("homs to {0,1}", summary.hom_to_two_count),
    ]
    lines += [f"  {key}: {value}" for key, value in fields if value is not None]
    if summary.fixed_characters:
        lines.append(f"  fixed: {', '.join(summary.fixed_characters)}")
    return "\n".join(lines)


def format_congruence(summary: CongruenceSummary) -> str:
    lines = [f"{summary.semigroup} / {summary.which}: {len(summary.classes)} 个类"]
    lines += ["  {" + ", ".join(cls) + "}" for cls in summary.classes]
    lines.append(
        f"  quotient order: {summary.quotient_order}, "
        f"clifford: {summary.quotient_is_clifford}, commutative: {summary.quotient_is_commutative}"
    )
    if summary.quotient is not None:
        names = summary.quotient.elements
        lines.append("  " + "\t".join(["·"] + names))
        for name, row in zip(names, summary.quotient.table):
            lines.append("  " + "\t".join([name] + [names[x] for x in row]))
    return "\n".join(lines)


def format_groupoid(dump: GroupoidDump, full: bool) -> str:
    lines = [dump.name]
    lines += [f"  {key}: {value}" for key, value in dump.summary.items()]
    if full:
        for arrow in dump.arrows:
            marker = "*" if arrow.is_unit else " "
            lines.append(
                f"  {marker}{arrow.id}: {arrow.label}  "
                f"{dump.arrows[arrow.source].label} → {dump.arrows[arrow.range].label}"
            )
    return "\n".join(lines)


def format_reports(reports: Sequence[TheoremReport]) -> str:
    lines = []
    for r in reports:
        congruence = f" [{r.instance.congruence}]" if r.instance.congruence else ""
        line = f"{r.verdict.value:<16}{r.theorem.value:<20}{r.instance.semigroup}{congruence}  ({r.wall_time_ms} ms)"
        if r.refutation:
            line += f"\n{'':<16}{r.refutation}"
        lines.append(line)
    verified = sum(r.verdict == Verdict.VERIFIED for r in reports)
    lines.append(f"{verified}/{len(reports)} verified")
    return "\n".join(lines)


def run(args: argparse.Namespace) -> int:
    settings = override_settings(budget=args.budget, seed=args.seed, log_level=args.log_level)
    if args.log_level:
        set_log_level(args.log_level)
    as_json = args.format == OutputFormat.JSON.value
    service = AlgebraService(settings)

    if args.command == "inspect":
        summary = service.inspect(load_corpus_path(args.file))
        print(_dump(summary) if as_json else format_summary(summary))
        return EXIT_OK

    if args.command == "congruence":
        summary = service.congruence(load_corpus_path(args.file), " ".join(args.which), args.emit_quotient)
        print(_dump(summary) if as_json else format_congruence(summary))
        return EXIT_OK

    if args.command == "groupoid":
        dump = service.groupoid(load_corpus_path(args.file), args.restrict_to, args.quotient_by)
        if as_json:
            payload = dump if args.emit_groupoid else {"name": dump.name, "summary": dump.summary}
            print(_dump(payload))
        else:
            print(format_groupoid(dump, args.emit_groupoid))
        return EXIT_OK

    entries = collect_corpus(args.path) if args.path else CorpusReader().load_all()
    all_verified, reports = service.verify(entries, _selected_theorems(args.theorem), args.budget)
    print(_dump(reports) if as_json else format_reports(reports))
    return EXIT_OK if all_verified else EXIT_NOT_VERIFIED


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except GfBaseException as e:
        logger.error(f"命令执行失败: {e.message}", extra={"error_code": e.error_code})
        if getattr(args, "format", None) == OutputFormat.JSON.value:
            print(_dump({"success": False, "message": e.message, "error_code": e.error_code, "details": e.details}))
        else:
            print(f"error [{e.error_code}]: {e.message}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
