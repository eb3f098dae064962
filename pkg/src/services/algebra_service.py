"""
代数计算服务
命令行与 HTTP 接口共用的门面：inspect、congruence、groupoid、verify
"""
import time
from typing import List, Optional, Sequence, Tuple

from ..core import get_logger, get_settings, Settings, ParseError, UnknownCongruenceError
from ..algebra.semigroup import FiniteInverseSemigroup
from ..algebra.congruence import (
    Congruence, IdempotentCongruence, close, quotient, kernel, least_clifford, least_commutative, nu_min
)
from ..algebra.spectrum import (
    enumerate_characters, fixed_characters, homs_to_two, set_from_rho
)
from ..algebra.groupoid import (
    FiniteGroupoid, universal_groupoid, restrict, g_fix, quotient_groupoid, pullback_selection
)
from ..algebra.presented.fcis import fcis_characters
from ..algebra.presented.cuntz import cuntz_homs_to_two
from ..models import (
    CorpusFile, PresentedFamily, SemigroupSummary, CongruenceSummary, GroupoidDump,
    TheoremReport, TheoremTag, Verdict
)
from .codec import semigroup_to_table, groupoid_to_dump
from .corpus_reader import LoadedCorpus, load_corpus, resolve_pairs
from .theorem_verifier import TheoremVerifier

logger = get_logger()

CONGRUENCE_CHOICES = ("least-clifford", "least-abelian", "max-group", "from-pairs <name>")


def normalize_which(which: str) -> str:
    """把 from-pairs <name> 统一为 from-pairs:<name>"""
    parts = which.split()
    if len(parts) == 2 and parts[0] == "from-pairs":
        return f"from-pairs:{parts[1]}"
    return " ".join(parts)


class AlgebraService:
    """逆半群计算服务"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()
        self.start_time = time.time()
        self.requests = 0
        logger.info("代数计算服务初始化完成")

    def _finite(self, entry: LoadedCorpus, operation: str) -> FiniteInverseSemigroup:
        if entry.semigroup is None:
            raise ParseError(
                f"{entry.name} 是范式表示的无限半群，不支持 {operation}",
                details={"semigroup": entry.name, "operation": operation}
            )
        return entry.semigroup

    def inspect(self, entry: LoadedCorpus) -> SemigroupSummary:
        """阶、幂等元个数、Clifford 性、特征与不动特征个数、到 {0,1} 的同态个数"""
        self.requests += 1
        spec = entry.spec
        if entry.semigroup is None:
            return self._inspect_presented(spec)

        S = entry.semigroup
        chars = enumerate_characters(S)
        fixed = fixed_characters(S)
        summary = SemigroupSummary(
            name=S.name,
            kind=spec.kind,
            order=S.order,
            idempotent_count=len(S.idempotents()),
            is_clifford=S.is_clifford(),
            zero=S.name_of(S.zero) if S.zero is not None else None,
            one=S.name_of(S.one) if S.one is not None else None,
            character_count=len(chars),
            fixed_character_count=len(fixed),
            hom_to_two_count=len(homs_to_two(S)),
            characters=chars.names(),
            fixed_characters=fixed.names()
        )
        logger.info(f"inspect 完成: {S.name}", extra={"semigroup": S.name, "order": S.order})
        return summary

    def _inspect_presented(self, spec: CorpusFile) -> SemigroupSummary:
        presented = spec.presented
        if presented.family == PresentedFamily.FCIS:
            chars = fcis_characters(presented.alphabet)
            names = ["χ_{" + ",".join(sorted(A)) + "}" for A in chars]
            # 每个 χ_A 延拓为同态 (C, w) ↦ [C ⊆ A]
            return SemigroupSummary(
                name=spec.name,
                kind=spec.kind,
                is_clifford=True,
                character_count=len(chars),
                fixed_character_count=len(chars),
                hom_to_two_count=len(chars),
                characters=names,
                fixed_characters=names
            )

        count = cuntz_homs_to_two(presented.n, self.settings.cuntz_max_length)
        return SemigroupSummary(
            name=spec.name,
            kind=spec.kind,
            is_clifford=False,
            zero="0",
            one="1",
            hom_to_two_count=count
        )

    def resolve_congruence(self, entry: LoadedCorpus, which: str) -> Congruence:
        S = self._finite(entry, "congruence")
        which = normalize_which(which)
        if which == "least-clifford":
            return least_clifford(S)
        if which == "least-abelian":
            return least_commutative(S)
        if which == "max-group":
            return nu_min(S, IdempotentCongruence.full(S))
        if which.startswith("from-pairs:"):
            return close(S, resolve_pairs(S, entry.spec, which.split(":", 1)[1]))
        raise UnknownCongruenceError(
            f"未知的同余: {which!r}",
            details={"which": which, "choices": list(CONGRUENCE_CHOICES)}
        )

    def congruence(self, entry: LoadedCorpus, which: str, emit_quotient: bool = False) -> CongruenceSummary:
        self.requests += 1
        nu = self.resolve_congruence(entry, which)
        Q, _ = quotient(entry.semigroup, nu)
        return CongruenceSummary(
            semigroup=entry.name,
            which=normalize_which(which),
            classes=nu.describe(),
            quotient_order=Q.order,
            quotient_is_clifford=Q.is_clifford(),
            quotient_is_commutative=Q.is_commutative(),
            quotient=semigroup_to_table(Q) if emit_quotient else None
        )

    def groupoid(
        self,
        entry: LoadedCorpus,
        restrict_to: Optional[str] = None,
        quotient_by: Optional[str] = None
    ) -> GroupoidDump:
        """G_u(S)，可选限制到 fix 或 F_{ρ}，可选再商去 G_u(ker ν) 的限制"""
        self.requests += 1
        S = self._finite(entry, "groupoid")
        G = universal_groupoid(S)
        current: FiniteGroupoid = G

        if restrict_to == "fix":
            current = g_fix(G)
        elif restrict_to and restrict_to.startswith("rho:"):
            nu = close(S, resolve_pairs(S, entry.spec, restrict_to.split(":", 1)[1]))
            F = set_from_rho(S, nu.restrict_to_idempotents())
            current = restrict(G, G.units_for(F), name=f"{G.name}_Fρ")
        elif restrict_to:
            raise ParseError(
                f"未知的限制方式: {restrict_to!r}",
                details={"field": "restrict", "choices": ["fix", "rho:<name>"]}
            )

        if quotient_by and quotient_by.startswith("kernel:"):
            nu = close(S, resolve_pairs(S, entry.spec, quotient_by.split(":", 1)[1]))
            if current is G:
                F = set_from_rho(S, nu.restrict_to_idempotents())
                current = restrict(G, G.units_for(F), name=f"{G.name}_Fν")
            selection = pullback_selection(current, G.germs_of(kernel(S, nu)))
            current, _ = quotient_groupoid(current, selection)
        elif quotient_by:
            raise ParseError(
                f"未知的商方式: {quotient_by!r}",
                details={"field": "quotient", "choices": ["kernel:<name>"]}
            )

        return groupoid_to_dump(current)

    def verify(
        self,
        entries: Sequence[LoadedCorpus],
        theorems: Optional[Sequence[TheoremTag]] = None,
        budget: Optional[int] = None
    ) -> Tuple[bool, List[TheoremReport]]:
        self.requests += 1
        verifier = TheoremVerifier(self.settings, budget)
        reports = verifier.verify_corpus(entries, theorems)
        return all(r.verdict == Verdict.VERIFIED for r in reports), reports

    def load(self, spec: CorpusFile) -> LoadedCorpus:
        return load_corpus(spec)

    async def health_check(self) -> dict:
        return {
            "status": "healthy",
            "version": self.settings.app_version,
            "uptime_seconds": int(time.time() - self.start_time),
            "components": {
                "algebra_service": {"requests": self.requests},
                "settings": {
                    "budget": self.settings.budget,
                    "max_enumerated_idempotents": self.settings.max_enumerated_idempotents,
                },
            },
        }
