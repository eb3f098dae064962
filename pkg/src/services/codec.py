"""
JSON 编解码：半群乘法表、群胚稀疏复合表
"""
from typing import Any, Dict

from ..algebra.semigroup import FiniteInverseSemigroup
from ..algebra.groupoid import FiniteGroupoid, UNDEFINED, fixed_units
from ..models import SemigroupTable, GroupoidDump, ArrowItem


def semigroup_to_table(S: FiniteInverseSemigroup) -> SemigroupTable:
    return SemigroupTable(
        name=S.name,
        elements=list(S.element_names),
        table=S.table.tolist(),
        inverse=list(S.inverse)
    )


def groupoid_summary(G: FiniteGroupoid) -> Dict[str, Any]:
    return {
        "arrow_count": len(G),
        "unit_count": len(G.units),
        "orbit_sizes": sorted((len(o) for o in G.orbits()), reverse=True),
        "fixed_units": sorted(G.labels[x] for x in fixed_units(G)),
        "is_group_bundle": G.is_group_bundle(),
    }


def groupoid_to_dump(G: FiniteGroupoid) -> GroupoidDump:
    arrows = [
        ArrowItem(
            id=a,
            label=G.labels[a],
            is_unit=G.is_unit(a),
            source=G.source[a],
            range=G.range[a],
            inverse=G.inv(a)
        )
        for a in G.arrows()
    ]
    compositions = [(a, b, G.compose(a, b)) for a, b in G.composable_pairs()]
    return GroupoidDump(name=G.name, arrows=arrows, compositions=compositions, summary=groupoid_summary(G))


def groupoid_from_dump(dump: GroupoidDump) -> FiniteGroupoid:
    m = len(dump.arrows)
    table = [[UNDEFINED] * m for _ in range(m)]
    for a, b, c in dump.compositions:
        table[a][b] = c
    arrows = sorted(dump.arrows, key=lambda item: item.id)
    return FiniteGroupoid(
        labels=[item.label for item in arrows],
        units=[item.id for item in arrows if item.is_unit],
        source=[item.source for item in arrows],
        range_=[item.range for item in arrows],
        compose=table,
        invert=[item.inverse for item in arrows],
        name=dump.name
    )
