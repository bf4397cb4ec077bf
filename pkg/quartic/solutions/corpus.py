"""Published solutions embedded as data: both tables and every displayed example."""
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

from quartic.solutions.families import Variant
from quartic.solutions.pipeline import QuarticSolution


class CorpusSource(str, Enum):
    TABLE1 = "table1"
    TABLE2 = "table2"
    SHOWCASE = "showcase"
    K14 = "k14"
    FAMILY_WITNESS = "family_witness"


class Comparison(str, Enum):
    POSITIONAL = "positional"
    MULTISET = "multiset"


@dataclass(frozen=True)
class CorpusRow:
    source: CorpusSource
    solution: QuarticSolution
    mode: Comparison = Comparison.POSITIONAL
    config_id: Optional[str] = None

    @property
    def label(self) -> str:
        return f"{self.source.value} {self.solution.variant.value} k={self.solution.k}"

    def matches(self, candidate: QuarticSolution) -> bool:
        if self.mode is Comparison.MULTISET:
            return self.solution.same_multiset(candidate)
        return self.solution == candidate


def _sol(variant: Variant, k: int, values: Sequence[int]) -> QuarticSolution:
    """values = terms..., f, g"""
    return QuarticSolution(variant, k, tuple(values[:-2]), values[-2], values[-1])


_THREE = Variant.THREE_PLUS
_FIVE = Variant.FIVE_PLUS

TABLE1 = {
    1: (30, 120, 272, 315, 353),
    2: (49, 280, 1200, 140, 1201),
    3: (2, 4, 7, 6, 9),
    4: (34, 10, 5, 14, 35),
    5: (69, 40, 40, 94, 143),
    6: (455, 280, 142, 170, 483),
    7: (4, 4, 1, 2, 5),
    8: (3, 2, 2, 22, 37),
    9: (15, 14, 6, 34, 59),
}

TABLE2 = {
    1: (6, 8, 18, 31, 32, 34, 43),
    2: (2, 6, 8, 13, 20, 4, 21),
    3: (4, 5, 6, 8, 10, 8, 13),
    4: (10, 12, 14, 15, 20, 2, 23),
    5: (3, 4, 6, 8, 14, 6, 15),
    6: (1, 8, 12, 14, 16, 4, 19),
    7: (2, 10, 18, 19, 24, 28, 47),
    8: (4, 5, 8, 10, 18, 6, 19),
    9: (8, 18, 27, 42, 48, 10, 55),
}

# (variant, k, values, comparison); rows reproduced from registry seeds
_SHOWCASE = [
    (_FIVE, 1, (26979, 24378, 221996, 198628, 128524, 11684, 255463), Comparison.POSITIONAL),
    (_FIVE, 2, (315, 560, 924, 396, 264, 132, 965), Comparison.POSITIONAL),
    (_FIVE, 3, (16, 15, 220, 176, 88, 44, 241), Comparison.POSITIONAL),
    (_FIVE, 4, (10416, 3689, 10360, 4440, 2960, 148, 12439), Comparison.POSITIONAL),
    (
        _FIVE, 5,
        (
            206807355454175, 66669098675328, 133221414581640, 84777263824680, 60555188446200,
            12111037689240, 217287944875297,
        ),
        Comparison.MULTISET,
    ),
    (_FIVE, 6, (1421, 2262, 4144, 3472, 1232, 112, 4663), Comparison.POSITIONAL),
    (_FIVE, 7, (6, 9, 20, 12, 8, 4, 21), Comparison.POSITIONAL),
    (_FIVE, 8, (409346, 17856675, 3529680, 2647260, 1764840, 882420, 17866279), Comparison.MULTISET),
    (
        _FIVE, 9,
        (
            632907528785561577532579698212415075,
            17547363660052143402393127334645814,
            132793539889388930571722711937075840,
            110661283241157442143102259947563200,
            66396769944694465285861355968537920,
            11066128324115744214310225994756320,
            633380905148771673201251847502446439,
        ),
        Comparison.MULTISET,
    ),
    (_THREE, 3, (8, 56, 11, 22, 57), Comparison.POSITIONAL),
    (
        _THREE, 7,
        (
            5129496674953832213892839, 31856062007258755695495000, 15201651200677671668018850,
            323439387248461099319550, 32266397734309870798607161,
        ),
        Comparison.MULTISET,
    ),
    (_THREE, 8, (136268507232, 201049446673, 483363968776, 26291763992, 487694040337), Comparison.MULTISET),
    (_THREE, 9, (414, 115, 264, 132, 439), Comparison.POSITIONAL),
]

# Points of Y^2 = X^3 - 36X and the k=2 (k+3) solutions they give
K2_SHOWCASE = [
    (("12", "36"), (4, 3, 4, 2, 5)),
    (("25/4", "35/8"), (49, 280, 1200, 140, 1201)),
]

FAMILY_WITNESSES = {
    2: (6, 10, 16, 32, 29, 12, 37),
    5: (4, 22, 26, 7, 28, 14, 35),
}


def table_rows() -> List[CorpusRow]:
    rows = [CorpusRow(CorpusSource.TABLE1, _sol(_THREE, k, v)) for k, v in sorted(TABLE1.items())]
    rows += [CorpusRow(CorpusSource.TABLE2, _sol(_FIVE, k, v)) for k, v in sorted(TABLE2.items())]
    return rows


def showcase_rows() -> List[CorpusRow]:
    """Displayed solutions tied to a registry configuration."""
    return [
        CorpusRow(CorpusSource.SHOWCASE, _sol(variant, k, values), mode, f"{variant.value}-k{k}")
        for variant, k, values, mode in _SHOWCASE
    ]


def k2_rows() -> List[CorpusRow]:
    return [
        CorpusRow(CorpusSource.SHOWCASE, _sol(_THREE, 2, values), Comparison.MULTISET, "three_plus-k2-pq")
        for _, values in K2_SHOWCASE
    ]


def witness_rows() -> List[CorpusRow]:
    rows = [CorpusRow(CorpusSource.K14, _sol(_THREE, 14, (4, 11, 15, 1, 16)))]
    rows += [
        CorpusRow(CorpusSource.FAMILY_WITNESS, _sol(_FIVE, k, v), Comparison.MULTISET)
        for k, v in sorted(FAMILY_WITNESSES.items())
    ]
    return rows


def all_rows() -> List[CorpusRow]:
    return table_rows() + showcase_rows() + k2_rows() + witness_rows()


# Weierstrass coefficients (A, B) as printed for each registry configuration
PRINTED_CURVES = {
    "five_plus-k1": (228484, 218430704),
    "five_plus-k2": (4, 16),
    "five_plus-k3": (900, 54000),
    "five_plus-k4": (10404, 2122416),
    "five_plus-k5": (-2209, 0),
    "five_plus-k6": (44997264, 603683293824),
    "five_plus-k7": (144, 3456),
    "five_plus-k8": (5776, 877952),
    "five_plus-k9": (512656, -734123392),
    "three_plus-k3": (784, -43904),
    "three_plus-k7": (-609961, 0),
    "three_plus-k8": (18409008087184, 157970349293290458496),
    "three_plus-k9": (400, -16000),
}
