"""
20 alt model ve her biri icin n'ye bagli 20 parametre durumu

Her alt model bir parametre araligiyla tanimlanir: Laplace'a en yakin
(kalin, haric) uc ve en uzak uc. j. durum p_j = kalin + j (uzak - kalin) / 20.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from services.alternatives.samplers import AlternativeSpec, Model
from shared.utils.statistic_exceptions import UnsupportedN
from shared.utils.study_exceptions import UnknownSubmodel

SAMPLE_SIZES = (20, 50, 100, 200)
CASES_PER_SUBMODEL = 20


class Group(str, Enum):
    SymmetricHeavy = "SymmetricHeavy"
    SymmetricLight = "SymmetricLight"
    Asymmetric = "Asymmetric"


@dataclass(frozen=True)
class _Row:
    """
    Elle aktarilmis tablo satiri

    bold ve far dort elemanli (n = 20, 50, 100, 200) veya tek sayi olur.
    template degisen parametrenin yerine None konmus parametre vektorudur.
    """
    model: Model
    group: Group
    template: Tuple
    bold: object
    far: object

    def endpoints(self, n: int) -> Tuple[float, float]:
        idx = SAMPLE_SIZES.index(n)
        pick = lambda v: v[idx] if isinstance(v, tuple) else v
        return float(pick(self.bold)), float(pick(self.far))


_H, _L, _A = Group.SymmetricHeavy, Group.SymmetricLight, Group.Asymmetric

_ROWS: Dict[str, _Row] = {
    # Simetrik, agir kuyruk
    "GED_heavy": _Row(Model.GED, _H, (None,), 1.0, 0.1),
    "t_heavy": _Row(Model.StudentT, _H, (None,), 3.5, 0.5),
    "MixL_heavy": _Row(Model.MixL, _H, (0.5, 0.0, None), 1.0, (50, 20, 12, 8)),
    "MixN_heavy": _Row(Model.MixN, _H, (0.5, 0.0, None), 3.5, (40, 20, 12, 8)),
    "NIG_heavy": _Row(Model.NIG, _H, (None, 0.0), (0.6, 0.7, 0.7, 0.65), 0.01),
    "Tu_heavy": _Row(Model.Tukey, _H, (None,), (-0.14, -0.14, -0.18, -0.20), (-1.5, -1.5, -1.5, -1.2)),
    # Simetrik, hafif kuyruk
    "GED_light": _Row(Model.GED, _L, (None,), 1.0, (10, 6.2, 4.8, 3)),
    "t_light": _Row(Model.StudentT, _L, (None,), 3.5, (30, 30, 30, 20)),
    "MixL_light": _Row(Model.MixL, _L, (0.5, None, 1.0), 0.0, (12, 6, 4, 3)),
    "MixN_light": _Row(Model.MixN, _L, (0.5, None, 1.0), 0.0, (10, 5, 3, 3)),
    "NIG_light": _Row(Model.NIG, _L, (None, 0.0), 0.7, 10.0),
    "Tu_light": _Row(Model.Tukey, _L, (None,), (-0.14, -0.14, -0.18, -0.16), (1.65, 1.5, 1.5, 0.4)),
    # Asimetrik
    "ALp": _Row(Model.ALp, _A, (None,), 1.0, (5, 3, 2.5, 2)),
    "SkewN": _Row(Model.SkewN, _A, (None,), 0.0, (15, 15, 10, 6)),
    "MixL_asym": _Row(Model.MixL, _A, (0.25, None, 1.0), 0.0, (15, 8, 6, 4)),
    "MixN_asym": _Row(Model.MixN, _A, (0.25, None, 1.0), 0.0, (15, 10, 6, 4)),
    "NIG_asym": _Row(Model.NIG, _A, (0.5, None), 0.0, 0.49),
    "LN": _Row(Model.LogNormal, _A, (None,), 0.1, (3, 2, 2, 2)),
    "G": _Row(Model.Gamma, _A, (None,), (7, 10.5, 15, 15), 0.5),
    "W": _Row(Model.Weibull, _A, (None,), (3, 5, 8, 5), 0.1),
}

SUBMODEL_IDS: List[str] = list(_ROWS)


@dataclass(frozen=True)
class SubmodelGrid:
    """Bir alt modelin verilen n icin 20 durumu (j = 1 Laplace'a en yakin)"""
    submodel_id: str
    n: int
    group: Group
    cases: Tuple[AlternativeSpec, ...]
    param_values: Tuple[float, ...]


def submodel_group(submodel_id: str) -> Group:
    try:
        return _ROWS[submodel_id].group
    except KeyError:
        raise UnknownSubmodel(f"Unknown submodel {submodel_id!r}") from None


def case_values(bold: float, far: float) -> List[float]:
    """Kalin uc haric esit aralikli 20 deger; son deger tam olarak far"""
    step = (far - bold) / CASES_PER_SUBMODEL
    values = [bold + j * step for j in range(1, CASES_PER_SUBMODEL)]
    values.append(far)
    return values


def submodel_grid(submodel_id: str, n: int) -> SubmodelGrid:
    """
    Alt modeli n icin 20 AlternativeSpec'e acar

    Raises:
        UnknownSubmodel: Tanimsiz alt model
        UnsupportedN: n, {20, 50, 100, 200} disinda
    """
    row = _ROWS.get(submodel_id)
    if row is None:
        raise UnknownSubmodel(f"Unknown submodel {submodel_id!r}; known: {', '.join(SUBMODEL_IDS)}")
    if n not in SAMPLE_SIZES:
        raise UnsupportedN(f"submodel {submodel_id}", n)

    bold, far = row.endpoints(n)
    values = case_values(bold, far)
    slot = row.template.index(None)
    cases = []
    for value in values:
        params = list(row.template)
        params[slot] = value
        cases.append(AlternativeSpec(model=row.model, params=tuple(params)))
    return SubmodelGrid(
        submodel_id=submodel_id, n=n, group=row.group,
        cases=tuple(cases), param_values=tuple(values),
    )
