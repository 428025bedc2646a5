"""Two-part distance tariff: a per-ton terminal charge plus a per-ton-km rate."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import NegativeInput, UnknownCategory, ValidationError
from .inventory import DemandProfile

__all__ = ["TariffCategory", "TariffTable", "contract_tonnage", "rail_charge"]


@dataclass(frozen=True)
class TariffCategory:
    """Rates for one commodity category.

    Attributes:
        category_id: Category label.
        p1: Terminal charge, money per ton.
        r2: Distance rate, money per ton-km.
    """

    category_id: str
    p1: float
    r2: float

    def __post_init__(self):
        if not (self.p1 >= 0 and self.r2 >= 0):
            raise ValidationError(f"category {self.category_id}: p1 and r2 must be >= 0")


class TariffTable:
    """Read-only mapping of category id to :class:`TariffCategory`."""

    def __init__(self, categories: Iterable[TariffCategory]):
        table: dict[str, TariffCategory] = {}
        for cat in categories:
            if cat.category_id in table:
                raise ValidationError(f"duplicate tariff category {cat.category_id}")
            table[cat.category_id] = cat
        if not table:
            raise ValidationError("tariff table is empty")
        self._categories = MappingProxyType(table)

    @property
    def categories(self) -> Mapping[str, TariffCategory]:
        return self._categories

    def __getitem__(self, category_id: str) -> TariffCategory:
        try:
            return self._categories[category_id]
        except KeyError:
            raise UnknownCategory(f"unknown tariff category {category_id}") from None

    def __contains__(self, category_id) -> bool:
        return category_id in self._categories

    def __iter__(self):
        return iter(self._categories.values())

    def __len__(self):
        return len(self._categories)

    def __eq__(self, other):
        if not isinstance(other, TariffTable):
            return NotImplemented
        return dict(self._categories) == dict(other._categories)

    def __repr__(self):
        return f"TariffTable({list(self._categories.values())!r})"


def contract_tonnage(d: DemandProfile) -> float:
    """Tons shipped over the contract: car load x cars per day x days."""
    return d.q_car * d.n_ij * d.t_days


def rail_charge(
    table: TariffTable, category: str, distance_km: float, tonnage: float
) -> float:
    """Freight charge ``(p1 + r2 * distance_km) * tonnage``."""
    cat = table[category]
    if distance_km < 0 or tonnage < 0:
        raise NegativeInput(
            f"distance ({distance_km}) and tonnage ({tonnage}) must be >= 0"
        )
    return (cat.p1 + cat.r2 * distance_km) * tonnage
