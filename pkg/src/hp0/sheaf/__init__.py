from hp0.sheaf.mes import MESReport, SheafCheck, mes_check
from hp0.sheaf.stalks import (
    RestrictionError,
    RestrictionMap,
    SheafModel,
    StalkData,
    m_stalk,
    rbc_stalk,
    restriction,
    stalk,
)
from hp0.sheaf.topology import PosetTopology, TopologyMode, build_topology

__all__ = [
    "MESReport",
    "PosetTopology",
    "RestrictionError",
    "RestrictionMap",
    "SheafCheck",
    "SheafModel",
    "StalkData",
    "TopologyMode",
    "build_topology",
    "m_stalk",
    "mes_check",
    "rbc_stalk",
    "restriction",
    "stalk",
]
