"""JSON frames: {"k": 2, "n": 3, "rows": [[1, 0, 1], [0, 1, 1]]}."""

from pydantic import BaseModel, ConfigDict, StrictInt, ValidationError

from hp0.matroid import FrameError


class FrameFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    k: StrictInt
    n: StrictInt
    rows: list[list[StrictInt]]


def _where(loc: tuple) -> str:
    """('rows', 1, 2) -> rows[2][3], 1-based like every other user-facing index."""
    head, *rest = loc
    return str(head) + "".join(f"[{i + 1}]" if isinstance(i, int) else f".{i}" for i in rest)


def parse(content: str) -> tuple[int, int, list[list[int]]]:
    try:
        doc = FrameFile.model_validate_json(content)
    except ValidationError as e:
        err = e.errors()[0]
        where = _where(err["loc"]) if err["loc"] else "document"
        raise FrameError(f"{where}: {err['msg']}") from None
    for i, row in enumerate(doc.rows, 1):
        if len(row) != doc.n:
            raise FrameError(f"rows[{i}]: expected {doc.n} entries, got {len(row)}")
    if len(doc.rows) != doc.k:
        raise FrameError(f"k={doc.k} but {len(doc.rows)} rows given")
    return doc.k, doc.n, doc.rows
